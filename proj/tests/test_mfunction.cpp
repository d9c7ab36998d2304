#include <doctest.h>

#include <cmath>

#include "zosc/common.hpp"
#include "zosc/mfunction.hpp"
#include "zosc/series.hpp"
#include "zosc/zeros.hpp"

using namespace zosc;

namespace {

const ZeroTable& zeros() {
  static const ZeroTable t = load_zeros(ZOSC_ZEROS_FILE);
  return t;
}

SpectralPair six_entry_pair() {
  const double w[6] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0), std::sqrt(11.0)};
  const double a[6] = {1.0, 0.9, 0.8, 0.7, 0.6, 0.5};
  std::vector<PairEntry> e;
  for (int i = 0; i < 6; ++i) e.push_back({cplx(w[i], 0), cplx(a[i], 0)});
  return SpectralPair(e);
}

double power_series(double x, double sign) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    term *= sign * x * x / (4.0 * k * k);
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("characteristic function") {
  const SpectralPair one({{cplx(3, 0), cplx(0, 1)}});
  CHECK(mtilde_radial(one, 0.0) == 1.0);
  CHECK(mtilde_radial(one, 1.0) == doctest::Approx(power_series(1.0, -1)).epsilon(1e-13));
  CHECK(mtilde_at_imaginary(one, 0.0) == 1.0);
  CHECK(mtilde_at_imaginary(one, 1.0) == doctest::Approx(power_series(1.0, 1)).epsilon(1e-13));
  const auto p = six_entry_pair();
  for (double y : {0.3, 1.0, 4.0}) {
    CHECK(mtilde_at_imaginary(p, y) >= 1.0);
    CHECK(mtilde_at_imaginary(p, -y) == doctest::Approx(mtilde_at_imaginary(p, y)).epsilon(1e-15));
    CHECK(mtilde_radial(p, -y) == mtilde_radial(p, y));
    CHECK(std::abs(mtilde_radial(p, y)) <= 1.0);
  }
  const SpectralPair huge({{cplx(1, 0), cplx(1e3, 0)}});
  CHECK_THROWS_AS((void)mtilde_at_imaginary(huge, 1.0), NumericalError);
}

TEST_CASE("inversion of a six-entry pair") {
  const auto pair = six_entry_pair();
  const auto d = invert_to_m_re(pair);
  CHECK(d.u_grid.size() == 2001);
  CHECK(d.mtilde[0] == 1.0);
  CHECK(d.z_grid[0] == 0.0);
  CHECK(d.tail_bound < 1e-8);
  CHECK(d.support_radius == doctest::Approx(4.5));
  CHECK(std::abs(d.mass - 1.0) < 1e-4);

  // Second moment against a long time average of (Re f)^2.
  const double T = 2e5;
  const double dt = 0.05;
  const auto n = static_cast<std::size_t>(T / dt);
  CompensatedSum sq;
  stream_re_f(pair, 0.0, dt, n, [&](std::size_t, std::span<const double> v) {
    for (double x : v) sq += x * x;
  });
  const double time_avg = sq.value() / static_cast<double>(n);
  CHECK(std::abs(d.second_moment - time_avg) < 1e-4);
  double half_sum_sq = 0.0;
  for (double c : pair.abs_coeffs()) half_sum_sq += 0.5 * c * c;
  CHECK(std::abs(d.second_moment - half_sum_sq) < 1e-4);

  const auto diag = diagnose(d);
  CHECK(diag.min_value >= -1e-6);
  CHECK(diag.symmetry_defect < 1e-6);
  CHECK(diag.leakage < 1e-6);

  for (double z : {0.5, 1.0, 5.0}) {
    const double back = integrate_density(d, [z](double u) { return std::cos(z * u); });
    CHECK(std::abs(back - mtilde_radial(pair, z)) < 1e-4);
  }
  const double expo = integrate_density(d, [](double u) { return std::exp(0.5 * u); });
  CHECK(std::abs(expo - mtilde_at_imaginary(pair, 0.5)) < 1e-3);
}

TEST_CASE("inversion of zeta H1 pairs") {
  const auto p1 = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 200);
  const auto p2 = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 400);
  // Same grid for both so the samples line up.
  const UGridSpec grid{2001, 1.1 * p2.m1_sum_abs()};
  const auto d1 = invert_to_m_re(p1, grid);
  const auto d2 = invert_to_m_re(p2, grid);
  double sup = 0.0;
  for (std::size_t k = 0; k < d1.m_re.size(); ++k) sup = std::max(sup, std::abs(d1.m_re[k] - d2.m_re[k]));
  CHECK(sup <= 10.0 * tail_bound(zeros().gamma(199)));
  for (const auto* d : {&d1, &d2}) {
    CHECK(std::abs(d->mass - 1.0) < 1e-4);
    const auto diag = diagnose(*d);
    CHECK(diag.min_value >= -1e-6);
    CHECK(diag.symmetry_defect < 1e-6);
    CHECK(diag.leakage < 1e-6);
  }
}

TEST_CASE("inversion refuses small pairs") {
  const SpectralPair four({{cplx(1, 0), cplx(1, 0)}, {cplx(2, 0), cplx(1, 0)}, {cplx(3, 0), cplx(1, 0)},
                           {cplx(5, 0), cplx(1, 0)}});
  CHECK_THROWS_AS((void)invert_to_m_re(four), DomainError);
  CHECK_THROWS_AS((void)invert_to_m_re(six_entry_pair(), UGridSpec{2000, 0.0}), DomainError);
}
