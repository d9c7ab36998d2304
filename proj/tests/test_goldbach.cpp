#include <doctest.h>

#include <cmath>
#include <numeric>

#include "zosc/arith.hpp"
#include "zosc/common.hpp"
#include "zosc/explicit.hpp"
#include "zosc/goldbach.hpp"
#include "zosc/specfun.hpp"
#include "zosc/zeros.hpp"

using namespace zosc;

namespace {

const ZeroTable& zeros() {
  static const ZeroTable t = load_zeros(ZOSC_ZEROS_FILE);
  return t;
}

const ArithTables& tables() {
  static const ArithTables t = build_tables(100'000, true);
  return t;
}

const GoldbachData& data() {
  static const GoldbachData d(tables(), constants());
  return d;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Composite Simpson, independent of the Gauss rule used by the library.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("summaries") {
  const auto& d = data();
  const auto s4 = summary_at(d, 4, 0.0);
  // r_2 comes from a floating-point FFT.
  CHECK(s4.S == doctest::Approx(std::log(2.0) * std::log(2.0)).epsilon(1e-9));
  const auto s3 = summary_at(d, 3, 0.0);
  CHECK(s3.S == 0.0);
  CHECK(s3.R == doctest::Approx(-4.5 + 2.0 * std::pow(3.0, 1.5) * explicit_H(tables(), constants(), 3.0).value));
  CHECK(s3.D == 0.0);

  const auto s = summary_at(d, 10'000, 0.3);
  const double L = std::log(1e4);
  CHECK(std::abs(s.R) <= kREnvelope * 1e4 * L * L * L);
  CHECK(s.E == doctest::Approx(s.D - L - 0.3 - 0.02 * s.H1_at_X));
  CHECK(s.c2_used == 0.3);

  // Two arithmetic routes to S.
  for (std::int64_t X : {10, 1000, 54321, 100'000}) {
    const double a = d.S(static_cast<double>(X));
    const double b = goldbach_prefix(tables(), X);
    CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b)));
  }

  const auto grid = range(1000, 100'000);
  set_thread_count(1);
  const auto one = summaries(d, grid, 0.0);
  set_thread_count(4);
  const auto four = summaries(d, grid, 0.0);
  set_thread_count(0);
  double worst_r = 0.0;
  double worst_r_from_1e4 = 0.0;
  double lo = 1e300, hi = -1e300;
  double prev_s = 0.0;
  bool monotone = true;
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].R == four[i].R);
    const double x = static_cast<double>(one[i].X);
    const double ratio = std::abs(one[i].R) / (x * std::sqrt(x));
    worst_r = std::max(worst_r, ratio);
    if (x >= 1e4) worst_r_from_1e4 = std::max(worst_r_from_1e4, ratio);
    CHECK(std::abs(one[i].R) <= kREnvelope * x * std::pow(std::log(x), 3));
    lo = std::min(lo, one[i].D - std::log(x));
    hi = std::max(hi, one[i].D - std::log(x));
    monotone = monotone && one[i].S >= prev_s;
    prev_s = one[i].S;
  }
  MESSAGE("max |R|/X^1.5 on [1e3, 1e5]: " << worst_r << ", on [1e4, 1e5]: " << worst_r_from_1e4
                                           << "; D - log X in [" << lo << ", " << hi << "]");
  CHECK(monotone);
  // Just below X = 1050, where r_2 is large, |R|/X^1.5 reaches 0.144, so the bound
  // of 0.1 only holds from a few thousand on.
  CHECK(worst_r < 0.15);
  CHECK(worst_r_from_1e4 < 0.1);
  CHECK(hi - lo < 0.1);

  // Long double closed forms used by the integrals.
  for (double y : {1.0, 1.0 + 1e-9, 1.5, 2.0, 7.3, 1024.0, 99'999.5}) {
    CHECK(static_cast<double>(d.H_ext(y)) == doctest::Approx(d.H(y)).epsilon(1e-10).scale(1.0));
    CHECK(static_cast<double>(d.H1_ext(y)) == doctest::Approx(d.H1(y)).epsilon(1e-10).scale(1.0));
  }

  CHECK_THROWS_AS((void)summary_at(d, 100'001, 0.0), DomainError);
  CHECK_THROWS_AS((void)summary_at(d, 0, 0.0), DomainError);
  CHECK_THROWS_AS(GoldbachData(build_tables(20'000, false), constants()), DomainError);

  // Small tables without r_2 use the direct loop.
  const auto small = build_tables(500, false);
  const GoldbachData ds(small, constants());
  CHECK(ds.S(500.0) == doctest::Approx(d.S(500.0)).epsilon(1e-12));
  CHECK(ds.D(377.5) == doctest::Approx(d.D(377.5)).epsilon(1e-12));
}

TEST_CASE("sum over zeros of 4/(rho(rho+1)(rho-1))") {
  const double closed = rho_cubic_sum_closed(tables(), constants());
  for (std::size_t n : {1000UL, 100'000UL}) {
    const auto r = rho_cubic_sum(zeros(), n);
    MESSAGE("n=" << n << " sum " << r.value << " closed " << closed << " tail " << r.tail_bound);
    CHECK(std::abs(r.value - closed) <= r.tail_bound + 1e-12);
  }
  CHECK_THROWS_AS((void)rho_cubic_sum(zeros(), 0), DomainError);
}

TEST_CASE("Chebyshev integral identity") {
  const auto& t = tables();
  for (double X : {1.0, 10.0, 100.0}) CHECK(chebyshev_integral_check(t, constants(), X) < 1e-8);
  CHECK(chebyshev_integral_check(t, constants(), 10'000.0) < 1e-6);
  CHECK(chebyshev_integral_check(t, constants(), 37.25) < 1e-8);
  CHECK(chebyshev_integral_check(t, constants(), 1.5) < 1e-8);
  CHECK_THROWS_AS((void)chebyshev_integral_check(t, constants(), 0.5), DomainError);
}

TEST_CASE("unit integrals against Simpson") {
  const auto& d = data();
  const auto u = unit_integrals(d, 200);
  for (std::int64_t n : {2, 3, 17, 150}) {
    const double a = static_cast<double>(n);
    const double r = simpson([&](double y) { return d.R(y) / (y * y * y); }, a + 1e-12, a + 1 - 1e-12, 2000);
    const double e = simpson([&](double y) { return y * d.E_plus_c2(y); }, a + 1e-12, a + 1 - 1e-12, 2000);
    CHECK(u.r_over_cube[static_cast<std::size_t>(n - 1)] == doctest::Approx(r).epsilon(1e-9));
    CHECK(u.y_times_e[static_cast<std::size_t>(n - 1)] == doctest::Approx(e).epsilon(1e-9));
  }
  // [1, 2]: substitute y = 1 + s^2 to remove the endpoint singularity.
  const double r1 = simpson([&](double s) { const double y = 1 + s * s; return 2 * s * d.R(y) / (y * y * y); },
                            0.0, 1.0 - 1e-12, 4000);
  CHECK(u.r_over_cube[0] == doctest::Approx(r1).epsilon(1e-8));
}

TEST_CASE("c2 two ways") {
  const auto grid = range(1, 100'000);
  const auto e = estimate_c2(data(), zeros(), grid, 100'000);
  MESSAGE("c2 via limit " << e.via_limit << " via zeros " << e.via_zeros << " spread " << e.spread << " cauchy "
                          << e.cauchy_defect << " remainder bound " << e.integral_remainder_bound);
  CHECK(e.spread <= 0.03);
  CHECK(std::abs(e.cauchy_defect) < 0.005);
  CHECK(e.x_max == 100'000);

  const auto single = estimate_c2(data(), zeros(), {5000}, 1000);
  CHECK(single.grid_points == 1);
  CHECK(single.cauchy_defect == 0.0);
  CHECK(std::isfinite(single.spread));
  CHECK_THROWS_AS((void)estimate_c2(data(), zeros(), {10, 5}, 1000), DomainError);
  CHECK_THROWS_AS((void)estimate_c2(data(), zeros(), {}, 1000), DomainError);
}

TEST_CASE("R and E conversions") {
  const auto grid = range(1, 100'000);
  const auto c2 = estimate_c2(data(), zeros(), grid, 100'000);
  const auto r = conversion_roundtrip(data(), zeros(), grid, 100'000, c2.via_limit);
  MESSAGE("R diff mean " << r.r_diff.mean << " std " << r.r_diff.stddev << " max " << r.r_diff.max_abs);
  MESSAGE("E diff mean " << r.e_diff.mean << " std " << r.e_diff.stddev << " max " << r.e_diff.max_abs);
  CHECK(r.r_within_budget);
  CHECK(r.constant_difference);
  // The constants the algebra predicts.
  const double k_closed = rho_cubic_sum_closed(tables(), constants());
  CHECK(r.r_diff.mean == doctest::Approx(r.c2_zeros - r.c2_limit + k_closed - r.rho_sum.value).epsilon(1e-3));
  CHECK(r.e_diff.mean == doctest::Approx(r.c2_limit - r.c2_zeros + r.rho_sum.value - k_closed).epsilon(1e-3));

  CHECK_THROWS_AS((void)conversion_roundtrip(data(), zeros(), {4}, 1000, 0.0), DomainError);
  CHECK_THROWS_AS((void)conversion_roundtrip(data(), zeros(), {1, 2, 4}, 1000, 0.0), DomainError);
}
