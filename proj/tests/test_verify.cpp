#include <doctest.h>

#include <cmath>
#include <random>

#include "zosc/arith.hpp"
#include "zosc/common.hpp"
#include "zosc/mfunction.hpp"
#include "zosc/specfun.hpp"
#include "zosc/verify.hpp"
#include "zosc/zeros.hpp"

using namespace zosc;

namespace {

const ZeroTable& zeros() {
  static const ZeroTable t = load_zeros(ZOSC_ZEROS_FILE);
  return t;
}

SpectralPair pair_from(const std::vector<double>& w, const std::vector<double>& a) {
  std::vector<PairEntry> e;
  for (std::size_t i = 0; i < w.size(); ++i) e.push_back({cplx(w[i], 0), cplx(a[i], 0)});
  return SpectralPair(e);
}

SpectralPair lic_pair() {
  return pair_from({1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0), std::sqrt(11.0)},
                   std::vector<double>(6, 1.0));
}

std::vector<double> random_points(std::uint64_t seed, std::size_t n, double range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-range, range);
  std::vector<double> p(n);
  for (auto& x : p) x = u(rng);
  return p;
}

}  // namespace

TEST_CASE("flow sampling") {
  // Re f = cos t follows the arcsine law F(x) = 1/2 + asin(x)/pi.
  const auto one = pair_from({1.0}, {1.0});
  const auto e = sample_flow(one, 1e4, 0.05);
  CHECK(e.samples == 200000);
  double total = 0.0;
  for (double m : e.masses) total += m;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.masses.size() == 201);
  double cum = 0.0;
  double worst = 0.0;
  const double w = (e.hi - e.lo) / static_cast<double>(e.fine_counts.size());
  for (std::size_t b = 0; b < e.fine_counts.size(); ++b) {
    cum += e.fine_counts[b];
    const double x = std::clamp(e.lo + (b + 1) * w, -1.0, 1.0);
    worst = std::max(worst, std::abs(cum / e.samples - (0.5 + std::asin(x) / kPi)));
  }
  CHECK(worst < 0.01);

  // Zeta pair: every sample obeys the triangle inequality. T is limited by
  // the sample cap at the required step.
  const auto z = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 50);
  const double dt = max_flow_step(z);
  const double T = std::floor(static_cast<double>(kMaxFlowSamples) * dt);
  const auto ez = sample_flow(z, T, dt);
  // t = 0 attains sum c; allow for summation-order rounding there.
  CHECK(ez.min_sample >= -z.m1_sum_abs() * (1 + 1e-12));
  CHECK(ez.max_sample <= z.m1_sum_abs() * (1 + 1e-12));
  CHECK(ez.below_range + ez.above_range == 0);

  CHECK_THROWS_AS((void)sample_flow(z, 1e5, dt), DomainError);  // over the cap
  CHECK_THROWS_AS((void)sample_flow(one, 1e4, 0.06), DomainError);
  CHECK_THROWS_AS((void)sample_flow(one, 100.0, 0.05), DomainError);
}

TEST_CASE("distribution against the M-function") {
  const auto lic = lic_pair();
  const auto d = invert_to_m_re(lic);
  const double dist = distribution_check(lic, d, 2e5);
  MESSAGE("LIC pair CDF distance: " << dist);
  CHECK(dist < 0.02);
  const double half = distribution_check(lic, d, 1e5);
  CHECK(dist <= half + 0.005);

  // Rationally dependent frequencies: the torus flow is not equidistributed.
  const auto dep = pair_from({1, 2, 3, 4, 5, 6}, std::vector<double>(6, 1.0));
  const double dep_dist = distribution_check(dep, invert_to_m_re(dep), 2e5);
  MESSAGE("dependent pair CDF distance: " << dep_dist);
  CHECK(dep_dist > 0.05);

  const auto z = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 20);
  const double dt = max_flow_step(z);
  const double T = std::floor(static_cast<double>(kMaxFlowSamples) * dt);
  const double zd = distribution_check(z, invert_to_m_re(z), T);
  MESSAGE("zeta H1 (20 zeros) CDF distance at T=" << T << ": " << zd);
  CHECK(zd < 0.02);
}

TEST_CASE("point mass") {
  const auto one = pair_from({1.0}, {1.0});
  const double closed = std::exp(-1.0) * 1.266065877752008;
  CHECK(point_mass(one, 1.0) == doctest::Approx(closed).epsilon(1e-14));
  CHECK(point_mass(one, 0.0) == 1.0);
  CHECK(point_mass(one, 1e-12) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(point_mass_empirical(one, 0.0, 1e4, 0.05) == 1.0);
  CHECK(std::abs(point_mass_empirical(one, 1.0, 2e5, 0.05) / closed - 1.0) < 0.01);

  const auto lic = pair_from({1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0), std::sqrt(11.0)},
                             {1.0, 0.9, 0.8, 0.7, 0.6, 0.5});
  const double pm = point_mass(lic, 1.0);
  const double pe = point_mass_empirical(lic, 1.0, 2e5, max_flow_step(lic));
  MESSAGE("six-entry point mass formula " << pm << " empirical " << pe);
  CHECK(std::abs(pe / pm - 1.0) < 0.02);

  const auto z1 = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 10000);
  const double v = point_mass(z1, 1.0);
  CHECK(v > 0.95);
  CHECK(v < 0.96);
  const auto z2 = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 20000);
  CHECK(std::abs(point_mass(z2, 1.0) / v - 1.0) < 0.01);

  CHECK_THROWS_AS((void)point_mass(make_zeta_pair(zeros(), SeriesKind::h(), 10), 1.0), DomainError);
}

TEST_CASE("screw kernel") {
  const auto one = pair_from({1.0}, {1.0});
  CHECK(std::abs(screw_kernel(one, kPi, kPi) - cplx(4, 0)) < 1e-14);
  const auto z = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 300);
  const SpectralPair closed({{cplx(1, 0.1), cplx(1, 0.5)}, {cplx(1, -0.1), cplx(1, -0.5)},
                             {cplx(-2.5, 0), cplx(0.3, 0)}});
  for (const auto* p : {&z, &closed}) {
    CHECK(screw_kernel(*p, 0.0, 1.1) == cplx(0, 0));
    CHECK(std::abs(screw_kernel(*p, 2.3, 0.0)) < 1e-15);
    CHECK(std::abs(screw_kernel(*p, -0.4, 1.3) - std::conj(screw_kernel(*p, 1.3, -0.4))) < 1e-12);
  }
  for (double t : {-3.0, 0.7, 12.0}) {
    for (double u : {-1.0, 2.5}) {
      cplx direct = 0.0;
      for (const auto& e : z.entries())
        direct += e.coeff * (std::exp(cplx(0, -t) * e.omega) - 1.0) * (std::exp(cplx(0, u) * e.omega) - 1.0);
      CHECK(std::abs(screw_kernel(z, t, u) - direct) < 1e-10);
    }
    const cplx diag = screw_kernel(z, t, t);
    CHECK(std::abs(diag.imag()) < 1e-15);
    CHECK(diag.real() >= 0.0);
  }
}

TEST_CASE("Gram matrices") {
  const auto z = make_zeta_pair(zeros(), SeriesKind::hl(1.0), 1000);
  const auto r = gram_psd_check(z, random_points(1, 40, 50.0));
  CHECK(r.min_eigenvalue >= -1e-10 * r.matrix_norm);
  CHECK(r.psd);

  const auto tables = build_tables(1'000'000, false);
  const auto g = exact_g_h1(tables, constants());
  const double half_range = 0.5 * std::log(1e6);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto report = gram_psd_check(g, random_points(seed, 40, half_range));
    CHECK(report.psd);
  }
  CHECK_THROWS_AS((void)g(14.0), DomainError);
  // Truncated and exact g agree up to the tail of the zero sum.
  const auto zfull = make_zeta_pair(zeros(), SeriesKind::hl(1.0), zeros().size());
  for (double t : {0.5, -2.0, 6.0}) {
    const double tb = tail_bound(zeros().max_gamma());
    CHECK(std::abs(g(t).real() - g_of_t(zfull, t).real()) <= 2 * tb + 1e-9);
  }

  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (const auto* p : {&z}) {
    const auto pts = random_points(4, 12, 30.0);
    std::vector<cplx> xi(pts.size());
    for (auto& x : xi) x = cplx(nd(rng), nd(rng));
    CHECK(quadratic_form_residual(*p, pts, xi) < 1e-9);
  }
  const auto lic = lic_pair();
  const auto pts = random_points(5, 10, 20.0);
  std::vector<cplx> xi(pts.size());
  for (auto& x : xi) x = cplx(nd(rng), nd(rng));
  CHECK(quadratic_form_residual(lic, pts, xi) < 1e-9);

  const auto negative = pair_from({1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0), std::sqrt(11.0)},
                                  {1, 1, 1, 1, 1, -1});
  const auto search = search_psd_violation(negative, 11);
  CHECK(search.violation_found);
  CHECK(search.sets_tried <= 200);
  const auto positive_search = search_psd_violation(lic, 11, 20);
  CHECK_FALSE(positive_search.violation_found);

  CHECK_THROWS_AS((void)gram_psd_check(z, {1.0, 2.0, 1.0}), DomainError);
}
