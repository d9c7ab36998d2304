#include "zosc/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "zosc/explicit.hpp"
#include "zosc/parallel.hpp"

namespace zosc {

namespace {

constexpr std::size_t kFineBins = 8192;
constexpr std::size_t kMaxGramPoints = 200;

std::size_t checked_sample_count(const SpectralPair& pair, double T, double dt) {
  if (!(dt > 0.0) || !(T > 0.0)) throw DomainError("sampling: T and dt must be positive");
  if (dt > max_flow_step(pair) * (1.0 + 1e-12))
    throw DomainError("sampling: dt must not exceed 0.05 / max|omega| = " + std::to_string(max_flow_step(pair)));
  if (T < 1e4 * dt * (1.0 - 1e-12)) throw DomainError("sampling: T must be at least 1e4 dt");
  const double n = std::floor(T / dt);
  if (n > static_cast<double>(kMaxFlowSamples))
    throw DomainError("sampling: " + std::to_string(static_cast<long long>(n)) +
                      " samples exceed the cap of 1e8; reduce T or raise dt");
  return static_cast<std::size_t>(n);
}

double log_i0_product(const SpectralPair& pair, double y) {
  CompensatedSum s;
  for (double c : pair.abs_coeffs()) {
    const double x = y * c;
    if (x > 700.0) throw NumericalError("point_mass: I0 argument too large");
    s += std::log(bessel_i0(x));
  }
  return s.value();
}

void require_s2(const SpectralPair& pair, const char* who) {
  if (!pair.satisfies_s2())
    throw DomainError(std::string(who) + ": the pair must have a real spectrum and positive coefficients");
}

}  // namespace

double max_flow_step(const SpectralPair& pair) { return 0.05 / pair.max_abs_omega(); }

EmpiricalDistribution sample_flow(const SpectralPair& pair, double T, double dt, std::size_t bins) {
  if (bins < 2) throw DomainError("sample_flow: needs at least 2 bins");
  const std::size_t n = checked_sample_count(pair, T, dt);
  EmpiricalDistribution e;
  e.pair_ref = pair.truncation();
  e.n_entries = pair.size();
  e.T = T;
  e.dt = dt;
  e.samples = n;
  e.hi = 1.05 * pair.m1_sum_abs();
  e.lo = -e.hi;
  std::vector<std::size_t> coarse(bins, 0);
  std::vector<std::size_t> fine(kFineBins, 0);
  e.min_sample = std::numeric_limits<double>::infinity();
  e.max_sample = -std::numeric_limits<double>::infinity();
  const double width = e.hi - e.lo;
  stream_re_f(pair, 0.0, dt, n, [&](std::size_t, std::span<const double> v) {
    for (double x : v) {
      e.min_sample = std::min(e.min_sample, x);
      e.max_sample = std::max(e.max_sample, x);
      if (x < e.lo) {
        ++e.below_range;
        continue;
      }
      if (x > e.hi) {
        ++e.above_range;
        continue;
      }
      const double r = (x - e.lo) / width;
      ++coarse[std::min(bins - 1, static_cast<std::size_t>(r * static_cast<double>(bins)))];
      ++fine[std::min(kFineBins - 1, static_cast<std::size_t>(r * static_cast<double>(kFineBins)))];
    }
  });
  e.masses.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) e.masses[b] = static_cast<double>(coarse[b]) / static_cast<double>(n);
  e.fine_counts.assign(fine.begin(), fine.end());
  return e;
}

double cdf_distance(const EmpiricalDistribution& emp, const MFunctionDensity& d) {
  // Cumulative trapezoid of M^Re / sqrt(2 pi) on the density grid.
  const std::size_t N = d.u_grid.size();
  if (N < 2) throw DomainError("cdf_distance: empty density");
  std::vector<double> cdf(N, 0.0);
  const double scale = 1.0 / std::sqrt(2.0 * kPi);
  for (std::size_t k = 1; k < N; ++k)
    cdf[k] = cdf[k - 1] + 0.5 * (d.m_re[k] + d.m_re[k - 1]) * (d.u_grid[k] - d.u_grid[k - 1]) * scale;
  auto model = [&](double x) {
    if (x <= d.u_grid.front()) return 0.0;
    if (x >= d.u_grid.back()) return cdf.back();
    const double pos = (x - d.u_grid.front()) / (d.u_grid[1] - d.u_grid[0]);
    const auto k = std::min(N - 2, static_cast<std::size_t>(pos));
    const double frac = pos - static_cast<double>(k);
    return cdf[k] + frac * (cdf[k + 1] - cdf[k]);
  };
  const double n = static_cast<double>(emp.samples);
  double worst = 0.0;
  double cum = static_cast<double>(emp.below_range);
  const std::size_t F = emp.fine_counts.size();
  const double w = (emp.hi - emp.lo) / static_cast<double>(F);
  for (std::size_t b = 0; b <= F; ++b) {
    const double x = emp.lo + static_cast<double>(b) * w;
    worst = std::max(worst, std::abs(cum / n - model(x)));
    if (b < F) cum += emp.fine_counts[b];
  }
  return worst;
}

double distribution_check(const SpectralPair& pair, const MFunctionDensity& density, double T) {
  return cdf_distance(sample_flow(pair, T, max_flow_step(pair)), density);
}

double point_mass(const SpectralPair& pair, double y) {
  require_s2(pair, "point_mass");
  if (!(y >= 0.0)) throw DomainError("point_mass: y must be nonnegative");
  if (y == 0.0) return 1.0;
  const double f0 = f_of_t(pair, 0.0).real();
  const double v = std::exp(-y * f0 + log_i0_product(pair, y));
  if (!std::isfinite(v)) throw NumericalError("point_mass: overflow");
  return v;
}

double point_mass_empirical(const SpectralPair& pair, double y, double T, double dt) {
  require_s2(pair, "point_mass_empirical");
  if (!(y >= 0.0)) throw DomainError("point_mass_empirical: y must be nonnegative");
  const std::size_t n = checked_sample_count(pair, T, dt);
  if (y == 0.0) return 1.0;
  const double f0 = f_of_t(pair, 0.0).real();
  // exp(y (Re f - f(0))) <= 1 for (S2) pairs, so nothing overflows.
  CompensatedSum acc;
  stream_re_f(pair, 0.0, dt, n, [&](std::size_t, std::span<const double> v) {
    for (double x : v) acc += std::exp(y * (x - f0));
  });
  return acc.value() / static_cast<double>(n);
}

cplx screw_kernel(const SpectralPair& pair, double t, double u) {
  return g_of_t(pair, t - u) - g_of_t(pair, t) - g_of_t(pair, -u) + g_of_t(pair, 0.0);
}

GramReport gram_psd_check(const GFunction& g, const std::vector<double>& points, double tol) {
  const std::size_t n = points.size();
  if (n == 0 || n > kMaxGramPoints) throw DomainError("gram_psd_check: needs 1..200 points");
  if (std::set<double>(points.begin(), points.end()).size() != n)
    throw DomainError("gram_psd_check: points must be distinct");
  std::vector<cplx> g_at(n);
  std::vector<cplx> g_neg(n);
  for (std::size_t i = 0; i < n; ++i) {
    g_at[i] = g(points[i]);
    g_neg[i] = g(-points[i]);
  }
  const cplx g0 = g(0.0);
  Eigen::MatrixXcd G(n, n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) G(i, j) = g(points[i] - points[j]) - g_at[i] - g_neg[j] + g0;
  });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(G, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("gram_psd_check: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  GramReport r;
  r.points = points;
  r.min_eigenvalue = ev.minCoeff();
  r.matrix_norm = ev.cwiseAbs().maxCoeff();
  r.psd = r.min_eigenvalue >= -tol * r.matrix_norm;
  return r;
}

GramReport gram_psd_check(const SpectralPair& pair, const std::vector<double>& points, double tol) {
  return gram_psd_check([&pair](double t) { return g_of_t(pair, t); }, points, tol);
}

GFunction exact_g_h1(const ArithTables& tables, const Constants& consts) {
  const double h1_at_one = explicit_H1(tables, consts, 1.0).value;
  const double limit = std::log(static_cast<double>(tables.n_max));
  return [&tables, &consts, h1_at_one, limit](double t) -> cplx {
    const double a = std::abs(t);
    if (a > limit) throw DomainError("exact_g_h1: |t| exceeds log(n_max)");
    if (a == 0.0) return {0.0, 0.0};
    return {explicit_H1(tables, consts, std::exp(a)).value - h1_at_one, 0.0};
  };
}

double quadratic_form_residual(const SpectralPair& pair, const std::vector<double>& points,
                               const std::vector<cplx>& xi) {
  if (!pair.real_spectrum()) throw DomainError("quadratic_form_residual: needs a real spectrum");
  if (xi.size() != points.size()) throw DomainError("quadratic_form_residual: size mismatch");
  const std::size_t n = points.size();
  CompensatedComplexSum lhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lhs += std::conj(xi[i]) * screw_kernel(pair, points[i], points[j]) * xi[j];
  CompensatedComplexSum rhs;
  for (const auto& e : pair.entries()) {
    cplx inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) inner += xi[j] * (std::exp(cplx(0.0, points[j]) * e.omega) - 1.0);
    rhs += e.coeff * std::norm(inner);
  }
  const cplx r = rhs.value();
  return std::abs(lhs.value() - r) / std::max(1.0, std::abs(r));
}

ViolationSearch search_psd_violation(const SpectralPair& pair, std::uint64_t seed, std::size_t budget,
                                     std::size_t set_size, double range) {
  ViolationSearch out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-range, range);
  for (std::size_t s = 0; s < budget; ++s) {
    std::vector<double> pts(set_size);
    for (auto& p : pts) p = u(rng);
    ++out.sets_tried;
    const auto r = gram_psd_check(pair, pts);
    const double ratio = r.matrix_norm > 0.0 ? r.min_eigenvalue / r.matrix_norm : 0.0;
    out.most_negative_ratio = s == 0 ? ratio : std::min(out.most_negative_ratio, ratio);
    if (!r.psd) {
      out.violation_found = true;
      break;
    }
  }
  return out;
}

}  // namespace zosc
