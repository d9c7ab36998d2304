#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zosc/arith.hpp"
#include "zosc/mfunction.hpp"
#include "zosc/series.hpp"
#include "zosc/specfun.hpp"

namespace zosc {

/// Largest number of flow samples any sampling routine will take.
inline constexpr std::size_t kMaxFlowSamples = 100'000'000;

/// Histogram of Re f(k dt), k in [0, T/dt), over [-1.05 sum c, 1.05 sum c].
struct EmpiricalDistribution {
  Truncation pair_ref;
  std::size_t n_entries = 0;
  double T = 0.0;
  double dt = 0.0;
  std::size_t samples = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> masses;       // 201 bins, sum to 1
  std::vector<double> fine_counts;  // finer binning used for CDF distances
  // Samples outside [lo, hi]; only possible for complex spectra.
  std::size_t below_range = 0;
  std::size_t above_range = 0;
  double min_sample = 0.0;
  double max_sample = 0.0;
};

/// Requires dt <= 0.05 / max|omega|, T >= 1e4 dt and at most kMaxFlowSamples samples.
[[nodiscard]] EmpiricalDistribution sample_flow(const SpectralPair& pair, double T, double dt, std::size_t bins = 201);

/// sup over the fine bin edges of |F_empirical - F_density|, with F_density the
/// trapezoid-integrated CDF of M^Re.
[[nodiscard]] double cdf_distance(const EmpiricalDistribution& emp, const MFunctionDensity& density);

/// Largest step sample_flow accepts for this pair.
[[nodiscard]] double max_flow_step(const SpectralPair& pair);

/// Samples at the largest admissible step and returns cdf_distance.
[[nodiscard]] double distribution_check(const SpectralPair& pair, const MFunctionDensity& density, double T);

/// exp(-y f(0)) prod I0(y c_omega). Requires (S2) and y >= 0.
[[nodiscard]] double point_mass(const SpectralPair& pair, double y);

/// exp(-y f(0)) times the time average of exp(y Re f(t)) over [0, T).
[[nodiscard]] double point_mass_empirical(const SpectralPair& pair, double y, double T, double dt);

/// G(t, u) = g(t - u) - g(t) - g(-u) + g(0).
[[nodiscard]] cplx screw_kernel(const SpectralPair& pair, double t, double u);

struct GramReport {
  std::vector<double> points;
  double min_eigenvalue = 0.0;
  double matrix_norm = 0.0;
  bool psd = false;
};

using GFunction = std::function<cplx(double)>;

/// Gram matrix of the screw kernel built from g; psd iff the smallest
/// eigenvalue is >= -tol * ||G||. Points must be distinct, at most 200.
[[nodiscard]] GramReport gram_psd_check(const GFunction& g, const std::vector<double>& points, double tol = 1e-8);
[[nodiscard]] GramReport gram_psd_check(const SpectralPair& pair, const std::vector<double>& points,
                                        double tol = 1e-8);

/// g(t) = H_1(e^|t|) - H_1(1) from the closed form (no zeros involved).
/// Valid for |t| <= log(tables.n_max); the kernel needs differences, so
/// Gram points should lie in [-log(n_max)/2, log(n_max)/2].
[[nodiscard]] GFunction exact_g_h1(const ArithTables& tables, const Constants& consts);

/// |xi* G xi - sum a |sum_j xi_j (e^{i t_j omega} - 1)|^2| / max(1, |rhs|)
/// for a pair with real spectrum.
[[nodiscard]] double quadratic_form_residual(const SpectralPair& pair, const std::vector<double>& points,
                                             const std::vector<cplx>& xi);

struct ViolationSearch {
  std::uint64_t seed = 0;
  std::size_t sets_tried = 0;
  bool violation_found = false;
  double most_negative_ratio = 0.0;  // min over sets of min_eigenvalue / ||G||
};

/// Random point sets of the given size, uniform in [-range, range], until a
/// PSD violation appears or the budget runs out.
[[nodiscard]] ViolationSearch search_psd_violation(const SpectralPair& pair, std::uint64_t seed,
                                                   std::size_t budget = 200, std::size_t set_size = 20,
                                                   double range = 50.0);

}  // namespace zosc
