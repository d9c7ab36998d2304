#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zosc/arith.hpp"
#include "zosc/specfun.hpp"
#include "zosc/zeros.hpp"

namespace zosc {

/// Largest X for which summaries can fall back to the O(X^2) r_2 loop when the
/// tables were built without r_2.
inline constexpr std::int64_t kMaxDirectR2 = 10'000;
/// Largest X_max accepted by conversion_roundtrip.
inline constexpr std::int64_t kMaxRoundtrip = 100'000;
/// Constant in the envelope |R(X)| <= 5 X (log X)^3.
inline constexpr double kREnvelope = 5.0;

/// Prefix sums of r_2(n) and r_2(n)/n^2 plus the closed forms H, H_1 they are
/// compared with. Holds references to tables and consts.
///
/// The partial-summation integrals multiply E by X^2, so R and E below are
/// evaluated in long double from long double prefixes (same Lambda values as
/// the tables); H and H_1 come from the double-precision closed forms.
class GoldbachData {
 public:
  GoldbachData(const ArithTables& tables, const Constants& consts);

  [[nodiscard]] std::int64_t x_max() const { return x_max_; }
  [[nodiscard]] const ArithTables& tables() const { return *tables_; }
  [[nodiscard]] const Constants& consts() const { return *consts_; }

  // Step functions of real y >= 1 (sums over n <= y).
  [[nodiscard]] double S(double y) const;
  [[nodiscard]] double D(double y) const;
  // Closed-form H(y), H_1(y).
  [[nodiscard]] double H(double y) const;
  [[nodiscard]] double H1(double y) const;
  // The same closed forms in long double.
  [[nodiscard]] long double H_ext(long double y) const;
  [[nodiscard]] long double H1_ext(long double y) const;
  /// R(y) = S(y) - y^2/2 + 2 y^{3/2} H(y).
  [[nodiscard]] long double R(long double y) const;
  /// D(y) - log y - 2 y^{-1/2} H_1(y), i.e. E(y) + c_2.
  [[nodiscard]] long double E_plus_c2(long double y) const;

 private:
  std::size_t index(long double y) const;
  long double primed(const std::vector<long double>& prefix, long double y, long double w_at_y) const;
  const ArithTables* tables_;
  const Constants* consts_;
  std::int64_t x_max_;
  std::vector<long double> s_prefix_;
  std::vector<long double> d_prefix_;
  std::vector<long double> psi_prefix_;
  std::vector<long double> n_lambda_prefix_;
  std::vector<long double> lambda_over_n_prefix_;
};

struct GoldbachSummary {
  std::int64_t X = 0;
  double S = 0.0;
  double H_at_X = 0.0;
  double R = 0.0;
  double D = 0.0;
  double H1_at_X = 0.0;
  double E = 0.0;
  double c2_used = 0.0;
};

[[nodiscard]] GoldbachSummary summary_at(const GoldbachData& data, std::int64_t X, double c2);

/// Summaries over a grid, parallel over X.
[[nodiscard]] std::vector<GoldbachSummary> summaries(const GoldbachData& data, const std::vector<std::int64_t>& xs,
                                                     double c2);

/// sum over zeros of 4/(rho(rho+1)(rho-1)) using the first n_zeros ordinates.
struct RhoCubicSum {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t n_zeros = 0;
};

[[nodiscard]] RhoCubicSum rho_cubic_sum(const ZeroTable& table, std::size_t n_zeros);

/// The same sum without zeros: -2 (H(1) + H_1(1)).
[[nodiscard]] double rho_cubic_sum_closed(const ArithTables& tables, const Constants& consts);

/// Unit-interval integrals on [n, n+1] for n = 1 .. x_max - 1:
/// of y^{-3} R(y) and of y (E(y) + c_2).
struct UnitIntegrals {
  std::int64_t x_max = 0;
  std::vector<long double> r_over_cube;  // index n - 1
  std::vector<long double> y_times_e;    // index n - 1
};

[[nodiscard]] UnitIntegrals unit_integrals(const GoldbachData& data, std::int64_t x_max);

struct C2Estimate {
  double via_limit = 0.0;
  double via_zeros = 0.0;
  double spread = 0.0;
  // via_limit over the top quarter minus over the top half of the grid.
  double cauchy_defect = 0.0;
  std::size_t grid_points = 0;
  std::int64_t x_max = 0;
  RhoCubicSum rho_sum;
  double integral = 0.0;                  // int_1^{x_max} y^-3 R
  double integral_remainder_bound = 0.0;  // 2 int_{x_max}^inf y^-3 5 y (log y)^3
};

/// Grid ascending, every X in [1, data.x_max()].
[[nodiscard]] C2Estimate estimate_c2(const GoldbachData& data, const ZeroTable& table,
                                     const std::vector<std::int64_t>& grid, std::size_t n_zeros);

/// |int_0^X (psi(y) - y) dy - RHS| with the RHS built from H(X) and zeta'/zeta
/// at 0 and -1. Requires 1 <= X <= n_max.
[[nodiscard]] double chebyshev_integral_check(const ArithTables& tables, const Constants& consts, double X);

struct DifferenceStats {
  double mean = 0.0;
  double stddev = 0.0;
  double max_abs = 0.0;
};

struct RoundtripReport {
  std::int64_t x_max = 0;
  double c2_limit = 0.0;
  double c2_zeros = 0.0;
  RhoCubicSum rho_sum;
  DifferenceStats r_diff;  // R reconstructed from E minus R direct
  DifferenceStats e_diff;  // E reconstructed from R minus E direct
  // max |R diff| < 0.01 x_max
  bool r_within_budget = false;
  // both differences constant: stddev < 10% of the mean |difference|
  bool constant_difference = false;
  std::vector<std::int64_t> xs;
  std::vector<double> r_direct, r_rebuilt, e_direct, e_rebuilt;
};

/// Both partial-summation directions on the dense grid 1, 2, ..., X_max
/// (X_max <= 1e5). E uses c2_limit; the rebuilt R uses c2_zeros.
[[nodiscard]] RoundtripReport conversion_roundtrip(const GoldbachData& data, const ZeroTable& table,
                                                   const std::vector<std::int64_t>& grid, std::size_t n_zeros,
                                                   double c2_limit);

}  // namespace zosc
