#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "zosc/common.hpp"
#include "zosc/zeros.hpp"

namespace zosc {

/// Which zero-indexed series a zeta pair represents.
struct SeriesKind {
  enum class Type { H, Hl };
  Type type = Type::H;
  double ell = 0.0;  // used when type == Hl

  static SeriesKind h() { return {Type::H, 0.0}; }
  static SeriesKind hl(double ell) { return {Type::Hl, ell}; }
  [[nodiscard]] std::string name() const;
};

struct PairEntry {
  cplx omega;
  cplx coeff;
};

/// Provenance of a pair built from a zero table.
struct Truncation {
  std::string source;
  std::size_t n_zeros = 0;
  double gamma_max = 0.0;
};

/// A pair (Omega, a): frequencies with nonzero coefficients. Structural flags
/// are recomputed from the entries on construction.
class SpectralPair {
 public:
  /// Throws DomainError on an empty entry list, a zero coefficient or a zero
  /// frequency.
  explicit SpectralPair(std::vector<PairEntry> entries, Truncation truncation = {});

  [[nodiscard]] std::span<const PairEntry> entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const Truncation& truncation() const { return truncation_; }

  [[nodiscard]] double m1_sum_abs() const { return m1_; }  // sum |a|
  [[nodiscard]] bool satisfies_m2() const { return true; }  // finite pairs
  [[nodiscard]] double c() const { return c_; }             // sup |Im omega|
  [[nodiscard]] bool satisfies_m3() const { return m3_; }
  [[nodiscard]] bool satisfies_s1() const { return s1_; }
  [[nodiscard]] bool satisfies_s2() const { return s2_; }
  [[nodiscard]] bool real_spectrum() const { return real_; }
  [[nodiscard]] double max_abs_omega() const { return max_abs_omega_; }

  /// c_omega = |a(omega)| per entry.
  [[nodiscard]] std::vector<double> abs_coeffs() const;
  /// beta_omega = arg a(omega) per entry.
  [[nodiscard]] std::vector<double> coeff_args() const;

 private:
  std::vector<PairEntry> entries_;
  Truncation truncation_;
  double m1_ = 0.0;
  double c_ = 0.0;
  double max_abs_omega_ = 0.0;
  bool m3_ = false;
  bool s1_ = false;
  bool s2_ = false;
  bool real_ = false;
};

struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t n_used = 0;
  double gamma_max = 0.0;
};

/// Coefficient of the zeta pair at ordinate gamma (omega = -gamma) with
/// multiplicity m.
[[nodiscard]] cplx zeta_coefficient(const SeriesKind& kind, double gamma, int m);

/// Pair built from the first n ordinates: omega = -gamma (so that
/// Re f(t) = H(e^t)), coefficients a_H = 2m/(rho(rho+1)) or
/// a_Hl = 2m/((1/2 - l)^2 + gamma^2). Assumes every ordinate is on the
/// critical line.
[[nodiscard]] SpectralPair make_zeta_pair(const ZeroTable& table, const SeriesKind& kind, std::size_t n);

/// Majorant of the dropped tail sum_{gamma > T} |a(gamma)| for zeta pairs.
[[nodiscard]] double tail_bound(double T);

/// f(t) = sum a e^{-i t omega}.
[[nodiscard]] cplx f_of_t(const SpectralPair& pair, double t);
/// g(t) = f(t) - f(0); exactly 0 at t = 0.
[[nodiscard]] cplx g_of_t(const SpectralPair& pair, double t);

/// H(X) or H_l(X) from the first n zeros with the tail bound B(gamma_n).
[[nodiscard]] TruncatedValue h_series(const ZeroTable& table, const SeriesKind& kind, double X, std::size_t n);

/// Q(z) = (1/2)[sum a(-z omega)/(z - omega) + sum conj(a) z conj(omega)/(z + conj(omega))].
[[nodiscard]] cplx q_function(const SpectralPair& pair, cplx z);

struct BoundednessReport {
  double sup_abs_re_g = 0.0;
  double growth_exponent_estimate = 0.0;
};

/// sup |Re g| over a uniform grid on [0, T] and the log-linear slope of the
/// running maximum over the second half of the grid.
[[nodiscard]] BoundednessReport boundedness_probe(const SpectralPair& pair, double T, std::size_t samples);

/// Re f(t0 + k dt) for k in [0, count), streamed in fixed chunks. The
/// callback receives (first index, values of the chunk). Phases are re-synced
/// exactly at every chunk start, so the output is independent of the thread
/// count.
void stream_re_f(const SpectralPair& pair, double t0, double dt, std::size_t count,
                 const std::function<void(std::size_t, std::span<const double>)>& consume);

/// Chunk length used by stream_re_f.
inline constexpr std::size_t kStreamChunk = 8192;

}  // namespace zosc
