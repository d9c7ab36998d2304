#pragma once

namespace zosc {

/// Constants consumed by the closed-form evaluators. Computed once.
struct Constants {
  double euler_gamma;               // C_0
  double zeta_prime_minus1;         // zeta'(-1)
  double log_2pi;
  double zeta_logderiv_half;        // (zeta'/zeta)(1/2)
  double zeta_logderiv_deriv_half;  // (zeta'/zeta)'(1/2)
};

/// Process-wide cached constants.
[[nodiscard]] const Constants& constants();

/// J_0(x) for |x| <= 1e6.
[[nodiscard]] double bessel_j0(double x);

/// I_0(x) for |x| <= 700.
[[nodiscard]] double bessel_i0(double x);

/// Hurwitz-Lerch Phi(z, s, a) = sum_{n >= 0} z^n (n + a)^(-s), |z| < 1, a > 0.
[[nodiscard]] double lerch_phi(double z, double s, double a);

/// Phi on the closed interval 0 <= z <= 1 for integer s >= 1 (z = 1 needs
/// s >= 2, where Phi(1, s, a) is the Hurwitz zeta value). Near z = 1 the
/// logarithmic expansion in log z is used instead of the direct sum.
[[nodiscard]] double lerch_phi_closed(double z, int s, double a);

/// Phi(z, 1, a) - Phi(z, 1, b) for 0 <= z <= 1; the z = 1 value is the right
/// limit psi(b) - psi(a).
[[nodiscard]] double lerch_phi1_difference(double z, double a, double b);

/// Supported open interval for zeta_logderiv.
inline constexpr double kLogDerivMin = -1.5;
inline constexpr double kLogDerivMax = 4.0;

/// order 0: zeta'(s)/zeta(s); order 1: its derivative. s in (-1.5, 4), s != 1.
[[nodiscard]] double zeta_logderiv(double s, int order);

/// sum_{n >= 1} x^(2n) / (2n (2n - 1)) for |x| < 1.
[[nodiscard]] double artanh_series_sum(double x);

namespace detail {

/// zeta(s), zeta'(s), zeta''(s) by Euler-Maclaurin with n_direct direct terms
/// and n_bernoulli correction terms.
struct ZetaJet {
  double value;
  double d1;
  double d2;
};
[[nodiscard]] ZetaJet zeta_jet(double s, int n_direct = 10, int n_bernoulli = 12);

/// artanh_series_sum extended to its right limit log 2 at |x| = 1.
[[nodiscard]] double artanh_series_sum_closed(double x);

/// Digamma function.
[[nodiscard]] double digamma(double x);

}  // namespace detail

}  // namespace zosc
