#include "zosc/specfun.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include <array>
#include <cmath>
#include <string>

#include "zosc/common.hpp"

namespace zosc {

namespace {

// Value and first two derivatives in s. Extended precision absorbs the
// cancellation between the direct sum and the N^(1-s)/(s-1) term at negative s.
struct Jet {
  long double v = 0.0L;
  long double d1 = 0.0L;
  long double d2 = 0.0L;
};

Jet operator+(Jet a, Jet b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
Jet operator*(long double c, Jet a) { return {c * a.v, c * a.d1, c * a.d2}; }
Jet operator*(Jet a, Jet b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
Jet operator/(Jet a, Jet b) {
  const long double q = a.v / b.v;
  const long double q1 = (a.d1 - q * b.d1) / b.v;
  const long double q2 = (a.d2 - 2.0L * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

// x^(c - s) as a jet in s.
Jet power_jet(long double x, long double c, long double s) {
  const long double lx = std::log(x);
  const long double v = std::exp((c - s) * lx);
  return {v, -lx * v, lx * lx * v};
}

double bernoulli_number(int m) {
  if (m == 0) return 1.0;
  if (m == 1) return -0.5;
  if (m % 2 == 1) return 0.0;
  return boost::math::bernoulli_b2n<double>(m / 2);
}

double bernoulli_polynomial(int m, double a) {
  double sum = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double b = bernoulli_number(j);
    if (b == 0.0) continue;
    sum += boost::math::binomial_coefficient<double>(static_cast<unsigned>(m), static_cast<unsigned>(j)) * b *
           std::pow(a, m - j);
  }
  return sum;
}

// Hurwitz zeta(n, a) for integer n; n >= 2 via polygamma, n <= 0 via
// Bernoulli polynomials.
double hurwitz_zeta_int(int n, double a) {
  if (n >= 2) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * boost::math::polygamma(n - 1, a) / boost::math::factorial<double>(static_cast<unsigned>(n - 1));
  }
  if (n == 1) throw DomainError("Hurwitz zeta has a pole at s = 1");
  const int m = -n;
  return -bernoulli_polynomial(m + 1, a) / (m + 1);
}

// Expansion of Phi(z, s, a) in powers of L = log z for integer s >= 1,
// valid for |L| < 2 pi.
double lerch_near_one(double z, int s, double a) {
  const double L = std::log(z);
  CompensatedSum sum;
  double lk_over_fact = 1.0;  // L^k / k!
  // |L| < 0.11 here, so terms shrink like (|L| / 2 pi)^k; 30 terms are far
  // more than double precision needs. Odd Bernoulli values vanish, so no
  // early exit on a zero term.
  for (int k = 0; k < 30; ++k) {
    if (k > 0) lk_over_fact *= L / k;
    double term = 0.0;
    if (k == s - 1)
      term = lk_over_fact * (detail::digamma(s) - detail::digamma(a) - std::log(-L));
    else
      term = hurwitz_zeta_int(s - k, a) * lk_over_fact;
    sum += term;
  }
  return std::exp(-a * L) * sum.value();
}

double lerch_direct(double z, double s, double a) {
  CompensatedSum sum;
  double zn = 1.0;
  constexpr long kMaxTerms = 200'000'000;
  for (long n = 0; n < kMaxTerms; ++n) {
    const double base = static_cast<double>(n) + a;
    const double term = zn * std::pow(base, -s);
    sum += term;
    // Ratio of consecutive term magnitudes bounds the remaining tail.
    const double ratio = std::abs(z) * std::pow((base + 1.0) / base, -s);
    if (term == 0.0) return sum.value();
    if (ratio < 1.0) {
      const double tail = std::abs(term) * ratio / (1.0 - ratio);
      if (tail <= 1e-16 * std::abs(sum.value())) return sum.value();
    }
    zn *= z;
  }
  throw NumericalError("lerch_phi: series did not converge within the term budget");
}

constexpr double kNearOne = 0.9;

}  // namespace

namespace detail {

double digamma(double x) { return boost::math::digamma(x); }

ZetaJet zeta_jet(double s, int n_direct, int n_bernoulli) {
  if (s == 1.0) throw DomainError("zeta has a pole at s = 1");
  Jet sum;
  const long double sl = s;
  for (int n = 1; n < n_direct; ++n) sum = sum + power_jet(n, 0.0L, sl);
  const auto big_n = static_cast<long double>(n_direct);
  const Jet n_pow = power_jet(big_n, 0.0L, sl);  // N^-s
  const Jet s_minus_1{sl - 1.0L, 1.0L, 0.0L};
  sum = sum + power_jet(big_n, 1.0L, sl) / s_minus_1 + 0.5L * n_pow;
  Jet rising{sl, 1.0L, 0.0L};  // s (s+1) ... (s+2k-2)
  for (int k = 1; k <= n_bernoulli; ++k) {
    const long double coeff = boost::math::bernoulli_b2n<long double>(k) /
                              boost::math::factorial<long double>(static_cast<unsigned>(2 * k));
    sum = sum + coeff * (rising * power_jet(big_n, 1.0L - 2.0L * k, sl));
    rising = rising * Jet{sl + 2.0L * k - 1.0L, 1.0L, 0.0L} * Jet{sl + 2.0L * k, 1.0L, 0.0L};
  }
  return {static_cast<double>(sum.v), static_cast<double>(sum.d1), static_cast<double>(sum.d2)};
}

double artanh_series_sum_closed(double x) {
  const double ax = std::abs(x);
  if (ax > 1.0) throw DomainError("artanh_series_sum: |x| must not exceed 1");
  if (ax == 1.0) return std::log(2.0);
  if (ax < 0.1) {
    CompensatedSum sum;
    const double x2 = x * x;
    double p = x2;
    for (int n = 1; n < 200; ++n) {
      const double term = p / (2.0 * n * (2.0 * n - 1.0));
      sum += term;
      if (term < 1e-18 * sum.value()) break;
      p *= x2;
    }
    return sum.value();
  }
  return 0.5 * (1.0 + ax) * std::log1p(ax) + 0.5 * (1.0 - ax) * std::log1p(-ax);
}

}  // namespace detail

const Constants& constants() {
  static const Constants c = [] {
    Constants k{};
    k.euler_gamma = boost::math::constants::euler<double>();
    k.zeta_prime_minus1 = detail::zeta_jet(-1.0).d1;
    k.log_2pi = std::log(2.0 * kPi);
    k.zeta_logderiv_half = zeta_logderiv(0.5, 0);
    k.zeta_logderiv_deriv_half = zeta_logderiv(0.5, 1);
    return k;
  }();
  return c;
}

double bessel_j0(double x) {
  if (!(std::abs(x) <= 1e6)) throw DomainError("bessel_j0: |x| must not exceed 1e6");
  return boost::math::cyl_bessel_j(0, x);
}

double bessel_i0(double x) {
  if (!(std::abs(x) <= 700.0)) throw DomainError("bessel_i0: |x| must not exceed 700");
  return boost::math::cyl_bessel_i(0, x);
}

double lerch_phi(double z, double s, double a) {
  if (!(std::abs(z) < 1.0)) throw DomainError("lerch_phi: requires |z| < 1");
  if (!(a > 0.0)) throw DomainError("lerch_phi: requires a > 0");
  if (!std::isfinite(s)) throw DomainError("lerch_phi: s must be finite");
  if (z == 0.0) return std::pow(a, -s);
  if (z > kNearOne && s >= 1.0 && s == std::floor(s) && s < 64.0)
    return lerch_near_one(z, static_cast<int>(s), a);
  return lerch_direct(z, s, a);
}

double lerch_phi_closed(double z, int s, double a) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("lerch_phi_closed: requires 0 <= z <= 1");
  if (s < 1) throw DomainError("lerch_phi_closed: requires integer s >= 1");
  if (!(a > 0.0)) throw DomainError("lerch_phi_closed: requires a > 0");
  if (z == 1.0) {
    if (s == 1) throw DomainError("lerch_phi_closed: Phi(1, 1, a) diverges");
    return hurwitz_zeta_int(s, a);
  }
  return lerch_phi(z, s, a);
}

double lerch_phi1_difference(double z, double a, double b) {
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("lerch_phi1_difference: requires 0 <= z <= 1");
  if (!(a > 0.0 && b > 0.0)) throw DomainError("lerch_phi1_difference: requires a, b > 0");
  if (z == 1.0) return detail::digamma(b) - detail::digamma(a);
  return lerch_phi(z, 1.0, a) - lerch_phi(z, 1.0, b);
}

double zeta_logderiv(double s, int order) {
  if (order != 0 && order != 1) throw DomainError("zeta_logderiv: order must be 0 or 1");
  if (!(s > kLogDerivMin && s < kLogDerivMax))
    throw DomainError("zeta_logderiv: s=" + std::to_string(s) + " outside the supported range (-1.5, 4)");
  if (std::abs(s - 1.0) < 1e-12) throw DomainError("zeta_logderiv: pole of zeta at s = 1");
  const auto j = detail::zeta_jet(s);
  if (std::abs(j.value) < 1e-14) throw DomainError("zeta_logderiv: s is a zero of zeta");
  const double q = j.d1 / j.value;
  if (order == 0) return q;
  return j.d2 / j.value - q * q;
}

double artanh_series_sum(double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("artanh_series_sum: requires |x| < 1");
  return detail::artanh_series_sum_closed(x);
}

}  // namespace zosc
