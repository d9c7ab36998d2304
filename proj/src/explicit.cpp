#include "zosc/explicit.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include "zosc/common.hpp"

namespace zosc {

namespace {

class Terms {
 public:
  Terms(Route route, double param, double X, bool keep = true) : keep_(keep) {
    out_.route = route;
    out_.param = param;
    out_.X = X;
  }
  void add(const char* name, double v) {
    if (keep_) out_.components.emplace_back(name, v);
    sum_ += v;
  }
  ExplicitEval finish(bool right_limit) {
    out_.value = sum_.value();
    out_.right_limit = right_limit;
    if (!std::isfinite(out_.value)) throw NumericalError("closed-form evaluation produced a non-finite value");
    return std::move(out_);
  }

 private:
  ExplicitEval out_;
  CompensatedSum sum_;
  bool keep_;
};

void check_x(const ArithTables& t, double X, const char* who, bool strict) {
  if (strict ? !(X > 1.0) : !(X >= 1.0))
    throw DomainError(std::string(who) + (strict ? ": X must exceed 1" : ": X must be at least 1"));
  if (X > static_cast<double>(t.n_max))
    throw DomainError(std::string(who) + ": X exceeds the sieve limit n_max=" + std::to_string(t.n_max));
}

std::int64_t floor_index(double X) { return static_cast<std::int64_t>(std::floor(X)); }

// Lambda(X) when X is an integer, else 0: the amount the primed convention
// removes (times 1/2 and the weight at n = X).
double lambda_at(const ArithTables& t, double X) {
  if (X != std::floor(X)) return 0.0;
  return t.lambda[static_cast<std::size_t>(X)];
}

// sum'_{n <= X} w(n) Lambda(n) from a prefix array of w Lambda; w_at_x is w(X).
double primed_prefix(const ArithTables& t, const std::vector<double>& prefix, double X, double w_at_x) {
  return prefix[static_cast<std::size_t>(floor_index(X))] - 0.5 * w_at_x * lambda_at(t, X);
}

// x log x with the limit 0 at x = 0.
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

bool excluded_ell(double ell) {
  for (double bad : {0.0, 0.5, 1.0})
    if (std::abs(ell - bad) < 1e-12) return true;
  return false;
}

}  // namespace

std::string route_name(Route route, double param) {
  char buf[64];
  switch (route) {
    case Route::H:
      return "H";
    case Route::H1:
      return "H1";
    case Route::Hl:
      std::snprintf(buf, sizeof buf, "Hl(%.15g)", param);
      return buf;
    case Route::Hhalf:
      return "Hhalf";
    case Route::RhoSum:
      return "rho_sum";
    case Route::RhoPlusOneSum:
      return "rho_plus_one_sum";
    case Route::RhoMinusOneSum:
      return "rho_minus_one_sum";
    case Route::RhoMinusSSum:
      std::snprintf(buf, sizeof buf, "rho_minus_s_sum(%.15g)", param);
      return buf;
  }
  return "unknown";
}

ExplicitEval explicit_H(const ArithTables& t, const Constants& c, double X, ExplicitOptions opts) {
  check_x(t, X, "explicit_H", false);
  const double rx = 1.0 / std::sqrt(X);
  // sum' Lambda(n)(1 - n/X); the weight vanishes at n = X.
  const double lam = primed_prefix(t, t.psi_prefix, X, 1.0) - primed_prefix(t, t.n_lambda_prefix, X, X) / X;
  const bool limit = !opts.force_general && X < kRightLimitSwitch;
  double bracket = 0.0;
  if (limit) {
    // log(1 - X^-2) + X^-1 log((1 + X^-1)/(1 - X^-1)) regrouped so the
    // log(X - 1) singularity appears only as (X - 1) log(X - 1).
    bracket = (1.0 + 1.0 / X) * std::log1p(X) - 2.0 * std::log(X) + xlogx(X - 1.0) / X;
  } else {
    const double inv = 1.0 / X;
    bracket = std::log1p(-inv * inv) + inv * std::log((1.0 + inv) / (1.0 - inv));
  }
  Terms terms(Route::H, 0.0, X, opts.components);
  terms.add("half_sqrt_x", 0.5 * std::sqrt(X));
  terms.add("prime_sum", -rx * lam);
  terms.add("log_2pi", -rx * c.log_2pi);
  terms.add("zeta_prime_minus1", -rx / X * 12.0 * c.zeta_prime_minus1);
  terms.add("trivial_zeros", -0.5 * rx * bracket);
  return terms.finish(limit);
}

ExplicitEval explicit_H1(const ArithTables& t, const Constants& c, double X, ExplicitOptions opts) {
  check_x(t, X, "explicit_H1", false);
  const double sx = std::sqrt(X);
  const double rx = 1.0 / sx;
  // sum' (Lambda/sqrt n)(sqrt(X/n) - sqrt(n/X)) = sqrt X sum' Lambda/n - X^-1/2 sum' Lambda.
  const double lam = sx * primed_prefix(t, t.lambda_over_n_prefix, X, 1.0 / X) - rx * primed_prefix(t, t.psi_prefix, X, 1.0);
  const bool limit = !opts.force_general && X < kRightLimitSwitch;
  double bracket = 0.0;
  if (limit) {
    bracket = 0.5 * (X + 1.0) * std::log1p(X) - std::log(X) - 0.5 * xlogx(X - 1.0) - 1.0;
  } else {
    bracket = 0.5 * std::log1p(-1.0 / (X * X)) + 0.5 * X * std::log((X + 1.0) / (X - 1.0)) - 1.0;
  }
  Terms terms(Route::H1, 0.0, X, opts.components);
  terms.add("prime_sum", lam);
  terms.add("main", -sx * (std::log(X) - c.euler_gamma - 1.0));
  terms.add("log_2pi", -rx * c.log_2pi);
  terms.add("trivial_zeros", -rx * bracket);
  return terms.finish(limit);
}

ExplicitEval explicit_Hl(const ArithTables& t, const Constants& c, double X, double ell) {
  (void)c;
  check_x(t, X, "explicit_Hl", false);
  if (!(ell > kEllMin && ell < kEllMax))
    throw DomainError("explicit_Hl: l must lie in (-1.5, 2.5)");
  if (excluded_ell(ell)) throw DomainError("explicit_Hl: l must not be 0, 1/2 or 1");
  const double e = ell - 0.5;
  const double inv12 = 1.0 / (1.0 - 2.0 * ell);
  // sum' (Lambda/sqrt n)(1/(1-2l))[(X/n)^e - (X/n)^-e]; the weight is zero at n = X.
  CompensatedSum lam;
  const auto top = floor_index(X);
  for (std::int64_t n = 2; n <= top; ++n) {
    const double L = t.lambda[static_cast<std::size_t>(n)];
    if (L == 0.0) continue;
    const double r = std::log(X / static_cast<double>(n));
    lam += L / std::sqrt(static_cast<double>(n)) * 2.0 * std::sinh(e * r);
  }
  const double z = 1.0 / (X * X);
  const double a = 1.0 + ell / 2.0;
  const double b = 1.0 + (1.0 - ell) / 2.0;
  Terms terms(Route::Hl, ell, X);
  terms.add("pole", std::sqrt(X) / (ell * (ell - 1.0)));
  terms.add("prime_sum", -inv12 * lam.value());
  terms.add("zeta_logderiv",
            -inv12 * (zeta_logderiv(ell, 0) * std::pow(X, e) - zeta_logderiv(1.0 - ell, 0) * std::pow(X, -e)));
  terms.add("trivial_zeros", 0.5 / std::sqrt(X) * z * inv12 * lerch_phi1_difference(z, a, b));
  return terms.finish(X < kRightLimitSwitch);
}

ExplicitEval explicit_Hhalf(const ArithTables& t, const Constants& c, double X) {
  check_x(t, X, "explicit_Hhalf", false);
  const double sx = std::sqrt(X);
  const double lx = std::log(X);
  // sum' (Lambda/sqrt n) log(X/n); the weight is zero at n = X.
  const double lam = lx * primed_prefix(t, t.lambda_over_sqrt_prefix, X, 1.0 / sx) -
                     primed_prefix(t, t.lambda_log_over_sqrt_prefix, X, lx / sx);
  Terms terms(Route::Hhalf, 0.5, X);
  terms.add("main", -4.0 * sx);
  terms.add("prime_sum", lam);
  terms.add("zeta_logderiv", c.zeta_logderiv_half * lx);
  terms.add("zeta_logderiv_deriv", c.zeta_logderiv_deriv_half);
  terms.add("inverse_sqrt", -4.0 / sx);
  terms.add("trivial_zeros", 0.25 / sx * lerch_phi_closed(1.0 / (X * X), 2, 0.25));
  return terms.finish(X < kRightLimitSwitch);
}

ExplicitEval rho_sum(const ArithTables& t, const Constants& c, double X) {
  check_x(t, X, "rho_sum", true);
  Terms terms(Route::RhoSum, 0.0, X);
  terms.add("x", X);
  terms.add("prime_sum", -primed_prefix(t, t.psi_prefix, X, 1.0));
  terms.add("log_2pi", -c.log_2pi);
  terms.add("trivial_zeros", -0.5 * std::log1p(-1.0 / (X * X)));
  return terms.finish(false);
}

ExplicitEval rho_plus_one_sum(const ArithTables& t, const Constants& c, double X) {
  check_x(t, X, "rho_plus_one_sum", true);
  Terms terms(Route::RhoPlusOneSum, 0.0, X);
  terms.add("half_x_squared", 0.5 * X * X);
  terms.add("prime_sum", -primed_prefix(t, t.n_lambda_prefix, X, X));
  terms.add("zeta_prime_minus1", 12.0 * c.zeta_prime_minus1);
  terms.add("trivial_zeros", 0.5 * std::log((X + 1.0) / (X - 1.0)));
  return terms.finish(false);
}

ExplicitEval rho_minus_one_sum(const ArithTables& t, const Constants& c, double X) {
  check_x(t, X, "rho_minus_one_sum", true);
  Terms terms(Route::RhoMinusOneSum, 0.0, X);
  terms.add("log_x", std::log(X));
  terms.add("prime_sum", -primed_prefix(t, t.lambda_over_n_prefix, X, 1.0 / X));
  terms.add("euler_gamma", -c.euler_gamma);
  terms.add("inverse_x", -1.0 / X);
  terms.add("trivial_zeros", 0.5 * std::log((X + 1.0) / (X - 1.0)));
  return terms.finish(false);
}

ExplicitEval partial_sum_over_zeros_eval(const ArithTables& t, const Constants& c, double X, double s) {
  (void)c;
  check_x(t, X, "partial_sum_over_zeros", true);
  if (!(s > kLogDerivMin && s < kLogDerivMax) || std::abs(s - 1.0) < 1e-12)
    throw DomainError("partial_sum_over_zeros: s must lie in (-1.5, 4) and differ from 1");
  CompensatedSum lam;
  const auto top = floor_index(X);
  for (std::int64_t n = 2; n <= top; ++n) {
    const double L = t.lambda[static_cast<std::size_t>(n)];
    if (L == 0.0) continue;
    const double w = std::pow(static_cast<double>(n), -s);
    lam += (n == top && X == static_cast<double>(top)) ? 0.5 * L * w : L * w;
  }
  Terms terms(Route::RhoMinusSSum, s, X);
  terms.add("prime_sum", -lam.value());
  terms.add("power", std::pow(X, 1.0 - s) / (1.0 - s));
  terms.add("zeta_logderiv", -zeta_logderiv(s, 0));
  terms.add("trivial_zeros", 0.5 * std::pow(X, -s - 2.0) * lerch_phi(1.0 / (X * X), 1.0, 1.0 + s / 2.0));
  return terms.finish(false);
}

double partial_sum_over_zeros(const ArithTables& t, const Constants& c, double X, double s) {
  return partial_sum_over_zeros_eval(t, c, X, s).value;
}

}  // namespace zosc
