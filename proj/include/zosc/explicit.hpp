#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zosc/arith.hpp"
#include "zosc/specfun.hpp"

namespace zosc {

/// Which closed form produced a value.
enum class Route {
  H,               // H(X)
  H1,              // H_1(X)
  Hl,              // H_l(X), param = l
  Hhalf,           // H_{1/2}(X)
  RhoSum,          // sum_rho X^rho / rho
  RhoPlusOneSum,   // sum_rho X^(rho+1) / (rho+1)
  RhoMinusOneSum,  // sum_rho X^(rho-1) / (rho-1)
  RhoMinusSSum,    // sum_rho X^(rho-s) / (rho-s), param = s
};

[[nodiscard]] std::string route_name(Route route, double param = 0.0);

struct ExplicitEval {
  double X = 0.0;
  double value = 0.0;
  Route route = Route::H;
  double param = 0.0;
  // Named terms of the formula; value is their compensated sum.
  std::vector<std::pair<std::string, double>> components;
  // True when the X -> 1+ branch was taken.
  bool right_limit = false;
};

struct ExplicitOptions {
  // Use the X > 1 expression even right next to X = 1.
  bool force_general = false;
  // Fill ExplicitEval::components; hot loops switch this off.
  bool components = true;
};

/// Below this X the regrouped right-limit expressions are used.
inline constexpr double kRightLimitSwitch = 1.0 + 1e-6;

/// H(X) from primes: 1/2 sqrt X - X^{-1/2} sum Lambda(n)(1 - n/X) - ...
/// Requires 1 <= X <= tables.n_max.
[[nodiscard]] ExplicitEval explicit_H(const ArithTables& tables, const Constants& consts, double X,
                                      ExplicitOptions opts = {});

/// H_1(X) from primes. Requires 1 <= X <= tables.n_max.
[[nodiscard]] ExplicitEval explicit_H1(const ArithTables& tables, const Constants& consts, double X,
                                       ExplicitOptions opts = {});

/// Range of l accepted by explicit_Hl (limited by zeta'/zeta at l and 1 - l).
inline constexpr double kEllMin = -1.5;
inline constexpr double kEllMax = 2.5;

/// H_l(X) from primes for real l in (-1.5, 2.5) outside {-2k, 0, 1/2, 1, 2k+1}.
/// The prime sum costs O(X).
[[nodiscard]] ExplicitEval explicit_Hl(const ArithTables& tables, const Constants& consts, double X, double ell);

/// H_{1/2}(X) from primes.
[[nodiscard]] ExplicitEval explicit_Hhalf(const ArithTables& tables, const Constants& consts, double X);

/// sum_rho X^rho/rho = X - sum' Lambda - log 2pi - (1/2) log(1 - X^-2), X > 1.
[[nodiscard]] ExplicitEval rho_sum(const ArithTables& tables, const Constants& consts, double X);

/// sum_rho X^(rho+1)/(rho+1) = X^2/2 - sum' n Lambda + 12 zeta'(-1) + (1/2) log((X+1)/(X-1)).
[[nodiscard]] ExplicitEval rho_plus_one_sum(const ArithTables& tables, const Constants& consts, double X);

/// sum_rho X^(rho-1)/(rho-1) = log X - sum' Lambda/n - C0 - 1/X + (1/2) log((X+1)/(X-1)).
[[nodiscard]] ExplicitEval rho_minus_one_sum(const ArithTables& tables, const Constants& consts, double X);

/// sum_rho X^(rho-s)/(rho-s) for X > 1 and s in (-1.5, 4), s != 1:
/// -sum' Lambda n^-s + X^(1-s)/(1-s) - zeta'/zeta(s) + (1/2) X^(-s-2) Phi(X^-2, 1, 1 + s/2).
[[nodiscard]] double partial_sum_over_zeros(const ArithTables& tables, const Constants& consts, double X, double s);

/// Same as partial_sum_over_zeros with the term breakdown.
[[nodiscard]] ExplicitEval partial_sum_over_zeros_eval(const ArithTables& tables, const Constants& consts, double X,
                                                       double s);

}  // namespace zosc
