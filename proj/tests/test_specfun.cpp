#include <doctest.h>

#include <cmath>
#include <random>

#include "zosc/common.hpp"
#include "zosc/specfun.hpp"

using namespace zosc;

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kLogGlaisher = 0.24875447703378426;  // log A
constexpr double kCatalan = 0.91596559417721901505;

// Power series of J_0 (sign = -1) or I_0 (sign = +1), 40 terms.
double bessel_series(double x, double sign) {
  long double term = 1.0L;
  long double sum = 1.0L;
  const long double q = static_cast<long double>(x) * x / 4.0L;
  for (int k = 1; k < 40; ++k) {
    term *= sign * q / (static_cast<long double>(k) * k);
    sum += term;
  }
  return static_cast<double>(sum);
}

// Direct Lerch sum in extended precision; for tests with moderate |z|.
double lerch_oracle(double z, double s, double a, int terms) {
  long double sum = 0.0L;
  long double zn = 1.0L;
  for (int n = 0; n < terms; ++n) {
    sum += zn * std::pow(static_cast<long double>(n) + a, -static_cast<long double>(s));
    zn *= z;
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("Bessel J0 and I0 against power series") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(bessel_j0(1.0) == doctest::Approx(0.765197686557967).epsilon(1e-14));
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
  CHECK(bessel_i0(0.0) == 1.0);
  CHECK(bessel_i0(1.0) == doctest::Approx(1.266065877752008).epsilon(1e-14));
  CHECK(bessel_i0(-1.0) == bessel_i0(1.0));
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  double worst_j = 0.0;
  double worst_i = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    worst_j = std::max(worst_j, std::abs(bessel_j0(x) - bessel_series(x, -1.0)));
    const double i0 = bessel_series(x, 1.0);
    worst_i = std::max(worst_i, std::abs(bessel_i0(x) - i0) / i0);
    REQUIRE(bessel_i0(x) >= 1.0);
  }
  CHECK(worst_j < 1e-12);
  CHECK(worst_i < 1e-12);
  // Large-argument regime: Hankel asymptotics with two correction terms.
  for (double x : {1e3, 5e4, 1e6}) {
    const double chi = x - kPi / 4;
    const double p = 1.0 - 9.0 / (128.0 * x * x);
    const double q = -1.0 / (8.0 * x) + 75.0 / (1024.0 * x * x * x);
    const double approx = std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
    CHECK(std::abs(bessel_j0(x) - approx) < 1e-10 * std::sqrt(2.0 / (kPi * x)));
  }
  CHECK_THROWS_AS((void)bessel_j0(2e6), DomainError);
  CHECK_THROWS_AS((void)bessel_i0(701.0), DomainError);
}

TEST_CASE("Lerch Phi") {
  CHECK(lerch_phi(0.0, 2.5, 0.7) == doctest::Approx(std::pow(0.7, -2.5)).epsilon(1e-15));
  CHECK(lerch_phi(0.5, 1.0, 1.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  const double shift = lerch_phi(0.3, 2.0, 0.25) - 0.3 * lerch_phi(0.3, 2.0, 1.25) - std::pow(0.25, -2.0);
  CHECK(std::abs(shift) < 1e-12);
  CHECK_THROWS_AS((void)lerch_phi(1.0, 2.0, 0.5), DomainError);
  CHECK_THROWS_AS((void)lerch_phi(0.5, 2.0, 0.0), DomainError);
  CHECK_THROWS_AS((void)lerch_phi(0.5, 2.0, -1.0), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uz(-0.95, 0.98);
  std::uniform_real_distribution<double> us(0.5, 3.0);
  std::uniform_real_distribution<double> ua(0.1, 3.0);
  std::uniform_int_distribution<int> uk(1, 6);
  for (int i = 0; i < 200; ++i) {
    const double z = uz(rng);
    const double s = (i % 3 == 0) ? std::round(us(rng)) : us(rng);
    const double a = ua(rng);
    const int k = uk(rng);
    double head = 0.0;
    for (int n = 0; n < k; ++n) head += std::pow(z, n) / std::pow(n + a, s);
    const double lhs = lerch_phi(z, s, a);
    const double rhs = std::pow(z, k) * lerch_phi(z, s, a + k) + head;
    REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Lerch Phi near z = 1") {
  // The logarithmic expansion (z > 0.9) against a long direct sum.
  for (double z : {0.91, 0.95, 0.99}) {
    for (int s : {1, 2, 3}) {
      for (double a : {0.25, 1.0, 1.75}) {
        const double oracle = lerch_oracle(z, s, a, 20000);
        CHECK(lerch_phi(z, s, a) == doctest::Approx(oracle).epsilon(1e-13));
      }
    }
  }
  // Hurwitz zeta(2, 1/4) = pi^2 + 8 G.
  CHECK(lerch_phi_closed(1.0, 2, 0.25) == doctest::Approx(kPi * kPi + 8.0 * kCatalan).epsilon(1e-14));
  CHECK(lerch_phi_closed(1.0 - 1e-9, 2, 0.25) == doctest::Approx(kPi * kPi + 8.0 * kCatalan).epsilon(1e-7));
  CHECK_THROWS_AS((void)lerch_phi_closed(1.0, 1, 0.25), DomainError);
  // psi(1) - psi(1/2) = 2 log 2.
  CHECK(lerch_phi1_difference(1.0, 0.5, 1.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(lerch_phi1_difference(1.0 - 1e-10, 0.5, 1.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-8));
  CHECK(lerch_phi1_difference(0.5, 0.5, 1.0) ==
        doctest::Approx(lerch_oracle(0.5, 1, 0.5, 200) - lerch_oracle(0.5, 1, 1.0, 200)).epsilon(1e-14));
}

TEST_CASE("zeta log-derivative") {
  CHECK(std::abs(zeta_logderiv(0.0, 0) - std::log(2 * kPi)) < 1e-10);
  // zeta'(2)/zeta(2) = C0 + log 2pi - 12 log A.
  CHECK(std::abs(zeta_logderiv(2.0, 0) - (kEulerGamma + std::log(2 * kPi) - 12 * kLogGlaisher)) < 1e-10);
  // Functional equation: zeta'/zeta(1/2) = -(psi(1/4) - log pi)/2.
  const double psi_quarter = -kEulerGamma - kPi / 2 - 3 * std::log(2.0);
  CHECK(std::abs(zeta_logderiv(0.5, 0) + 0.5 * (psi_quarter - std::log(kPi))) < 1e-10);
  // zeta'(-1) = 1/12 - log A and zeta(-1) = -1/12.
  CHECK(std::abs(zeta_logderiv(-1.0, 0) - 12.0 * (kLogGlaisher - 1.0 / 12.0)) < 1e-10);
  // Derivative against a Richardson central difference of order 0.
  for (double s : {-1.2, -0.5, 0.5, 0.8, 1.3, 2.0, 3.5}) {
    const double h = 1e-4;
    auto f = [](double x) { return zeta_logderiv(x, 0); };
    const double fd = (8 * (f(s + h) - f(s - h)) - (f(s + 2 * h) - f(s - 2 * h))) / (12 * h);
    CHECK(std::abs(zeta_logderiv(s, 1) - fd) < 1e-8);
  }
  // Independent Euler-Maclaurin parameters.
  for (double s : {-1.4, -1.0, 0.0, 0.5, 0.9, 1.1, 2.0, 3.9}) {
    const auto a = detail::zeta_jet(s);
    const auto b = detail::zeta_jet(s, 30, 6);
    CHECK(std::abs(a.d1 / a.value - b.d1 / b.value) < 1e-11);
    CHECK(std::abs(a.d2 / a.value - b.d2 / b.value) < 1e-10);
  }
  CHECK_THROWS_AS((void)zeta_logderiv(1.0, 0), DomainError);
  CHECK_THROWS_AS((void)zeta_logderiv(4.5, 0), DomainError);
  CHECK_THROWS_AS((void)zeta_logderiv(-1.6, 0), DomainError);
  CHECK_THROWS_AS((void)zeta_logderiv(0.5, 2), DomainError);
  for (int i = 1; i < 100; ++i) {
    const double s = i / 100.0;
    REQUIRE(std::isfinite(zeta_logderiv(s, 0)));
    REQUIRE(std::isfinite(zeta_logderiv(s, 1)));
  }
}

TEST_CASE("artanh series") {
  CHECK(artanh_series_sum(0.0) == 0.0);
  for (double x : {0.5, 0.05, 0.9, 1e-5}) {
    double direct = 0.0;
    for (int n = 1; n < 2000; ++n) direct += std::pow(x, 2 * n) / (2.0 * n * (2.0 * n - 1.0));
    CHECK(std::abs(artanh_series_sum(x) - direct) < 1e-13);
  }
  CHECK(artanh_series_sum(-0.5) == artanh_series_sum(0.5));
  CHECK_THROWS_AS((void)artanh_series_sum(1.0), DomainError);
  CHECK(detail::artanh_series_sum_closed(1.0) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("constants") {
  const auto& c = constants();
  CHECK(c.euler_gamma >= 0.5772156);
  CHECK(c.euler_gamma <= 0.5772157);
  CHECK(c.zeta_prime_minus1 >= -0.165422);
  CHECK(c.zeta_prime_minus1 <= -0.165421);
  CHECK(std::abs(c.zeta_prime_minus1 - (-0.1654211437)) < 1e-10);
  const double h_at_one = 0.5 - std::log(4 * kPi) - 12 * c.zeta_prime_minus1;
  CHECK(h_at_one >= -0.045971);
  CHECK(h_at_one <= -0.045970);
  const double h1_at_one = c.euler_gamma + 2 - std::log(4 * kPi);
  CHECK(h1_at_one >= 0.046191);
  CHECK(h1_at_one <= 0.046192);
}
