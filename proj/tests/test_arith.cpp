#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "zosc/arith.hpp"
#include "zosc/common.hpp"

using namespace zosc;

namespace {

// Lambda(n) by trial division.
double lambda_trial(std::int64_t n) {
  if (n < 2) return 0.0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      std::int64_t m = n;
      while (m % p == 0) m /= p;
      return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
  }
  return std::log(static_cast<double>(n));
}

const ArithTables& small_tables() {
  static const ArithTables t = build_tables(20000, true);
  return t;
}

const double l2 = std::log(2.0);
const double l3 = std::log(3.0);

}  // namespace

TEST_CASE("lambda against trial division") {
  const auto& t = small_tables();
  for (std::int64_t n = 1; n <= 10000; ++n) {
    if (t.lambda[n] != lambda_trial(n)) FAIL("lambda mismatch at n=" << n);
  }
  CHECK(t.lambda[8] == doctest::Approx(l2));
  CHECK(t.lambda[12] == 0.0);
}

TEST_CASE("psi") {
  const auto& t = small_tables();
  CHECK(psi(t, 10.0) == doctest::Approx(3 * l2 + 2 * l3 + std::log(5.0) + std::log(7.0)).epsilon(1e-14));
  CHECK(psi(t, 1.5) == 0.0);
  CHECK(psi(t, 4.0) == doctest::Approx(2 * l2 + l3).epsilon(1e-14));
  CHECK_THROWS_AS((void)psi(t, 20001.0), DomainError);
  const double ratio = psi(t, 20000.0) / 20000.0;
  CHECK(ratio > 0.9);
  CHECK(ratio < 1.1);
  for (std::size_t n = 1; n < t.psi_prefix.size(); ++n) REQUIRE(t.psi_prefix[n] >= t.psi_prefix[n - 1]);
  bool below = false;
  bool above = false;
  for (int x = 2; x <= 10000; ++x) {
    const double d = psi(t, x) - x;
    below = below || d < 0;
    above = above || d > 0;
  }
  CHECK(below);
  CHECK(above);
}

TEST_CASE("primed sums") {
  const auto& t = small_tables();
  auto one = [](std::int64_t) { return 1.0; };
  CHECK(primed_sum(t, one, 4.0) == doctest::Approx(l2 + l3 + l2 / 2).epsilon(1e-14));
  // n = 2, 3, 4, 5; 6 is not a prime power so nothing is halved.
  CHECK(primed_sum(t, one, 6.0) == doctest::Approx(l2 + l3 + l2 + std::log(5.0)).epsilon(1e-14));
  CHECK(primed_sum(t, one, 1.0) == 0.0);
  // Non-integer X never triggers halving.
  CHECK(primed_sum(t, one, 4.5) == doctest::Approx(psi(t, 4.5)).epsilon(1e-14));
  CHECK_THROWS_AS((void)primed_sum(t, one, 1e9), DomainError);
}

TEST_CASE("exact prime power detection") {
  CHECK(prime_power_base(1) == 0);
  CHECK(prime_power_base(2) == 2);
  CHECK(prime_power_base(12) == 0);
  CHECK(prime_power_base(1ULL << 61U) == 2);
  std::uint64_t p40 = 1;
  for (int i = 0; i < 40; ++i) p40 *= 3;
  CHECK(prime_power_base(p40) == 3);
  CHECK(prime_power_base(p40 + 2) == 0);
  CHECK(prime_power_base(1000000007ULL * 1000000007ULL) == 1000000007ULL);
  CHECK(prime_power_base(1000000007ULL * 998244353ULL) == 0);
  CHECK(prime_power_base(18446744073709551557ULL) == 18446744073709551557ULL);  // largest 64-bit prime
  const auto& t = small_tables();
  for (std::int64_t n = 1; n <= 20000; ++n)
    REQUIRE((prime_power_base(static_cast<std::uint64_t>(n)) != 0) == (t.lambda[n] != 0.0));
}

TEST_CASE("r2 by FFT against the direct convolution") {
  const auto& t = small_tables();
  CHECK(t.r2[5] == doctest::Approx(2 * l2 * l3).epsilon(1e-12));
  const auto direct = r2_direct(t, 5000);
  double worst = 0.0;
  for (int n = 0; n <= 5000; ++n) worst = std::max(worst, std::abs(direct[n] - t.r2[n]));
  CHECK(worst < 1e-8);
  for (int n = 0; n <= 3; ++n) CHECK(t.r2[n] == 0.0);
  for (double v : t.r2) REQUIRE(v >= 0.0);
}

TEST_CASE("Goldbach prefix three ways") {
  const auto& t = small_tables();
  CHECK(goldbach_prefix(t, 4) == doctest::Approx(l2 * l2).epsilon(1e-14));
  CHECK(goldbach_prefix(t, 3) == 0.0);
  // n=4: (2,2); n=5: (2,3),(3,2); n=6: (3,3),(2,4),(4,2).
  CHECK(goldbach_prefix(t, 6) == doctest::Approx(l2 * l2 + 2 * l2 * l3 + l3 * l3 + 2 * l2 * l2).epsilon(1e-14));
  const auto direct = r2_direct(t, 5000);
  for (int X : {10, 100, 1000, 5000}) {
    double from_direct = 0.0;
    double from_fft = 0.0;
    for (int n = 0; n <= X; ++n) {
      from_direct += direct[n];
      from_fft += t.r2[n];
    }
    const double from_prefix = goldbach_prefix(t, X);
    CHECK(std::abs(from_prefix - from_direct) <= 1e-6 * from_direct);
    CHECK(std::abs(from_fft - from_direct) <= 1e-6 * from_direct);
  }
}

TEST_CASE("table limits") {
  CHECK_THROWS_AS((void)build_tables(1, false), DomainError);
  CHECK_THROWS_AS((void)build_tables(kMaxR2 + 1, true), DomainError);
  const auto t = build_tables(2, false);
  CHECK(t.lambda[2] == doctest::Approx(l2));
  CHECK_FALSE(t.has_r2());
}

TEST_CASE("weighted prefix arrays") {
  const auto& t = small_tables();
  double a = 0, b = 0, c = 0, d = 0;
  for (int n = 1; n <= 20000; ++n) {
    a += n * t.lambda[n];
    b += t.lambda[n] / n;
    c += t.lambda[n] / std::sqrt(n);
    d += t.lambda[n] * std::log(n) / std::sqrt(n);
  }
  CHECK(t.n_lambda_prefix.back() == doctest::Approx(a).epsilon(1e-12));
  CHECK(t.lambda_over_n_prefix.back() == doctest::Approx(b).epsilon(1e-12));
  CHECK(t.lambda_over_sqrt_prefix.back() == doctest::Approx(c).epsilon(1e-12));
  CHECK(t.lambda_log_over_sqrt_prefix.back() == doctest::Approx(d).epsilon(1e-12));
}
