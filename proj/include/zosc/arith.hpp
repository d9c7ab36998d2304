#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace zosc {

/// Sieve tables up to n_max. Index n of every array refers to the integer n
/// (entry 0 is unused and zero). Prefix arrays hold sums over m <= n.
struct ArithTables {
  std::int64_t n_max = 0;
  std::vector<double> lambda;      // von Mangoldt Lambda(n)
  std::vector<double> psi_prefix;  // psi(n)
  std::vector<double> r2;          // r_2(n) when built with_r2, else empty

  // Weighted prefix sums consumed by the closed-form evaluators.
  std::vector<double> n_lambda_prefix;             // sum m Lambda(m)
  std::vector<double> lambda_over_n_prefix;        // sum Lambda(m)/m
  std::vector<double> lambda_over_sqrt_prefix;     // sum Lambda(m)/sqrt(m)
  std::vector<double> lambda_log_over_sqrt_prefix; // sum Lambda(m) log(m)/sqrt(m)

  [[nodiscard]] bool has_r2() const { return !r2.empty(); }
};

/// Largest n_max accepted when the r_2 convolution is requested.
inline constexpr std::int64_t kMaxR2 = 2'000'000;
/// Largest n_max accepted at all (memory guard).
inline constexpr std::int64_t kMaxSieve = 200'000'000;

/// Linear sieve for Lambda plus prefix sums; r_2 by FFT self-convolution when
/// with_r2 is set (entries clamped at 0, exactly 0 for n <= 3).
[[nodiscard]] ArithTables build_tables(std::int64_t n_max, bool with_r2);

/// If n = p^k with p prime and k >= 1 returns p, else 0. Exact integer test,
/// independent of any sieve.
[[nodiscard]] std::uint64_t prime_power_base(std::uint64_t n);

/// Deterministic primality for 64-bit integers.
[[nodiscard]] bool is_prime(std::uint64_t n);

/// psi(X) = sum_{n <= X} Lambda(n).
[[nodiscard]] double psi(const ArithTables& t, double X);

/// sum_{n <= X} w(n) Lambda(n), minus w(X) Lambda(X) / 2 when X is an
/// integer prime power.
[[nodiscard]] double primed_sum(const ArithTables& t, const std::function<double(std::int64_t)>& weight,
                                double X);

/// sum_{n <= X} r_2(n) computed as sum_{m <= X-2} Lambda(m) psi(X - m).
[[nodiscard]] double goldbach_prefix(const ArithTables& t, std::int64_t X);

/// r_2(n) for 0 <= n <= n_max by the O(n^2) double loop (reference route).
[[nodiscard]] std::vector<double> r2_direct(const ArithTables& t, std::int64_t n_max);

/// When X is an integer prime power, returns X as an integer; else nullopt.
[[nodiscard]] std::optional<std::int64_t> integer_prime_power(double X);

}  // namespace zosc
