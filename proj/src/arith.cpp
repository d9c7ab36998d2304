#include "zosc/arith.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "zosc/common.hpp"

namespace zosc {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1U;
  }
  return r;
}

// floor(n^(1/k)) for k >= 2, corrected after the floating-point estimate.
std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto pow_le = [&](std::uint64_t x) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= x;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

std::mutex g_fftw_planner_mutex;

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

// Self-convolution of lambda[0..n] by a real FFT of length 2^k >= 2(n+1).
std::vector<double> fft_self_convolution(const std::vector<double>& lambda, std::int64_t n) {
  std::size_t len = 1;
  while (len < 2 * static_cast<std::size_t>(n + 1)) len <<= 1U;
  std::unique_ptr<double, FftwFree> buf(static_cast<double*>(fftw_malloc(sizeof(double) * len)));
  std::unique_ptr<fftw_complex, FftwFree> spec(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (len / 2 + 1))));
  if (!buf || !spec) throw NumericalError("FFT buffer allocation failed");
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  {
    std::lock_guard lock(g_fftw_planner_mutex);
    forward = fftw_plan_dft_r2c_1d(static_cast<int>(len), buf.get(), spec.get(), FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(static_cast<int>(len), spec.get(), buf.get(), FFTW_ESTIMATE);
  }
  std::fill(buf.get(), buf.get() + len, 0.0);
  std::copy(lambda.begin(), lambda.begin() + n + 1, buf.get());
  fftw_execute(forward);
  for (std::size_t i = 0; i < len / 2 + 1; ++i) {
    const double re = spec.get()[i][0];
    const double im = spec.get()[i][1];
    spec.get()[i][0] = re * re - im * im;
    spec.get()[i][1] = 2.0 * re * im;
  }
  fftw_execute(backward);
  {
    std::lock_guard lock(g_fftw_planner_mutex);
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
  const double scale = 1.0 / static_cast<double>(len);
  for (std::int64_t i = 4; i <= n; ++i) out[i] = std::max(0.0, buf.get()[i] * scale);
  return out;
}

std::vector<double> prefix(const std::vector<double>& lambda, double (*weight)(std::int64_t)) {
  std::vector<double> out(lambda.size(), 0.0);
  CompensatedSum acc;
  for (std::size_t n = 1; n < lambda.size(); ++n) {
    if (lambda[n] != 0.0) acc += weight(static_cast<std::int64_t>(n)) * lambda[n];
    out[n] = acc.value();
  }
  return out;
}

void require_in_range(const ArithTables& t, double X, const char* what) {
  if (!(X <= static_cast<double>(t.n_max)))
    throw DomainError(std::string(what) + ": X exceeds the sieve limit n_max=" +
                      std::to_string(t.n_max));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  if (is_prime(n)) return n;
  for (unsigned k = 2; k < 64; ++k) {
    const std::uint64_t r = integer_root(n, k);
    if (r < 2) break;
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < k; ++i) p *= r;
    if (p == n && is_prime(r)) return r;
  }
  return 0;
}

std::optional<std::int64_t> integer_prime_power(double X) {
  if (!(X >= 2.0) || X != std::floor(X) || X > 9.0e15) return std::nullopt;
  const auto n = static_cast<std::int64_t>(X);
  if (prime_power_base(static_cast<std::uint64_t>(n)) == 0) return std::nullopt;
  return n;
}

ArithTables build_tables(std::int64_t n_max, bool with_r2) {
  if (n_max < 2) throw DomainError("n_max must be at least 2");
  if (n_max > kMaxSieve) throw DomainError("n_max exceeds the sieve cap " + std::to_string(kMaxSieve));
  if (with_r2 && n_max > kMaxR2)
    throw DomainError("r_2 tables are capped at n_max=" + std::to_string(kMaxR2));

  ArithTables t;
  t.n_max = n_max;
  const auto size = static_cast<std::size_t>(n_max + 1);
  t.lambda.assign(size, 0.0);

  // Linear sieve: every composite is crossed out exactly once by its least
  // prime factor.
  std::vector<bool> composite(size, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= n_max; ++i) {
    if (!composite[i]) primes.push_back(i);
    for (std::int64_t p : primes) {
      if (p * i > n_max) break;
      composite[p * i] = true;
      if (i % p == 0) break;
    }
  }
  for (std::int64_t p : primes) {
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t q = p; q <= n_max; q *= p) {
      t.lambda[q] = lp;
      if (q > n_max / p) break;
    }
  }

  t.psi_prefix = prefix(t.lambda, [](std::int64_t) { return 1.0; });
  t.n_lambda_prefix = prefix(t.lambda, [](std::int64_t n) { return static_cast<double>(n); });
  t.lambda_over_n_prefix = prefix(t.lambda, [](std::int64_t n) { return 1.0 / static_cast<double>(n); });
  t.lambda_over_sqrt_prefix =
      prefix(t.lambda, [](std::int64_t n) { return 1.0 / std::sqrt(static_cast<double>(n)); });
  t.lambda_log_over_sqrt_prefix = prefix(t.lambda, [](std::int64_t n) {
    const auto x = static_cast<double>(n);
    return std::log(x) / std::sqrt(x);
  });

  if (with_r2) t.r2 = fft_self_convolution(t.lambda, n_max);
  return t;
}

double psi(const ArithTables& t, double X) {
  if (!(X >= 0.0)) throw DomainError("psi: X must be nonnegative");
  require_in_range(t, X, "psi");
  return t.psi_prefix[static_cast<std::size_t>(std::floor(X))];
}

double primed_sum(const ArithTables& t, const std::function<double(std::int64_t)>& weight, double X) {
  require_in_range(t, X, "primed_sum");
  if (X < 2.0) return 0.0;
  const auto top = static_cast<std::int64_t>(std::floor(X));
  CompensatedSum acc;
  for (std::int64_t n = 2; n <= top; ++n)
    if (t.lambda[n] != 0.0) acc += weight(n) * t.lambda[n];
  if (const auto pp = integer_prime_power(X))
    acc += -0.5 * weight(*pp) * std::log(static_cast<double>(prime_power_base(static_cast<std::uint64_t>(*pp))));
  return acc.value();
}

double goldbach_prefix(const ArithTables& t, std::int64_t X) {
  if (X < 0) throw DomainError("goldbach_prefix: X must be nonnegative");
  require_in_range(t, static_cast<double>(X), "goldbach_prefix");
  CompensatedSum acc;
  for (std::int64_t m = 2; m <= X - 2; ++m)
    if (t.lambda[m] != 0.0) acc += t.lambda[m] * t.psi_prefix[X - m];
  return acc.value();
}

std::vector<double> r2_direct(const ArithTables& t, std::int64_t n_max) {
  require_in_range(t, static_cast<double>(n_max), "r2_direct");
  std::vector<double> out(static_cast<std::size_t>(n_max + 1), 0.0);
  for (std::int64_t n = 4; n <= n_max; ++n) {
    CompensatedSum acc;
    for (std::int64_t m = 2; m <= n - 2; ++m)
      if (t.lambda[m] != 0.0 && t.lambda[n - m] != 0.0) acc += t.lambda[m] * t.lambda[n - m];
    out[n] = acc.value();
  }
  return out;
}

}  // namespace zosc
