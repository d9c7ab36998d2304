#include "zosc/goldbach.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "zosc/common.hpp"
#include "zosc/explicit.hpp"
#include "zosc/parallel.hpp"

namespace zosc {

namespace {

constexpr ExplicitOptions kFast{false, false};
constexpr std::size_t kIntervalChunk = 1024;
// [1, 2] is split geometrically towards y = 1, where H and H_1 carry
// (y - 1) log(y - 1) terms.
constexpr int kNearOneLevels = 50;

using LSum = BasicCompensatedSum<long double>;

template <class F>
long double gl8(F&& f, long double a, long double b) {
  return boost::math::quadrature::gauss<long double, 8>::integrate(f, a, b);
}

template <class F>
long double unit_integral(F&& f, std::int64_t n) {
  const auto a = static_cast<long double>(n);
  if (n > 1) return gl8(f, a, a + 1.0L);
  LSum s;
  long double hi = 2.0L;
  for (int k = 0; k < kNearOneLevels; ++k) {
    const long double lo = 1.0L + std::ldexp(1.0L, -k - 1);
    s += gl8(f, lo, hi);
    hi = lo;
  }
  return s.value();
}

DifferenceStats stats(const std::vector<double>& d) {
  DifferenceStats out;
  if (d.empty()) return out;
  CompensatedSum s;
  for (double v : d) {
    s += v;
    out.max_abs = std::max(out.max_abs, std::abs(v));
  }
  out.mean = s.value() / static_cast<double>(d.size());
  CompensatedSum q;
  for (double v : d) q += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(q.value() / static_cast<double>(d.size()));
  return out;
}

double mean_of(const std::vector<double>& v, std::size_t from) {
  CompensatedSum s;
  for (std::size_t i = from; i < v.size(); ++i) s += v[i];
  return s.value() / static_cast<double>(v.size() - from);
}

}  // namespace

GoldbachData::GoldbachData(const ArithTables& tables, const Constants& consts)
    : tables_(&tables), consts_(&consts), x_max_(tables.n_max) {
  std::vector<double> direct;
  const std::vector<double>* r2 = &tables.r2;
  if (!tables.has_r2()) {
    if (tables.n_max > kMaxDirectR2)
      throw DomainError("goldbach: tables lack r_2 and n_max exceeds the direct limit " +
                        std::to_string(kMaxDirectR2));
    direct = r2_direct(tables, tables.n_max);
    r2 = &direct;
  }
  const auto n = static_cast<std::size_t>(x_max_);
  for (auto* v : {&s_prefix_, &d_prefix_, &psi_prefix_, &n_lambda_prefix_, &lambda_over_n_prefix_})
    v->assign(n + 1, 0.0L);
  LSum s, d, p, nl, ln;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<long double>(k);
    const long double r = (*r2)[k];
    const long double L = tables.lambda[k];
    s += r;
    d += r / (kk * kk);
    p += L;
    nl += kk * L;
    ln += L / kk;
    s_prefix_[k] = s.value();
    d_prefix_[k] = d.value();
    psi_prefix_[k] = p.value();
    n_lambda_prefix_[k] = nl.value();
    lambda_over_n_prefix_[k] = ln.value();
  }
}

std::size_t GoldbachData::index(long double y) const {
  if (!(y >= 1.0L) || y > static_cast<long double>(x_max_))
    throw DomainError("goldbach: X must lie in [1, " + std::to_string(x_max_) + "]");
  return static_cast<std::size_t>(std::floor(y));
}

long double GoldbachData::primed(const std::vector<long double>& prefix, long double y, long double w_at_y) const {
  const std::size_t k = index(y);
  long double v = prefix[k];
  if (static_cast<long double>(k) == y) v -= 0.5L * w_at_y * tables_->lambda[k];
  return v;
}

double GoldbachData::S(double y) const { return static_cast<double>(s_prefix_[index(y)]); }

double GoldbachData::D(double y) const { return static_cast<double>(d_prefix_[index(y)]); }

double GoldbachData::H(double y) const { return explicit_H(*tables_, *consts_, y, kFast).value; }

double GoldbachData::H1(double y) const { return explicit_H1(*tables_, *consts_, y, kFast).value; }

// The trivial-zero brackets are rewritten with log1p(+-1/y) so that neither
// the log y terms nor the y log y growth cancel; (y-1) log1p(-1/y) -> 0 at y = 1.
long double GoldbachData::H_ext(long double y) const {
  const long double rx = 1.0L / std::sqrt(y);
  const long double lam = primed(psi_prefix_, y, 1.0L) - primed(n_lambda_prefix_, y, y) / y;
  const long double a = std::log1p(1.0L / y);
  const long double b = y == 1.0L ? 0.0L : (1.0L - 1.0L / y) * std::log1p(-1.0L / y);
  const long double bracket = (1.0L + 1.0L / y) * a + b;
  return 0.5L * std::sqrt(y) - rx * lam - rx * consts_->log_2pi - rx / y * 12.0L * consts_->zeta_prime_minus1 -
         0.5L * rx * bracket;
}

long double GoldbachData::H1_ext(long double y) const {
  const long double sx = std::sqrt(y);
  const long double rx = 1.0L / sx;
  const long double lam = sx * primed(lambda_over_n_prefix_, y, 1.0L / y) - rx * primed(psi_prefix_, y, 1.0L);
  const long double a = std::log1p(1.0L / y);
  const long double b = y == 1.0L ? 0.0L : (y - 1.0L) * std::log1p(-1.0L / y);
  const long double bracket = 0.5L * (y + 1.0L) * a - 0.5L * b - 1.0L;
  return lam - sx * (std::log(y) - consts_->euler_gamma - 1.0L) - rx * consts_->log_2pi - rx * bracket;
}

long double GoldbachData::R(long double y) const {
  return s_prefix_[index(y)] - 0.5L * y * y + 2.0L * y * std::sqrt(y) * H_ext(y);
}

long double GoldbachData::E_plus_c2(long double y) const {
  return d_prefix_[index(y)] - std::log(y) - 2.0L / std::sqrt(y) * H1_ext(y);
}

GoldbachSummary summary_at(const GoldbachData& data, std::int64_t X, double c2) {
  const double x = static_cast<double>(X);
  GoldbachSummary s;
  s.X = X;
  s.S = data.S(x);
  s.H_at_X = data.H(x);
  s.R = s.S - 0.5 * x * x + 2.0 * x * std::sqrt(x) * s.H_at_X;
  s.D = data.D(x);
  s.H1_at_X = data.H1(x);
  s.E = s.D - std::log(x) - c2 - 2.0 / std::sqrt(x) * s.H1_at_X;
  s.c2_used = c2;
  if (!std::isfinite(s.R) || !std::isfinite(s.E)) throw NumericalError("summary_at: non-finite R or E");
  return s;
}

std::vector<GoldbachSummary> summaries(const GoldbachData& data, const std::vector<std::int64_t>& xs, double c2) {
  std::vector<GoldbachSummary> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = summary_at(data, xs[i], c2); });
  return out;
}

RhoCubicSum rho_cubic_sum(const ZeroTable& table, std::size_t n_zeros) {
  if (n_zeros == 0 || n_zeros > table.size())
    throw DomainError("rho_cubic_sum: n_zeros must lie in [1, " + std::to_string(table.size()) + "]");
  CompensatedSum s;
  for (std::size_t i = 0; i < n_zeros; ++i) {
    const cplx rho(0.5, table.gamma(i));
    // The conjugate zero contributes the complex conjugate.
    s += 2.0 * table.multiplicity(i) * (4.0 / (rho * (rho + 1.0) * (rho - 1.0))).real();
  }
  RhoCubicSum out;
  out.value = s.value();
  out.n_zeros = n_zeros;
  // 8 sum_{gamma > T} gamma^-3 with zero density 1.2 log(T/2pi)/(2pi).
  const double T = std::max(table.gamma(n_zeros - 1), 20.0);
  out.tail_bound = 8.0 * 1.2 / (2.0 * kPi) * (2.0 * std::log(T / (2.0 * kPi)) + 1.0) / (4.0 * T * T);
  return out;
}

double rho_cubic_sum_closed(const ArithTables& tables, const Constants& consts) {
  return -2.0 * (explicit_H(tables, consts, 1.0).value + explicit_H1(tables, consts, 1.0).value);
}

UnitIntegrals unit_integrals(const GoldbachData& data, std::int64_t x_max) {
  if (x_max < 1 || x_max > data.x_max()) throw DomainError("unit_integrals: x_max out of range");
  UnitIntegrals u;
  u.x_max = x_max;
  const auto n = static_cast<std::size_t>(x_max - 1);
  u.r_over_cube.assign(n, 0.0L);
  u.y_times_e.assign(n, 0.0L);
  const std::size_t chunks = (n + kIntervalChunk - 1) / kIntervalChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(n, (c + 1) * kIntervalChunk);
    for (std::size_t i = c * kIntervalChunk; i < end; ++i) {
      const auto k = static_cast<std::int64_t>(i) + 1;
      u.r_over_cube[i] = unit_integral([&](long double y) { return data.R(y) / (y * y * y); }, k);
      u.y_times_e[i] = unit_integral([&](long double y) { return y * data.E_plus_c2(y); }, k);
    }
  });
  return u;
}

C2Estimate estimate_c2(const GoldbachData& data, const ZeroTable& table, const std::vector<std::int64_t>& grid,
                       std::size_t n_zeros) {
  if (grid.empty()) throw DomainError("estimate_c2: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1 || grid[i] > data.x_max()) throw DomainError("estimate_c2: grid point out of range");
    if (i > 0 && grid[i] <= grid[i - 1]) throw DomainError("estimate_c2: grid must be strictly ascending");
  }
  C2Estimate e;
  e.grid_points = grid.size();
  e.x_max = grid.back();

  std::vector<double> vals(grid.size());
  parallel_for(grid.size(),
               [&](std::size_t i) { vals[i] = static_cast<double>(data.E_plus_c2(static_cast<long double>(grid[i]))); });
  const std::size_t N = vals.size();
  e.via_limit = mean_of(vals, N / 2);
  e.cauchy_defect = mean_of(vals, N - std::max<std::size_t>(1, N / 4)) - e.via_limit;

  e.rho_sum = rho_cubic_sum(table, n_zeros);
  const auto u = unit_integrals(data, e.x_max);
  LSum integral;
  for (long double v : u.r_over_cube) integral += v;
  e.integral = static_cast<double>(integral.value());
  const double L = std::log(static_cast<double>(e.x_max));
  e.integral_remainder_bound =
      2.0 * kREnvelope * (L * L * L + 3.0 * L * L + 6.0 * L + 6.0) / static_cast<double>(e.x_max);
  e.via_zeros = 0.5 + e.rho_sum.value + 2.0 * e.integral;
  e.spread = std::abs(e.via_limit - e.via_zeros);
  return e;
}

double chebyshev_integral_check(const ArithTables& tables, const Constants& consts, double X) {
  if (!(X >= 1.0)) throw DomainError("chebyshev_integral_check: X must be at least 1");
  if (X > static_cast<double>(tables.n_max)) throw DomainError("chebyshev_integral_check: X exceeds n_max");
  // psi is constant on [n, n+1): int_0^X psi = sum_{n < N} psi(n) + psi(N)(X - N).
  const auto N = static_cast<std::size_t>(std::floor(X));
  CompensatedSum lhs;
  for (std::size_t n = 1; n < N; ++n) lhs += tables.psi_prefix[n];
  lhs += tables.psi_prefix[N] * (X - static_cast<double>(N));
  lhs += -0.5 * X * X;
  CompensatedSum rhs;
  rhs += -X * std::sqrt(X) * explicit_H(tables, consts, X).value;
  rhs += -zeta_logderiv(0.0, 0) * X;
  rhs += zeta_logderiv(-1.0, 0);
  rhs += -X * detail::artanh_series_sum_closed(1.0 / X);
  return std::abs(lhs.value() - rhs.value());
}

RoundtripReport conversion_roundtrip(const GoldbachData& data, const ZeroTable& table,
                                     const std::vector<std::int64_t>& grid, std::size_t n_zeros, double c2_limit) {
  if (grid.size() < 2 || grid.front() != 1)
    throw DomainError("conversion_roundtrip: sparse grid; needs every integer from 1 to X_max");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] != grid[i - 1] + 1)
      throw DomainError("conversion_roundtrip: sparse grid; needs every integer from 1 to X_max");
  const std::int64_t x_max = grid.back();
  if (x_max > kMaxRoundtrip || x_max > data.x_max())
    throw DomainError("conversion_roundtrip: X_max must not exceed 1e5 or n_max");

  RoundtripReport rep;
  rep.x_max = x_max;
  rep.c2_limit = c2_limit;
  rep.rho_sum = rho_cubic_sum(table, n_zeros);
  const auto u = unit_integrals(data, x_max);
  LSum total;
  for (long double v : u.r_over_cube) total += v;
  const long double integral = total.value();
  const long double c2_zeros = 0.5L + rep.rho_sum.value + 2.0L * integral;
  rep.c2_zeros = static_cast<double>(c2_zeros);

  const std::size_t N = grid.size();
  rep.xs = grid;
  rep.r_direct.resize(N);
  rep.r_rebuilt.resize(N);
  rep.e_direct.resize(N);
  rep.e_rebuilt.resize(N);
  LSum int_ye;  // int_1^X y (E + c2) dy
  LSum int_r;   // int_1^X y^-3 R dy
  std::vector<double> dr(N), de(N);
  for (std::size_t i = 0; i < N; ++i) {
    const auto X = static_cast<long double>(grid[i]);
    if (i > 0) {
      int_ye += u.y_times_e[i - 1];
      int_r += u.r_over_cube[i - 1];
    }
    const long double R = data.R(X);
    const long double E = data.E_plus_c2(X) - c2_limit;
    const long double yE = int_ye.value() - 0.5L * c2_limit * (X * X - 1.0L);
    const long double R_rebuilt = X * X * E - 2.0L * yE + c2_zeros - 0.5L - rep.rho_sum.value;
    const long double E_rebuilt = R / (X * X) - 2.0L * (integral - int_r.value());
    rep.r_direct[i] = static_cast<double>(R);
    rep.e_direct[i] = static_cast<double>(E);
    rep.r_rebuilt[i] = static_cast<double>(R_rebuilt);
    rep.e_rebuilt[i] = static_cast<double>(E_rebuilt);
    dr[i] = static_cast<double>(R_rebuilt - R);
    de[i] = static_cast<double>(E_rebuilt - E);
  }
  rep.r_diff = stats(dr);
  rep.e_diff = stats(de);
  rep.r_within_budget = rep.r_diff.max_abs < 0.01 * static_cast<double>(x_max);
  rep.constant_difference = rep.r_diff.stddev < 0.1 * std::abs(rep.r_diff.mean) &&
                            rep.e_diff.stddev < 0.1 * std::abs(rep.e_diff.mean);
  return rep;
}

}  // namespace zosc
