#include "zosc/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zosc/parallel.hpp"

namespace zosc {

namespace {

constexpr double kRelTol = 1e-12;

bool close(cplx a, cplx b) { return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)}); }

// Index of an entry whose omega equals w, or npos.
std::size_t find_omega(std::span<const PairEntry> entries, cplx w) {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (close(entries[i].omega, w)) return i;
  return static_cast<std::size_t>(-1);
}

}  // namespace

std::string SeriesKind::name() const {
  if (type == Type::H) return "H";
  char buf[64];
  std::snprintf(buf, sizeof buf, "H_l(%.15g)", ell);
  return buf;
}

SpectralPair::SpectralPair(std::vector<PairEntry> entries, Truncation truncation)
    : entries_(std::move(entries)), truncation_(std::move(truncation)) {
  if (entries_.empty()) throw DomainError("a pair needs at least one entry");
  CompensatedSum m1;
  real_ = true;
  bool positive = true;
  for (const auto& e : entries_) {
    if (e.coeff == cplx(0.0, 0.0)) throw DomainError("pair coefficients must be nonzero");
    if (e.omega == cplx(0.0, 0.0)) throw DomainError("zero is excluded from the frequency set");
    if (!std::isfinite(std::abs(e.coeff)) || !std::isfinite(std::abs(e.omega)))
      throw DomainError("pair entries must be finite");
    m1 += std::abs(e.coeff);
    c_ = std::max(c_, std::abs(e.omega.imag()));
    max_abs_omega_ = std::max(max_abs_omega_, std::abs(e.omega));
    if (e.omega.imag() != 0.0) real_ = false;
    if (!(e.coeff.real() > 0.0) || std::abs(e.coeff.imag()) > kRelTol * std::abs(e.coeff)) positive = false;
  }
  m1_ = m1.value();

  // Conjugation closure and coefficient symmetry. Real frequencies are their
  // own conjugates, so only non-real ones need a partner search.
  m3_ = true;
  s1_ = true;
  for (const auto& e : entries_) {
    if (e.omega.imag() == 0.0) {
      if (std::abs(e.coeff.imag()) > kRelTol * std::abs(e.coeff)) s1_ = false;
      continue;
    }
    const std::size_t j = find_omega(entries_, std::conj(e.omega));
    if (j == static_cast<std::size_t>(-1)) {
      m3_ = false;
      s1_ = false;
    } else if (!close(entries_[j].coeff, std::conj(e.coeff))) {
      s1_ = false;
    }
  }
  s2_ = real_ && positive;
}

std::vector<double> SpectralPair::abs_coeffs() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(std::abs(e.coeff));
  return out;
}

std::vector<double> SpectralPair::coeff_args() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(std::arg(e.coeff));
  return out;
}

cplx zeta_coefficient(const SeriesKind& kind, double gamma, int m) {
  const double two_m = 2.0 * m;
  if (kind.type == SeriesKind::Type::H) return two_m / (cplx(0.5, gamma) * cplx(1.5, gamma));
  const double d = 0.5 - kind.ell;
  return {two_m / (d * d + gamma * gamma), 0.0};
}

SpectralPair make_zeta_pair(const ZeroTable& table, const SeriesKind& kind, std::size_t n) {
  if (n == 0) throw DomainError("make_zeta_pair: n must be positive");
  if (n > table.size())
    throw DomainError("make_zeta_pair: n=" + std::to_string(n) + " exceeds the table length " +
                      std::to_string(table.size()));
  std::vector<PairEntry> entries;
  entries.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double g = table.gamma(j);
    entries.push_back({cplx(-g, 0.0), zeta_coefficient(kind, g, table.multiplicity(j))});
  }
  return SpectralPair(std::move(entries), Truncation{table.source(), n, table.gamma(n - 1)});
}

double tail_bound(double T) {
  const double t = std::max(T, 20.0);
  return 1.2 * (2.0 / kPi) * (std::log(t / (2.0 * kPi)) + 1.0) / t;
}

cplx f_of_t(const SpectralPair& pair, double t) {
  CompensatedComplexSum acc;
  for (const auto& e : pair.entries()) acc += e.coeff * std::exp(cplx(0.0, -t) * e.omega);
  return acc.value();
}

cplx g_of_t(const SpectralPair& pair, double t) {
  if (t == 0.0) return {0.0, 0.0};
  CompensatedComplexSum acc;
  for (const auto& e : pair.entries()) acc += e.coeff * (std::exp(cplx(0.0, -t) * e.omega) - 1.0);
  return acc.value();
}

TruncatedValue h_series(const ZeroTable& table, const SeriesKind& kind, double X, std::size_t n) {
  if (!(X >= 1.0)) throw DomainError("h_series: X must be at least 1");
  if (n > table.size())
    throw DomainError("h_series: n=" + std::to_string(n) + " exceeds the table length");
  TruncatedValue out;
  out.n_used = n;
  out.gamma_max = n == 0 ? 0.0 : table.gamma(n - 1);
  out.tail_bound = tail_bound(out.gamma_max);
  if (n == 0) return out;
  const double logx = std::log(X);
  constexpr std::size_t kChunk = 4096;
  const auto total = chunked_reduce<CompensatedSum>(
      n, kChunk,
      [&](std::size_t begin, std::size_t end) {
        CompensatedSum s;
        for (std::size_t j = begin; j < end; ++j) {
          const double g = table.gamma(j);
          const cplx a = zeta_coefficient(kind, g, table.multiplicity(j));
          const double ph = g * logx;
          s += a.real() * std::cos(ph) - a.imag() * std::sin(ph);
        }
        return s;
      },
      [](CompensatedSum& acc, const CompensatedSum& part) { acc += part; });
  out.value = total.value();
  return out;
}

cplx q_function(const SpectralPair& pair, cplx z) {
  CompensatedComplexSum acc;
  for (const auto& e : pair.entries()) {
    const cplx w = e.omega;
    const cplx wb = std::conj(w);
    if (close(z, w) || close(z, -wb))
      throw DomainError("q_function: z coincides with a pole");
    acc += e.coeff * (-z * w) / (z - w);
    acc += std::conj(e.coeff) * (z * wb) / (z + wb);
  }
  return 0.5 * acc.value();
}

void stream_re_f(const SpectralPair& pair, double t0, double dt, std::size_t count,
                 const std::function<void(std::size_t, std::span<const double>)>& consume) {
  const auto entries = pair.entries();
  const std::size_t m = entries.size();
  std::vector<cplx> step(m);
  for (std::size_t j = 0; j < m; ++j) step[j] = std::exp(cplx(0.0, -dt) * entries[j].omega);

  auto fill = [&](std::size_t begin, std::vector<double>& out) {
    const std::size_t len = std::min(kStreamChunk, count - begin);
    out.assign(len, 0.0);
    std::vector<double> pr(m), pi(m), sr(m), si(m);
    const double t_begin = t0 + static_cast<double>(begin) * dt;
    for (std::size_t j = 0; j < m; ++j) {
      const cplx p = entries[j].coeff * std::exp(cplx(0.0, -t_begin) * entries[j].omega);
      pr[j] = p.real();
      pi[j] = p.imag();
      sr[j] = step[j].real();
      si[j] = step[j].imag();
    }
    for (std::size_t k = 0; k < len; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        s += pr[j];
        const double nr = pr[j] * sr[j] - pi[j] * si[j];
        const double ni = pr[j] * si[j] + pi[j] * sr[j];
        pr[j] = nr;
        pi[j] = ni;
      }
      out[k] = s;
    }
  };

  const std::size_t chunks = (count + kStreamChunk - 1) / kStreamChunk;
  const std::size_t batch = std::max<std::size_t>(1, 4 * thread_count());
  std::vector<std::vector<double>> buffers(batch);
  for (std::size_t first = 0; first < chunks; first += batch) {
    const std::size_t in_batch = std::min(batch, chunks - first);
    parallel_for(in_batch, [&](std::size_t b) { fill((first + b) * kStreamChunk, buffers[b]); });
    for (std::size_t b = 0; b < in_batch; ++b) consume((first + b) * kStreamChunk, buffers[b]);
  }
}

BoundednessReport boundedness_probe(const SpectralPair& pair, double T, std::size_t samples) {
  if (samples < 100) throw DomainError("boundedness_probe: needs at least 100 samples");
  if (!(T > 0.0)) throw DomainError("boundedness_probe: T must be positive");
  const double dt = T / static_cast<double>(samples - 1);
  const double re_f0 = f_of_t(pair, 0.0).real();
  std::vector<double> running(samples);
  double sup = 0.0;
  stream_re_f(pair, 0.0, dt, samples, [&](std::size_t begin, std::span<const double> v) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double g = begin + k == 0 ? 0.0 : v[k] - re_f0;
      sup = std::max(sup, std::abs(g));
      running[begin + k] = sup;
    }
  });
  // Least-squares slope of log(running max) against t on the second half.
  const std::size_t from = samples / 2;
  double st = 0, sy = 0, stt = 0, sty = 0;
  std::size_t n = 0;
  for (std::size_t k = from; k < samples; ++k) {
    if (!(running[k] > 0.0)) continue;
    const double t = static_cast<double>(k) * dt;
    const double y = std::log(running[k]);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    ++n;
  }
  BoundednessReport r;
  r.sup_abs_re_g = sup;
  if (n >= 2) {
    const double denom = static_cast<double>(n) * stt - st * st;
    if (denom > 0.0) r.growth_exponent_estimate = (static_cast<double>(n) * sty - st * sy) / denom;
  }
  return r;
}

}  // namespace zosc
