#include "zosc/mfunction.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "zosc/parallel.hpp"
#include "zosc/specfun.hpp"

namespace zosc {

namespace {

constexpr std::size_t kMinEntries = 5;
constexpr double kEnvelopeTarget = 1e-10;
constexpr double kTailTarget = 1e-8;
constexpr std::size_t kMaxPanels = 2'000'000;
constexpr std::size_t kResync = 256;

// |J0(x)| <= min(1, sqrt(2/(pi x))) for x > 0. Returns log of the product of
// the bounds and the number of factors below 1.
std::pair<double, std::size_t> log_envelope(const std::vector<double>& c, double z) {
  double log_env = 0.0;
  std::size_t active = 0;
  for (double ci : c) {
    const double x = ci * z;
    if (x > 2.0 / kPi) {
      log_env += 0.5 * std::log(2.0 / (kPi * x));
      ++active;
    }
  }
  return {log_env, active};
}

}  // namespace

double mtilde_radial(const SpectralPair& pair, double z) {
  double p = 1.0;
  for (const auto& e : pair.entries()) {
    p *= bessel_j0(std::abs(e.coeff) * z);
    if (p == 0.0) break;
  }
  return p;
}

double mtilde_at_imaginary(const SpectralPair& pair, double y) {
  CompensatedSum log_p;
  for (const auto& e : pair.entries()) {
    const double x = std::abs(e.coeff) * y;
    if (std::abs(x) > 700.0) throw NumericalError("mtilde_at_imaginary: I0 argument too large");
    log_p += std::log(bessel_i0(x));
  }
  const double v = std::exp(log_p.value());
  if (!std::isfinite(v)) throw NumericalError("mtilde_at_imaginary: product overflows");
  return v;
}

MFunctionDensity invert_to_m_re(const SpectralPair& pair, UGridSpec grid) {
  if (pair.size() < kMinEntries)
    throw DomainError("invert_to_m_re: the density may be singular for fewer than 5 entries; refusing");
  if (grid.points < 3 || grid.points % 2 == 0) throw DomainError("invert_to_m_re: grid needs an odd number >= 3 of points");
  const auto c = pair.abs_coeffs();
  MFunctionDensity d;
  d.truncation = pair.truncation();
  d.n_entries = pair.size();
  d.support_radius = pair.m1_sum_abs();
  const double U = grid.half_width > 0.0 ? grid.half_width : 1.1 * d.support_radius;

  // M~ has exponential type sum c, so cos(z u) M~(z) oscillates at most at
  // rate U + sum c; panels span half a period of that rate.
  d.panel_width = kPi / (U + d.support_radius);
  double Z = 8.0 * d.panel_width;
  for (;;) {
    const auto [log_env, active] = log_envelope(c, Z);
    const double env = std::exp(log_env);
    const double tail = active > 2 ? env * Z / (0.5 * static_cast<double>(active) - 1.0)
                                   : std::numeric_limits<double>::infinity();
    if (env < kEnvelopeTarget && tail < kTailTarget) {
      d.tail_bound = tail;
      break;
    }
    Z *= 2.0;
    if (Z / d.panel_width > static_cast<double>(kMaxPanels))
      throw NumericalError("invert_to_m_re: cutoff search did not converge");
  }
  const auto panels = static_cast<std::size_t>(std::ceil(Z / d.panel_width));
  d.cutoff = static_cast<double>(panels) * d.panel_width;

  using Gauss = boost::math::quadrature::gauss<double, 20>;
  const auto& abscissa = Gauss::abscissa();
  const auto& weights = Gauss::weights();
  const double half = 0.5 * d.panel_width;
  d.z_grid.reserve(panels * 20 + 1);
  d.z_grid.push_back(0.0);
  d.z_weights.push_back(0.0);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * d.panel_width;
    // Boost stores the nonnegative half of the symmetric rule (10 points).
    for (std::size_t i = abscissa.size(); i-- > 0;) {
      d.z_grid.push_back(mid - half * abscissa[i]);
      d.z_weights.push_back(half * weights[i]);
    }
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      if (abscissa[i] == 0.0) continue;
      d.z_grid.push_back(mid + half * abscissa[i]);
      d.z_weights.push_back(half * weights[i]);
    }
  }
  d.mtilde.assign(d.z_grid.size(), 1.0);
  parallel_for(d.z_grid.size(), [&](std::size_t i) {
    if (i > 0) d.mtilde[i] = mtilde_radial(pair, d.z_grid[i]);
  });

  const std::size_t N = grid.points;
  const double du = 2.0 * U / static_cast<double>(N - 1);
  d.u_grid.resize(N);
  for (std::size_t k = 0; k < N; ++k) d.u_grid[k] = -U + static_cast<double>(k) * du;
  d.m_re.assign(N, 0.0);
  const double norm = 2.0 / std::sqrt(2.0 * kPi);
  const std::size_t chunks = (N + kResync - 1) / kResync;
  parallel_for(chunks, [&](std::size_t ch) {
    const std::size_t k0 = ch * kResync;
    const std::size_t len = std::min(kResync, N - k0);
    std::vector<double> acc(len, 0.0);
    for (std::size_t i = 1; i < d.z_grid.size(); ++i) {
      const double wm = d.z_weights[i] * d.mtilde[i];
      if (wm == 0.0) continue;
      const double z = d.z_grid[i];
      // cos(z u) along the chunk by rotation, exact at the chunk start.
      double cr = std::cos(z * d.u_grid[k0]);
      double sr = std::sin(z * d.u_grid[k0]);
      const double cs = std::cos(z * du);
      const double ss = std::sin(z * du);
      for (std::size_t k = 0; k < len; ++k) {
        acc[k] += wm * cr;
        const double nc = cr * cs - sr * ss;
        sr = sr * cs + cr * ss;
        cr = nc;
      }
    }
    for (std::size_t k = 0; k < len; ++k) d.m_re[k0 + k] = norm * acc[k];
  });

  d.mass = integrate_density(d, [](double) { return 1.0; });
  d.second_moment = integrate_density(d, [](double u) { return u * u; });
  return d;
}

double integrate_density(const MFunctionDensity& d, const std::function<double(double)>& phi) {
  const std::size_t N = d.u_grid.size();
  if (N < 2) return 0.0;
  const double du = d.u_grid[1] - d.u_grid[0];
  CompensatedSum s;
  for (std::size_t k = 0; k < N; ++k) {
    const double w = (k == 0 || k == N - 1) ? 0.5 : 1.0;
    s += w * d.m_re[k] * phi(d.u_grid[k]);
  }
  return s.value() * du / std::sqrt(2.0 * kPi);
}

DensityDiagnostics diagnose(const MFunctionDensity& d) {
  DensityDiagnostics out;
  const std::size_t N = d.m_re.size();
  out.min_value = N == 0 ? 0.0 : *std::min_element(d.m_re.begin(), d.m_re.end());
  for (std::size_t k = 0; k < N; ++k) {
    out.symmetry_defect = std::max(out.symmetry_defect, std::abs(d.m_re[k] - d.m_re[N - 1 - k]));
    if (std::abs(d.u_grid[k]) > d.support_radius) out.leakage = std::max(out.leakage, std::abs(d.m_re[k]));
  }
  return out;
}

}  // namespace zosc
