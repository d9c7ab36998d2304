#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "zosc/series.hpp"

namespace zosc {

/// prod J0(c_omega z) with c_omega = |a(omega)| over the stored entries.
[[nodiscard]] double mtilde_radial(const SpectralPair& pair, double z);

/// prod I0(y c_omega); throws NumericalError if the product overflows.
[[nodiscard]] double mtilde_at_imaginary(const SpectralPair& pair, double y);

struct UGridSpec {
  std::size_t points = 2001;  // odd, so u = 0 is a grid point
  double half_width = 0.0;    // 0 selects 1.1 * sum c_omega
};

/// Real-part marginal M^Re of the M-function, sampled on a symmetric grid.
/// Densities are with respect to du / sqrt(2 pi).
struct MFunctionDensity {
  Truncation truncation;
  std::size_t n_entries = 0;
  // Radial quadrature: z_grid[0] = 0 with mtilde[0] = 1 and weight 0, then
  // the Gauss-Legendre nodes on [0, cutoff].
  std::vector<double> z_grid;
  std::vector<double> z_weights;
  std::vector<double> mtilde;
  double cutoff = 0.0;
  double panel_width = 0.0;
  double tail_bound = 0.0;  // majorant of the dropped integral of |mtilde|
  std::vector<double> u_grid;
  std::vector<double> m_re;
  double support_radius = 0.0;
  double mass = 0.0;
  double second_moment = 0.0;
};

/// M^Re(u) = (2/sqrt(2 pi)) int_0^inf prod J0(z c) cos(z u) dz. The cutoff is
/// doubled until the decay envelope prod min(1, sqrt(2/(pi c z))) is below
/// 1e-10 and the integral of the envelope beyond it is below 1e-8. Refuses
/// pairs with fewer than 5 entries (DomainError).
[[nodiscard]] MFunctionDensity invert_to_m_re(const SpectralPair& pair, UGridSpec grid = {});

/// (1/sqrt(2 pi)) int M^Re(u) phi(u) du by the trapezoid rule on the grid.
[[nodiscard]] double integrate_density(const MFunctionDensity& d, const std::function<double(double)>& phi);

struct DensityDiagnostics {
  double min_value = 0.0;        // min over the grid of M^Re
  double symmetry_defect = 0.0;  // max |M^Re(u) - M^Re(-u)|
  double leakage = 0.0;          // max |M^Re(u)| for |u| > support_radius
};

[[nodiscard]] DensityDiagnostics diagnose(const MFunctionDensity& d);

}  // namespace zosc
