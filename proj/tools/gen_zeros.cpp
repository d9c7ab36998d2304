// gen_zeros: produce a table of ordinates of nontrivial zeta zeros.
//
// The library itself only ingests published tables. This generator exists so
// the test suite can run without network access: it isolates zeros of the
// Hardy Z-function inside Gram blocks (Rosser's rule holds far beyond the
// heights used here) and polishes each sign change with TOMS 748.
//
//   Z(t) = exp(i theta(t)) zeta(1/2 + it)
//
// Below kSwitchHeight zeta is evaluated by Euler-Maclaurin summation in complex
// double precision; above it by the Riemann-Siegel formula with the C0..C4
// correction terms. The derivatives of the Riemann-Siegel kernel Psi(p) are
// taken by a Cauchy integral on a circle, Psi being entire.

#include <boost/math/tools/roots.hpp>

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
constexpr double kSwitchHeight = 400.0;

// theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, asymptotic series.
double theta(double t) {
  const double t2 = t * t;
  return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2) +
         127.0 / (430080.0 * t * t2 * t2 * t2);
}

double theta_prime(double t) { return 0.5 * std::log(t / (2.0 * kPi)); }

// B_{2k}/(2k)! for k = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

cplx zeta_euler_maclaurin(cplx s) {
  const int n_terms = static_cast<int>(std::abs(s.imag())) + 12;
  cplx sum = 0.0;
  for (int n = 1; n < n_terms; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double big_n = n_terms;
  const cplx n_pow = std::exp(-s * std::log(big_n));
  sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;
  cplx rising = s;               // s (s+1) ... (s+2k-2)
  cplx n_power = n_pow / big_n;  // N^{-s-2k+1}
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    sum += kBernoulliOverFactorial[k] * rising * n_power;
    const double j = 2.0 * static_cast<double>(k);
    rising *= (s + (j + 1.0)) * (s + (j + 2.0));
    n_power /= big_n * big_n;
  }
  return sum;
}

cplx psi_kernel(cplx p) {
  return std::cos(2.0 * kPi * (p * p - p - 1.0 / 16.0)) / std::cos(2.0 * kPi * p);
}

// Taylor derivatives Psi^{(k)}(p), k = 0..12, via the Cauchy integral formula.
std::array<double, 13> psi_derivatives(double p) {
  constexpr int kNodes = 64;
  constexpr double kRadius = 0.5;
  std::array<double, 13> out{};
  std::array<cplx, kNodes> values{};
  for (int j = 0; j < kNodes; ++j) {
    const double phi = 2.0 * kPi * (j + 0.5) / kNodes;
    values[j] = psi_kernel(p + kRadius * std::polar(1.0, phi));
  }
  double factorial = 1.0;
  for (int k = 0; k <= 12; ++k) {
    if (k > 0) factorial *= k;
    cplx acc = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      const double phi = 2.0 * kPi * (j + 0.5) / kNodes;
      acc += values[j] * std::polar(1.0, -k * phi);
    }
    out[k] = (acc / static_cast<double>(kNodes)).real() * factorial / std::pow(kRadius, k);
  }
  return out;
}

double z_riemann_siegel(double t) {
  const double tau = std::sqrt(t / (2.0 * kPi));
  const auto n_main = static_cast<std::int64_t>(tau);
  const double p = tau - static_cast<double>(n_main);
  const double th = theta(t);
  double main = 0.0;
  for (std::int64_t n = 1; n <= n_main; ++n) {
    const double dn = static_cast<double>(n);
    main += std::cos(th - t * std::log(dn)) / std::sqrt(dn);
  }
  main *= 2.0;

  const auto d = psi_derivatives(p);
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  const double pi8 = pi4 * pi4;
  const double c0 = d[0];
  const double c1 = -d[3] / (96.0 * pi2);
  const double c2 = d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4);
  const double c3 = -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5308416.0 * pi6);
  const double c4 = d[0] / (128.0 * pi2) + 19.0 * d[4] / (24576.0 * pi4) + 11.0 * d[8] / (5898240.0 * pi6) +
                    d[12] / (2038431744.0 * pi8);
  const double inv = 1.0 / tau;
  const double corr = c0 + inv * (c1 + inv * (c2 + inv * (c3 + inv * c4)));
  const double sign = (n_main % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return main + sign * std::sqrt(inv) * corr;
}

double z_euler_maclaurin(double t) {
  const cplx zeta = zeta_euler_maclaurin(cplx(0.5, t));
  return (std::polar(1.0, theta(t)) * zeta).real();
}

double hardy_z(double t) {
  return t < kSwitchHeight ? z_euler_maclaurin(t) : z_riemann_siegel(t);
}

double gram_point(std::int64_t n, double guess) {
  double g = guess;
  for (int it = 0; it < 60; ++it) {
    const double step = (theta(g) - static_cast<double>(n) * kPi) / theta_prime(g);
    g -= step;
    if (std::abs(step) < 1e-13 * g) break;
  }
  return g;
}

struct Sample {
  double t;
  double z;
};

// Sign changes among consecutive samples.
std::size_t count_sign_changes(const std::vector<Sample>& s) {
  std::size_t c = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i - 1].z < 0.0) != (s[i].z < 0.0)) ++c;
  return c;
}

// Insert midpoints between all consecutive samples.
std::vector<Sample> refine(const std::vector<Sample>& s) {
  std::vector<Sample> out;
  out.reserve(2 * s.size());
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    out.push_back(s[i]);
    const double mid = 0.5 * (s[i].t + s[i + 1].t);
    out.push_back({mid, hardy_z(mid)});
  }
  out.push_back(s.back());
  return out;
}

double polish(double lo, double zlo, double hi, double zhi) {
  boost::uintmax_t max_iter = 200;
  auto f = [](double t) { return hardy_z(t); };
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, zlo, zhi,
                                                   boost::math::tools::eps_tolerance<double>(50),
                                                   max_iter);
  return 0.5 * (r.first + r.second);
}

std::vector<double> compute_zeros(std::size_t count) {
  std::vector<double> zeros;
  zeros.reserve(count);
  // Gram block scan, starting from g_{-1} ~ 9.667 which is a good Gram point.
  std::int64_t n = -1;
  double g = gram_point(n, 9.6);
  std::vector<Sample> block{{g, hardy_z(g)}};
  std::int64_t block_start = n;
  while (zeros.size() < count) {
    ++n;
    g = gram_point(n, g + kPi / theta_prime(g));
    const double z = hardy_z(g);
    block.push_back({g, z});
    const bool good = ((n % 2 == 0) ? z : -z) > 0.0;
    if (!good) continue;
    const auto expected = static_cast<std::size_t>(n - block_start);
    int depth = 0;
    while (count_sign_changes(block) < expected) {
      if (++depth > 12)
        throw std::runtime_error("Gram block starting at index " + std::to_string(block_start) +
                                 " does not satisfy Rosser's rule");
      block = refine(block);
    }
    if (count_sign_changes(block) != expected)
      throw std::runtime_error("too many sign changes in Gram block at index " +
                               std::to_string(block_start));
    for (std::size_t i = 1; i < block.size() && zeros.size() < count; ++i) {
      if ((block[i - 1].z < 0.0) != (block[i].z < 0.0))
        zeros.push_back(polish(block[i - 1].t, block[i - 1].z, block[i].t, block[i].z));
    }
    block = {block.back()};
    block_start = n;
  }
  return zeros;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate ordinates of nontrivial zeta zeros"};
  std::size_t count = 100000;
  std::string output;
  double probe = 0.0;
  app.add_option("-n,--count", count, "number of zeros")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "output path (default stdout)");
  app.add_option("--probe", probe, "print Z(t) by both evaluators and exit");
  CLI11_PARSE(app, argc, argv);

  if (probe > 0.0) {
    std::printf("%.17g %.17g %.17g\n", probe, z_euler_maclaurin(probe), z_riemann_siegel(probe));
    return 0;
  }

  std::vector<double> zeros;
  try {
    zeros = compute_zeros(count);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gen_zeros: %s\n", e.what());
    return 1;
  }
  std::FILE* out = output.empty() ? stdout : std::fopen(output.c_str(), "w");
  if (out == nullptr) {
    std::fprintf(stderr, "gen_zeros: cannot open %s\n", output.c_str());
    return 1;
  }
  std::fprintf(out, "# ordinates of the first %zu nontrivial zeros of zeta(s)\n", zeros.size());
  std::fprintf(out, "# Gram-block isolation; Euler-Maclaurin below t=%g, Riemann-Siegel above\n",
               kSwitchHeight);
  for (double z : zeros) std::fprintf(out, "%.11f\n", z);
  if (out != stdout) std::fclose(out);
  return 0;
}
