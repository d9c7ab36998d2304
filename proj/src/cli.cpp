// zosc command-line front end. CSV goes to --output (default stdout) with a
// header row and %.15g numbers; JSON reports echo their inputs.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "zosc/accept.hpp"
#include "zosc/arith.hpp"
#include "zosc/common.hpp"
#include "zosc/explicit.hpp"
#include "zosc/goldbach.hpp"
#include "zosc/mfunction.hpp"
#include "zosc/series.hpp"
#include "zosc/specfun.hpp"
#include "zosc/verify.hpp"
#include "zosc/zeros.hpp"

namespace {

using namespace zosc;
using json = nlohmann::ordered_json;

// Assertion-style failure of a selftest or comparison (exit 1).
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string zeros_path;
  std::size_t n_zeros = 10'000;
  std::int64_t n_max = 0;
  std::string output;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DomainError("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void csv_row(std::ostream& os, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << '\n';
}

ZeroTable load_table(const RunConfig& cfg, std::optional<std::size_t> limit) {
  return load_zeros(resolve_zeros_path(cfg.zeros_path), limit);
}

SeriesKind parse_kind(const std::string& kind, double ell) {
  if (kind == "H") return SeriesKind::h();
  if (kind == "H1") return SeriesKind::hl(1.0);
  if (kind == "Hhalf") return SeriesKind::hl(0.5);
  if (kind == "Hl") return SeriesKind::hl(ell);
  throw DomainError("unknown kind " + kind + " (expected H, H1, Hl or Hhalf)");
}

double explicit_value(const ArithTables& t, const std::string& kind, double ell, double X, std::string* route) {
  const auto& c = constants();
  ExplicitEval e;
  if (kind == "H") e = explicit_H(t, c, X);
  else if (kind == "H1") e = explicit_H1(t, c, X);
  else if (kind == "Hhalf") e = explicit_Hhalf(t, c, X);
  else if (kind == "Hl") e = explicit_Hl(t, c, X, ell);
  else throw DomainError("unknown kind " + kind);
  if (route) *route = route_name(e.route, e.param);
  return e.value;
}

std::int64_t tables_size(const std::vector<double>& xs, std::int64_t requested) {
  double hi = 16.0;
  for (double x : xs) hi = std::max(hi, std::ceil(x));
  return std::max<std::int64_t>(requested, static_cast<std::int64_t>(hi));
}

SpectralPair real_pair(const std::vector<double>& w, const std::vector<double>& a) {
  std::vector<PairEntry> e;
  for (std::size_t i = 0; i < w.size(); ++i) e.push_back({cplx(w[i], 0), cplx(a[i], 0)});
  return SpectralPair(e);
}

const std::vector<double> kLic{1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0), std::sqrt(7.0), std::sqrt(11.0)};

SpectralPair named_pair(const std::string& name, const RunConfig& cfg) {
  if (name == "single") return real_pair({1.0}, {1.0});
  if (name == "lic") return real_pair(kLic, std::vector<double>(6, 1.0));
  if (name == "six") return real_pair(kLic, {1.0, 0.9, 0.8, 0.7, 0.6, 0.5});
  if (name == "dependent") return real_pair({1, 2, 3, 4, 5, 6}, std::vector<double>(6, 1.0));
  if (name == "negative") return real_pair(kLic, {1, 1, 1, 1, 1, -1});
  if (name == "zeta") return make_zeta_pair(load_table(cfg, cfg.n_zeros), SeriesKind::hl(1.0), cfg.n_zeros);
  throw DomainError("unknown pair " + name + " (single, lic, six, dependent, negative, zeta)");
}

void write_json(const RunConfig& cfg, const json& j) {
  Output out(cfg.output);
  out.os() << j.dump(2) << '\n';
}

// ---- subcommands ----------------------------------------------------------

void zeros_validate(const RunConfig& cfg) {
  const auto t = load_table(cfg, std::nullopt);
  // N(T) - RvM(T) = S(T) + O(1/T) stays well inside +-3 at these heights.
  double worst = 0.0;
  const int samples = 200;
  for (int k = 1; k <= samples; ++k) {
    const double T = 20.0 + (t.max_gamma() - 20.0) * k / (samples + 1.0);
    worst = std::max(worst, std::abs(static_cast<double>(count_below(t, T)) - riemann_von_mangoldt(T)));
  }
  const bool ok = worst < 3.0 && std::abs(t.gamma(0) - 14.134725141734693) < 1e-8;
  write_json(cfg, {{"source", t.source()},
                   {"count", t.size()},
                   {"first", t.gamma(0)},
                   {"max_gamma", t.max_gamma()},
                   {"max_count_deviation", worst},
                   {"valid", ok}});
  if (!ok) throw CheckFailed("zero table failed validation");
}

void arith_selftest(const RunConfig& cfg) {
  const std::int64_t n = cfg.n_max > 0 ? cfg.n_max : 100'000;
  const auto t = build_tables(n, n <= kMaxR2);
  // Sieve Lambda against the independent prime-power test.
  std::int64_t lambda_mismatch = 0;
  for (std::int64_t k = 2; k <= std::min<std::int64_t>(n, 200'000); ++k) {
    const auto p = prime_power_base(static_cast<std::uint64_t>(k));
    const double expect = p ? std::log(static_cast<double>(p)) : 0.0;
    if (std::abs(t.lambda[static_cast<std::size_t>(k)] - expect) > 1e-12) ++lambda_mismatch;
  }
  // Goldbach sums three ways.
  double worst = 0.0;
  if (t.has_r2()) {
    const std::int64_t m = std::min<std::int64_t>(n, 2000);
    const auto direct = r2_direct(t, m);
    double prefix = 0.0, dprefix = 0.0;
    for (std::int64_t X = 1; X <= m; ++X) {
      prefix += t.r2[static_cast<std::size_t>(X)];
      dprefix += direct[static_cast<std::size_t>(X)];
      if (X % 97 == 0 || X == m) {
        const double g = goldbach_prefix(t, X);
        const double scale = std::max(1.0, std::abs(g));
        worst = std::max({worst, std::abs(prefix - g) / scale, std::abs(dprefix - g) / scale});
      }
    }
  }
  const double psi_rel = std::abs(psi(t, static_cast<double>(n)) / static_cast<double>(n) - 1.0);
  const bool ok = lambda_mismatch == 0 && worst < 1e-6 && psi_rel < 0.05;
  write_json(cfg, {{"n_max", n},
                   {"lambda_mismatches", lambda_mismatch},
                   {"goldbach_prefix_max_rel_diff", worst},
                   {"psi_over_x_minus_1", psi_rel},
                   {"passed", ok}});
  if (!ok) throw CheckFailed("arith selftest failed");
}

void specfun_selftest(const RunConfig& cfg) {
  const auto& c = constants();
  json checks = json::object();
  bool ok = true;
  auto check = [&](const char* name, double got, double want, double tol) {
    const double err = std::abs(got - want);
    checks[name] = {{"value", got}, {"expected", want}, {"error", err}};
    ok = ok && err <= tol;
  };
  // Power series for J0 and I0 at small argument.
  auto j0_series = [](double x, int sign) {
    double term = 1.0, s = 1.0;
    for (int k = 1; k < 40; ++k) {
      term *= sign * (x * x / 4.0) / (k * static_cast<double>(k));
      s += term;
    }
    return s;
  };
  check("bessel_j0(2.5)", bessel_j0(2.5), j0_series(2.5, -1), 1e-13);
  check("bessel_i0(1)", bessel_i0(1.0), j0_series(1.0, 1), 1e-13);
  check("zeta_logderiv(0)", zeta_logderiv(0.0, 0), std::log(2.0 * kPi), 1e-12);
  check("artanh_series_sum(0.5)", artanh_series_sum(0.5),
        0.5 * std::log(1.0 - 0.25) + 0.5 * 0.5 * std::log(1.5 / 0.5), 1e-14);
  check("lerch_phi(0.5,1,1)", lerch_phi(0.5, 1.0, 1.0), 2.0 * std::log(2.0), 1e-13);
  check("euler_gamma", c.euler_gamma, 0.57721566490153286, 1e-15);
  write_json(cfg, {{"checks", checks}, {"passed", ok}});
  if (!ok) throw CheckFailed("specfun selftest failed");
}

void series_eval(const RunConfig& cfg, const std::string& kind, double ell, const std::vector<double>& xs) {
  const auto t = load_table(cfg, cfg.n_zeros);
  const auto k = parse_kind(kind, ell);
  Output out(cfg.output);
  csv_row(out.os(), {"x", "value", "tail_bound", "n_used"});
  for (double X : xs) {
    const auto v = h_series(t, k, X, std::min(cfg.n_zeros, t.size()));
    csv_row(out.os(), {num(X), num(v.value), num(v.tail_bound), std::to_string(v.n_used)});
  }
}

void explicit_eval(const RunConfig& cfg, const std::string& kind, double ell, const std::vector<double>& xs) {
  const auto t = build_tables(tables_size(xs, cfg.n_max), false);
  Output out(cfg.output);
  csv_row(out.os(), {"x", "value", "route"});
  for (double X : xs) {
    std::string route;
    const double v = explicit_value(t, kind, ell, X, &route);
    csv_row(out.os(), {num(X), num(v), route});
  }
}

void explicit_compare(const RunConfig& cfg, const std::string& kind, double ell, const std::vector<double>& xs) {
  const auto tables = build_tables(tables_size(xs, cfg.n_max), false);
  const auto zeros = load_table(cfg, cfg.n_zeros);
  const auto k = parse_kind(kind, ell);
  Output out(cfg.output);
  csv_row(out.os(), {"x", "explicit", "series", "tail_bound", "diff"});
  bool ok = true;
  for (double X : xs) {
    const double e = explicit_value(tables, kind, ell, X, nullptr);
    const auto s = h_series(zeros, k, X, std::min(cfg.n_zeros, zeros.size()));
    const double d = std::abs(e - s.value);
    ok = ok && d <= s.tail_bound + 1e-9;
    csv_row(out.os(), {num(X), num(e), num(s.value), num(s.tail_bound), num(d)});
  }
  if (!ok) throw CheckFailed("closed form and zero sum differ by more than the tail bound");
}

void mfunction_build(const RunConfig& cfg, const std::string& kind, double ell, std::size_t points) {
  const auto t = load_table(cfg, cfg.n_zeros);
  const auto pair = make_zeta_pair(t, parse_kind(kind, ell), std::min(cfg.n_zeros, t.size()));
  UGridSpec spec;
  spec.points = points;
  const auto d = invert_to_m_re(pair, spec);
  {
    Output out(cfg.output);
    csv_row(out.os(), {"u", "m_re"});
    for (std::size_t i = 0; i < d.u_grid.size(); ++i) csv_row(out.os(), {num(d.u_grid[i]), num(d.m_re[i])});
  }
  const json side{{"kind", kind},           {"ell", ell},
                  {"n_zeros", d.n_entries}, {"mass", d.mass},
                  {"second_moment", d.second_moment}, {"support_radius", d.support_radius}};
  if (cfg.output.empty()) {
    std::cerr << side.dump(2) << '\n';
  } else {
    std::ofstream s(cfg.output + ".json");
    s << side.dump(2) << '\n';
  }
}

void verify_distribution(const RunConfig& cfg, const std::string& pair_name, double T) {
  const auto pair = named_pair(pair_name, cfg);
  const auto d = invert_to_m_re(pair);
  const double dt = max_flow_step(pair);
  const double dist = distribution_check(pair, d, T);
  write_json(cfg, {{"pair", pair_name}, {"entries", pair.size()}, {"T", T}, {"dt", dt}, {"seed", cfg.seed},
                   {"cdf_distance", dist}});
}

void verify_pointmass(const RunConfig& cfg, const std::string& pair_name, double y, double T) {
  const auto pair = named_pair(pair_name, cfg);
  json j{{"pair", pair_name}, {"entries", pair.size()}, {"y", y}, {"seed", cfg.seed}, {"formula", point_mass(pair, y)}};
  if (T > 0.0) {
    j["T"] = T;
    j["empirical"] = point_mass_empirical(pair, y, T, max_flow_step(pair));
  }
  write_json(cfg, j);
}

void verify_screw(const RunConfig& cfg, const std::string& pair_name, std::size_t points, std::size_t seeds,
                  bool exact) {
  std::optional<ArithTables> tables;
  GFunction g;
  std::optional<SpectralPair> pair;
  double range = 50.0;
  if (exact) {
    tables = build_tables(cfg.n_max > 0 ? cfg.n_max : 1'000'000, false);
    g = exact_g_h1(*tables, constants());
    range = 0.5 * std::log(static_cast<double>(tables->n_max));
  } else {
    pair = named_pair(pair_name, cfg);
    g = [&](double t) { return g_of_t(*pair, t); };
  }
  json runs = json::array();
  bool all_psd = true;
  for (std::size_t s = 0; s < seeds; ++s) {
    std::mt19937_64 rng(cfg.seed * 1000 + s);
    std::uniform_real_distribution<double> u(-range, range);
    std::vector<double> pts(points);
    for (auto& p : pts) p = u(rng);
    const auto r = gram_psd_check(g, pts);
    all_psd = all_psd && r.psd;
    runs.push_back({{"seed", cfg.seed * 1000 + s}, {"min_eigenvalue", r.min_eigenvalue},
                    {"matrix_norm", r.matrix_norm}, {"psd", r.psd}});
  }
  write_json(cfg, {{"g", exact ? "exact_H1" : pair_name}, {"points", points}, {"range", range},
                   {"seed", cfg.seed}, {"runs", runs}, {"all_psd", all_psd}});
}

std::vector<std::int64_t> integers_to(std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi));
  std::iota(v.begin(), v.end(), std::int64_t{1});
  return v;
}

void goldbach_summary(const RunConfig& cfg, const std::vector<double>& xs, std::optional<double> c2) {
  std::vector<std::int64_t> X;
  for (double x : xs) {
    if (x < 1 || x != std::floor(x)) throw DomainError("goldbach summary: X must be a positive integer");
    X.push_back(static_cast<std::int64_t>(x));
  }
  const auto t = build_tables(tables_size(xs, cfg.n_max), true);
  const GoldbachData data(t, constants());
  double c = 0.0;
  if (c2) {
    c = *c2;
  } else {
    const auto zeros = load_table(cfg, cfg.n_zeros);
    c = estimate_c2(data, zeros, integers_to(t.n_max), std::min(cfg.n_zeros, zeros.size())).via_limit;
  }
  Output out(cfg.output);
  csv_row(out.os(), {"X", "S", "R", "D", "E"});
  for (const auto& s : summaries(data, X, c)) csv_row(out.os(), {std::to_string(s.X), num(s.S), num(s.R), num(s.D), num(s.E)});
}

void goldbach_c2(const RunConfig& cfg, std::int64_t x_max) {
  const auto t = build_tables(x_max, true);
  const GoldbachData data(t, constants());
  const auto zeros = load_table(cfg, cfg.n_zeros);
  const auto e = estimate_c2(data, zeros, integers_to(x_max), std::min(cfg.n_zeros, zeros.size()));
  write_json(cfg, {{"x_max", x_max},
                   {"n_zeros", e.rho_sum.n_zeros},
                   {"c2_limit", e.via_limit},
                   {"c2_zeros", e.via_zeros},
                   {"spread", e.spread},
                   {"cauchy_defect", e.cauchy_defect},
                   {"rho_sum", e.rho_sum.value},
                   {"rho_sum_tail_bound", e.rho_sum.tail_bound},
                   {"integral", e.integral},
                   {"integral_remainder_bound", e.integral_remainder_bound}});
}

void goldbach_roundtrip(const RunConfig& cfg, std::int64_t x_max) {
  const auto t = build_tables(x_max, true);
  const GoldbachData data(t, constants());
  const auto zeros = load_table(cfg, cfg.n_zeros);
  const std::size_t n = std::min(cfg.n_zeros, zeros.size());
  const auto grid = integers_to(x_max);
  const auto e = estimate_c2(data, zeros, grid, n);
  const auto r = conversion_roundtrip(data, zeros, grid, n, e.via_limit);
  write_json(cfg, {{"x_max", x_max},
                   {"n_zeros", n},
                   {"c2_limit", r.c2_limit},
                   {"c2_zeros", r.c2_zeros},
                   {"spread", std::abs(r.c2_zeros - r.c2_limit)},
                   {"r_diff", {{"mean", r.r_diff.mean}, {"std", r.r_diff.stddev}, {"max_abs", r.r_diff.max_abs}}},
                   {"e_diff", {{"mean", r.e_diff.mean}, {"std", r.e_diff.stddev}, {"max_abs", r.e_diff.max_abs}}},
                   {"r_within_budget", r.r_within_budget},
                   {"constant_difference", r.constant_difference}});
  if (!r.r_within_budget || !r.constant_difference) throw CheckFailed("roundtrip properties do not hold");
}

void accept(const RunConfig& cfg, bool skip_determinism) {
  const auto zeros = load_table(cfg, cfg.n_zeros);
  AcceptConfig ac;
  ac.n_zeros = cfg.n_zeros;
  ac.n_max = cfg.n_max > 0 ? cfg.n_max : 1'000'000;
  ac.seed = cfg.seed;
  ac.threads = cfg.threads;
  ac.check_determinism = !skip_determinism;
  const auto report = run_acceptance(ac, zeros, &std::cerr);
  write_json(cfg, report.to_json());
  print_summary(report, std::cerr);
  if (!report.passed()) throw CheckFailed("acceptance criteria failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zosc: zeta-zero oscillation toolkit"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--zeros", cfg.zeros_path, "zero table (default: $ZETA_ZEROS_PATH)");
  app.add_option("--output,-o", cfg.output, "output file (default: stdout)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  auto add_nzeros = [&](CLI::App* c) { c->add_option("--nzeros", cfg.n_zeros, "number of zeros")->check(CLI::PositiveNumber); };
  auto add_nmax = [&](CLI::App* c) { c->add_option("--nmax", cfg.n_max, "sieve limit")->check(CLI::NonNegativeNumber); };

  std::function<void()> action;

  auto* zeros = app.add_subcommand("zeros", "zero tables");
  zeros->require_subcommand(1);
  zeros->add_subcommand("validate", "count check against Riemann-von Mangoldt")->callback([&] {
    action = [&] { zeros_validate(cfg); };
  });

  auto* arith = app.add_subcommand("arith", "sieve tables");
  arith->require_subcommand(1);
  auto* arith_st = arith->add_subcommand("selftest", "sieve and Goldbach-sum consistency");
  add_nmax(arith_st);
  arith_st->callback([&] { action = [&] { arith_selftest(cfg); }; });

  auto* specfun = app.add_subcommand("specfun", "special functions");
  specfun->require_subcommand(1);
  specfun->add_subcommand("selftest", "spot checks")->callback([&] { action = [&] { specfun_selftest(cfg); }; });

  std::string kind = "H";
  double ell = 1.0;
  std::vector<double> xs;
  auto add_kind = [&](CLI::App* c) {
    c->add_option("--kind", kind, "H, H1, Hl or Hhalf");
    c->add_option("--ell", ell, "l for --kind Hl");
  };

  auto* series = app.add_subcommand("series", "truncated zero sums");
  series->require_subcommand(1);
  auto* series_eval_cmd = series->add_subcommand("eval", "H or H_l from the first n zeros");
  add_kind(series_eval_cmd);
  add_nzeros(series_eval_cmd);
  series_eval_cmd->add_option("--x", xs, "X values")->required()->delimiter(',');
  series_eval_cmd->callback([&] { action = [&] { series_eval(cfg, kind, ell, xs); }; });

  auto* expl = app.add_subcommand("explicit", "closed forms from primes");
  expl->require_subcommand(1);
  auto* expl_eval = expl->add_subcommand("eval", "closed-form value");
  add_kind(expl_eval);
  add_nmax(expl_eval);
  expl_eval->add_option("--x", xs, "X values")->required()->delimiter(',');
  expl_eval->callback([&] { action = [&] { explicit_eval(cfg, kind, ell, xs); }; });
  auto* expl_cmp = expl->add_subcommand("compare", "closed form against the zero sum");
  add_kind(expl_cmp);
  add_nmax(expl_cmp);
  add_nzeros(expl_cmp);
  expl_cmp->add_option("--x", xs, "X values")->required()->delimiter(',');
  expl_cmp->callback([&] { action = [&] { explicit_compare(cfg, kind, ell, xs); }; });

  std::size_t grid_points = 2001;
  auto* mf = app.add_subcommand("mfunction", "M-function densities");
  mf->require_subcommand(1);
  auto* mf_build = mf->add_subcommand("build", "invert the Bessel product");
  add_kind(mf_build);
  add_nzeros(mf_build);
  mf_build->add_option("--grid", grid_points, "odd number of u points");
  mf_build->callback([&] { action = [&] { mfunction_build(cfg, kind, ell, grid_points); }; });

  std::string pair_name = "lic";
  double T = 2e5;
  double y = 1.0;
  std::size_t points = 40, seeds = 20;
  bool exact = false;
  auto* verify = app.add_subcommand("verify", "distribution, point mass and PSD checks");
  verify->require_subcommand(1);
  auto* vd = verify->add_subcommand("distribution", "empirical CDF against M^Re");
  vd->add_option("--pair", pair_name, "single, lic, six, dependent, negative or zeta");
  vd->add_option("--T", T, "time horizon");
  add_nzeros(vd);
  vd->callback([&] { action = [&] { verify_distribution(cfg, pair_name, T); }; });
  auto* vp = verify->add_subcommand("pointmass", "atom at the origin");
  vp->add_option("--pair", pair_name, "single, lic, six, dependent or zeta");
  vp->add_option("--y", y, "y >= 0");
  vp->add_option("--T", T, "time horizon for the empirical value (0 skips it)");
  add_nzeros(vp);
  vp->callback([&] { action = [&] { verify_pointmass(cfg, pair_name, y, T); }; });
  auto* vs = verify->add_subcommand("screw", "Gram matrices of the screw kernel");
  vs->add_option("--pair", pair_name, "pair for the truncated g");
  vs->add_flag("--exact", exact, "use the closed-form g_H1 instead");
  vs->add_option("--points", points, "points per set");
  vs->add_option("--seeds", seeds, "number of point sets");
  add_nzeros(vs);
  add_nmax(vs);
  vs->callback([&] { action = [&] { verify_screw(cfg, pair_name, points, seeds, exact); }; });

  std::optional<double> c2;
  std::int64_t x_max = 100'000;
  auto* gb = app.add_subcommand("goldbach", "sums of r_2");
  gb->require_subcommand(1);
  auto* gs = gb->add_subcommand("summary", "S, R, D, E at integers");
  gs->add_option("--x", xs, "X values")->required()->delimiter(',');
  gs->add_option("--c2", c2, "c2 used in E (default: the limit estimate up to max X)");
  add_nzeros(gs);
  add_nmax(gs);
  gs->callback([&] { action = [&] { goldbach_summary(cfg, xs, c2); }; });
  auto* gc = gb->add_subcommand("c2", "c2 two ways");
  gc->add_option("--xmax", x_max, "data horizon")->check(CLI::Range(std::int64_t{2}, kMaxR2));
  add_nzeros(gc);
  gc->callback([&] { action = [&] { goldbach_c2(cfg, x_max); }; });
  auto* gr = gb->add_subcommand("roundtrip", "R <-> E conversions");
  gr->add_option("--xmax", x_max, "grid 1..xmax")->check(CLI::Range(std::int64_t{2}, kMaxRoundtrip));
  add_nzeros(gr);
  gr->callback([&] { action = [&] { goldbach_roundtrip(cfg, x_max); }; });

  bool skip_determinism = false;
  auto* acc = app.add_subcommand("accept", "run the acceptance suite, JSON report");
  add_nzeros(acc);
  add_nmax(acc);
  acc->add_flag("--skip-determinism", skip_determinism, "do not re-run on one thread");
  acc->callback([&] {
    if (acc->count("--nzeros") == 0) cfg.n_zeros = 100'000;
    action = [&] { accept(cfg, skip_determinism); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    set_thread_count(cfg.threads);
    if (action) action();
    return 0;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DataError& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
