// Python bindings: zero tables, sieve tables, the closed forms and the zero
// series, M^Re inversion, point masses and the Goldbach constants. Arrays come
// back as numpy arrays; library errors map to ValueError / RuntimeError.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
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

namespace py = pybind11;
using namespace zosc;

namespace {

template <class T>
py::array_t<double> to_array(const std::vector<T>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  auto w = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) w(static_cast<py::ssize_t>(i)) = static_cast<double>(v[i]);
  return out;
}

py::array_t<double> to_array(std::span<const double> v) {
  return to_array(std::vector<double>(v.begin(), v.end()));
}

py::dict eval_dict(const ExplicitEval& e) {
  py::dict d;
  d["X"] = e.X;
  d["value"] = e.value;
  d["route"] = route_name(e.route, e.param);
  d["right_limit"] = e.right_limit;
  py::dict parts;
  for (const auto& [name, v] : e.components) parts[py::str(name)] = v;
  d["components"] = parts;
  return d;
}

SeriesKind parse_kind(const std::string& kind, double ell) {
  if (kind == "H") return SeriesKind::h();
  if (kind == "Hl") return SeriesKind::hl(ell);
  throw DomainError("series kind must be 'H' or 'Hl'");
}

// Keeps the tables alive as long as the data that points into them.
struct Goldbach {
  std::shared_ptr<const ArithTables> tables;
  std::unique_ptr<GoldbachData> data;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-indexed oscillation series and their closed forms";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  m.def("set_thread_count", &set_thread_count, py::arg("n"));
  m.def("thread_count", &thread_count);

  py::class_<ZeroTable>(m, "ZeroTable")
      .def_static(
          "from_ordinates",
          [](std::vector<double> g, std::vector<int> mult) { return ZeroTable::from_ordinates(std::move(g), std::move(mult)); },
          py::arg("gammas"), py::arg("multiplicities") = std::vector<int>{})
      .def("__len__", &ZeroTable::size)
      .def_property_readonly("gammas", [](const ZeroTable& t) { return to_array(t.gammas()); })
      .def_property_readonly("multiplicities",
                             [](const ZeroTable& t) {
                               return std::vector<int>(t.multiplicities().begin(), t.multiplicities().end());
                             })
      .def_property_readonly("source", &ZeroTable::source)
      .def_property_readonly("max_gamma", &ZeroTable::max_gamma)
      .def("text", &ZeroTable::text, py::arg("i"))
      .def("dumps", [](const ZeroTable& t) {
        std::ostringstream os;
        t.write(os);
        return os.str();
      });
  m.def("load_zeros", &load_zeros, py::arg("path"), py::arg("limit") = std::nullopt);
  m.def(
      "parse_zeros",
      [](const std::string& text, std::optional<std::size_t> limit) {
        std::istringstream in(text);
        return parse_zeros(in, "<string>", limit);
      },
      py::arg("text"), py::arg("limit") = std::nullopt);
  m.def("riemann_von_mangoldt", &riemann_von_mangoldt, py::arg("T"));
  m.def("count_below", &count_below, py::arg("table"), py::arg("T"));

  py::class_<ArithTables, std::shared_ptr<ArithTables>>(m, "ArithTables")
      .def_readonly("n_max", &ArithTables::n_max)
      .def_property_readonly("has_r2", &ArithTables::has_r2)
      .def_property_readonly("lambda_", [](const ArithTables& t) { return to_array(t.lambda); })
      .def_property_readonly("psi", [](const ArithTables& t) { return to_array(t.psi_prefix); })
      .def_property_readonly("r2", [](const ArithTables& t) { return to_array(t.r2); });
  m.def(
      "build_tables",
      [](std::int64_t n_max, bool with_r2) { return std::make_shared<ArithTables>(build_tables(n_max, with_r2)); },
      py::arg("n_max"), py::arg("with_r2") = false);
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("prime_power_base", &prime_power_base, py::arg("n"));
  m.def("goldbach_prefix", &goldbach_prefix, py::arg("tables"), py::arg("X"));

  py::class_<Constants>(m, "Constants")
      .def_readonly("euler_gamma", &Constants::euler_gamma)
      .def_readonly("zeta_prime_minus1", &Constants::zeta_prime_minus1)
      .def_readonly("log_2pi", &Constants::log_2pi)
      .def_readonly("zeta_logderiv_half", &Constants::zeta_logderiv_half)
      .def_readonly("zeta_logderiv_deriv_half", &Constants::zeta_logderiv_deriv_half);
  m.def("constants", &constants, py::return_value_policy::reference);
  m.def("bessel_j0", &bessel_j0, py::arg("x"));
  m.def("bessel_i0", &bessel_i0, py::arg("x"));
  m.def("lerch_phi", &lerch_phi, py::arg("z"), py::arg("s"), py::arg("a"));
  m.def("zeta_logderiv", &zeta_logderiv, py::arg("s"), py::arg("order") = 0);

  m.def(
      "explicit_H", [](const ArithTables& t, double X) { return eval_dict(explicit_H(t, constants(), X)); },
      py::arg("tables"), py::arg("X"));
  m.def(
      "explicit_H1", [](const ArithTables& t, double X) { return eval_dict(explicit_H1(t, constants(), X)); },
      py::arg("tables"), py::arg("X"));
  m.def(
      "explicit_Hl",
      [](const ArithTables& t, double X, double ell) { return eval_dict(explicit_Hl(t, constants(), X, ell)); },
      py::arg("tables"), py::arg("X"), py::arg("ell"));
  m.def(
      "explicit_Hhalf", [](const ArithTables& t, double X) { return eval_dict(explicit_Hhalf(t, constants(), X)); },
      py::arg("tables"), py::arg("X"));
  m.def(
      "partial_sum_over_zeros",
      [](const ArithTables& t, double X, double s) { return partial_sum_over_zeros(t, constants(), X, s); },
      py::arg("tables"), py::arg("X"), py::arg("s"));

  py::class_<SpectralPair>(m, "SpectralPair")
      .def("__len__", &SpectralPair::size)
      .def_property_readonly("m1_sum_abs", &SpectralPair::m1_sum_abs)
      .def_property_readonly("c", &SpectralPair::c)
      .def_property_readonly("satisfies_s1", &SpectralPair::satisfies_s1)
      .def_property_readonly("satisfies_s2", &SpectralPair::satisfies_s2)
      .def_property_readonly("real_spectrum", &SpectralPair::real_spectrum)
      .def_property_readonly("omegas",
                             [](const SpectralPair& p) {
                               std::vector<cplx> v;
                               for (const auto& e : p.entries()) v.push_back(e.omega);
                               return v;
                             })
      .def_property_readonly("coeffs",
                             [](const SpectralPair& p) {
                               std::vector<cplx> v;
                               for (const auto& e : p.entries()) v.push_back(e.coeff);
                               return v;
                             })
      .def("f", &f_of_t, py::arg("t"))
      .def("g", &g_of_t, py::arg("t"));
  m.def(
      "spectral_pair",
      [](const std::vector<cplx>& omegas, const std::vector<cplx>& coeffs) {
        if (omegas.size() != coeffs.size()) throw DomainError("omegas and coeffs differ in length");
        std::vector<PairEntry> entries;
        for (std::size_t i = 0; i < omegas.size(); ++i) entries.push_back({omegas[i], coeffs[i]});
        return SpectralPair(std::move(entries));
      },
      py::arg("omegas"), py::arg("coeffs"));
  m.def(
      "zeta_pair",
      [](const ZeroTable& t, std::size_t n, const std::string& kind, double ell) {
        return make_zeta_pair(t, parse_kind(kind, ell), n);
      },
      py::arg("table"), py::arg("n"), py::arg("kind") = "H", py::arg("ell") = 0.0);
  m.def(
      "h_series",
      [](const ZeroTable& t, double X, std::size_t n, const std::string& kind, double ell) {
        const auto r = h_series(t, parse_kind(kind, ell), X, n);
        py::dict d;
        d["value"] = r.value;
        d["tail_bound"] = r.tail_bound;
        d["n_used"] = r.n_used;
        d["gamma_max"] = r.gamma_max;
        return d;
      },
      py::arg("table"), py::arg("X"), py::arg("n"), py::arg("kind") = "H", py::arg("ell") = 0.0);
  m.def("tail_bound", &tail_bound, py::arg("T"));

  m.def(
      "invert_to_m_re",
      [](const SpectralPair& p, std::size_t points, double half_width) {
        const auto d = invert_to_m_re(p, UGridSpec{points, half_width});
        py::dict out;
        out["u"] = to_array(d.u_grid);
        out["m_re"] = to_array(d.m_re);
        out["mass"] = d.mass;
        out["second_moment"] = d.second_moment;
        out["support_radius"] = d.support_radius;
        out["cutoff"] = d.cutoff;
        out["tail_bound"] = d.tail_bound;
        return out;
      },
      py::arg("pair"), py::arg("points") = 2001, py::arg("half_width") = 0.0);
  m.def("point_mass", &point_mass, py::arg("pair"), py::arg("y"));
  m.def("point_mass_empirical", &point_mass_empirical, py::arg("pair"), py::arg("y"), py::arg("T"),
        py::arg("dt"));
  m.def(
      "gram_min_eigenvalue",
      [](const SpectralPair& p, const std::vector<double>& points) {
        const auto r = gram_psd_check(p, points);
        return py::make_tuple(r.min_eigenvalue, r.matrix_norm, r.psd);
      },
      py::arg("pair"), py::arg("points"));

  py::class_<Goldbach>(m, "Goldbach")
      .def(py::init([](std::shared_ptr<ArithTables> t) {
             auto g = std::make_unique<Goldbach>();
             g->tables = t;
             g->data = std::make_unique<GoldbachData>(*t, constants());
             return g;
           }),
           py::arg("tables"))
      .def_property_readonly("x_max", [](const Goldbach& g) { return g.data->x_max(); })
      .def("S", [](const Goldbach& g, double y) { return g.data->S(y); }, py::arg("y"))
      .def("D", [](const Goldbach& g, double y) { return g.data->D(y); }, py::arg("y"))
      .def("R", [](const Goldbach& g, double y) { return static_cast<double>(g.data->R(y)); }, py::arg("y"))
      .def(
          "E", [](const Goldbach& g, double y, double c2) { return static_cast<double>(g.data->E_plus_c2(y)) - c2; },
          py::arg("y"), py::arg("c2"))
      .def(
          "estimate_c2",
          [](const Goldbach& g, const ZeroTable& table, std::int64_t x_max, std::size_t n_zeros) {
            std::vector<std::int64_t> grid(static_cast<std::size_t>(x_max));
            for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = static_cast<std::int64_t>(i) + 1;
            const auto e = estimate_c2(*g.data, table, grid, n_zeros);
            py::dict d;
            d["via_limit"] = e.via_limit;
            d["via_zeros"] = e.via_zeros;
            d["spread"] = e.spread;
            d["cauchy_defect"] = e.cauchy_defect;
            d["rho_sum"] = e.rho_sum.value;
            d["integral"] = e.integral;
            d["integral_remainder_bound"] = e.integral_remainder_bound;
            return d;
          },
          py::arg("table"), py::arg("x_max"), py::arg("n_zeros"));
  m.def(
      "rho_cubic_sum_closed", [](const ArithTables& t) { return rho_cubic_sum_closed(t, constants()); },
      py::arg("tables"));
  m.def(
      "chebyshev_integral_check",
      [](const ArithTables& t, double X) { return chebyshev_integral_check(t, constants(), X); }, py::arg("tables"),
      py::arg("X"));

  m.def(
      "run_acceptance",
      [](const ZeroTable& table, std::size_t n_zeros, std::int64_t n_max, std::uint64_t seed, bool determinism) {
        AcceptConfig cfg;
        cfg.n_zeros = n_zeros;
        cfg.n_max = n_max;
        cfg.seed = seed;
        cfg.check_determinism = determinism;
        AcceptReport report;
        {
          py::gil_scoped_release release;
          report = run_acceptance(cfg, table);
        }
        return report.to_json().dump();
      },
      py::arg("table"), py::arg("n_zeros") = 100'000, py::arg("n_max") = 1'000'000, py::arg("seed") = 1,
      py::arg("check_determinism") = true);
}
