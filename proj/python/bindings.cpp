#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssz/cli.hpp"
#include "ssz/config.hpp"
#include "ssz/errors.hpp"
#include "ssz/functions.hpp"
#include "ssz/moments.hpp"
#include "ssz/operators.hpp"
#include "ssz/series.hpp"
#include "ssz/sheffer.hpp"
#include "ssz/smoothness.hpp"
#include "ssz/weighted.hpp"

#include <sstream>

namespace py = pybind11;
using namespace ssz;

namespace {

TargetFunction make_function(const py::object& f) {
  if (py::isinstance<py::str>(f)) return builtin_function(f.cast<std::string>());
  if (py::isinstance<TargetFunction>(f)) return f.cast<TargetFunction>();
  TargetFunction tf;
  tf.name = "callable";
  tf.eval = f.cast<std::function<double(double)>>();
  return tf;
}

}  // namespace

PYBIND11_MODULE(_sszops, m) {
  m.doc() = "Chlodowsky-variant generalized Szasz operators driven by Sheffer families";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<ValidationError>(m, "ValidationError");
  py::register_exception<NumericError>(m, "NumericError");

  py::class_<TruncatedSeries>(m, "TruncatedSeries")
      .def(py::init<std::vector<double>>())
      .def_property_readonly("order", &TruncatedSeries::order)
      .def("__getitem__", &TruncatedSeries::operator[])
      .def("coeffs", [](const TruncatedSeries& s) {
        return std::vector<double>(s.coeffs().begin(), s.coeffs().end());
      });
  m.def("series_add", &series_add);
  m.def("series_mul", &series_mul);
  m.def("series_exp", &series_exp);
  m.def("series_eval_derivatives", &series_eval_derivatives, py::arg("series"), py::arg("t0"),
        py::arg("max_order"));

  py::class_<ShefferFamily>(m, "ShefferFamily")
      .def_readonly("name", &ShefferFamily::name)
      .def_readonly("A1", &ShefferFamily::A1)
      .def_readonly("A1p", &ShefferFamily::A1p)
      .def_readonly("A1pp", &ShefferFamily::A1pp)
      .def_readonly("H1", &ShefferFamily::H1)
      .def_readonly("H1p", &ShefferFamily::H1p)
      .def_readonly("H1pp", &ShefferFamily::H1pp)
      .def_static("from_series", &ShefferFamily::from_series, py::arg("name"), py::arg("A"),
                  py::arg("H"));
  m.def("builtin_family", &builtin_family);
  m.def("appell_family", &appell_family, py::arg("g"), py::arg("name") = "appell");

  py::class_<FamilyValidation>(m, "FamilyValidation")
      .def_readonly("h_prime_at_1", &FamilyValidation::h_prime_at_1)
      .def_readonly("a_at_1", &FamilyValidation::a_at_1)
      .def_readonly("positivity_ok", &FamilyValidation::positivity_ok)
      .def_readonly("min_value", &FamilyValidation::min_value)
      .def_readonly("warnings", &FamilyValidation::warnings)
      .def("passed", &FamilyValidation::passed);
  m.def(
      "validate_family",
      [](const ShefferFamily& fam, std::vector<double> grid, int scan_order) {
        return validate_family(fam, grid, scan_order);
      },
      py::arg("family"), py::arg("scan_grid") = std::vector<double>{}, py::arg("scan_order") = 128);
  m.def(
      "sheffer_values",
      [](const ShefferFamily& fam, double x, int K) { return sheffer_values(fam, x, K).values; },
      py::arg("family"), py::arg("x"), py::arg("K"));

  py::class_<TargetFunction>(m, "TargetFunction")
      .def_readonly("name", &TargetFunction::name)
      .def("__call__", [](const TargetFunction& f, double x) { return f(x); });
  m.def("builtin_function", &builtin_function);

  py::class_<TruncationPolicy>(m, "TruncationPolicy")
      .def(py::init<>())
      .def_readwrite("tail_epsilon", &TruncationPolicy::tail_epsilon)
      .def_readwrite("max_terms", &TruncationPolicy::max_terms);

  py::class_<OperatorConfig>(m, "OperatorConfig")
      .def(py::init([](double n, double b_n, double tail_epsilon, std::int64_t max_terms) {
             OperatorConfig cfg;
             cfg.n = n;
             cfg.b_n = b_n;
             cfg.trunc.tail_epsilon = tail_epsilon;
             cfg.trunc.max_terms = max_terms;
             return cfg;
           }),
           py::arg("n"), py::arg("b_n"), py::arg("tail_epsilon") = 1e-12,
           py::arg("max_terms") = 100000)
      .def_readwrite("n", &OperatorConfig::n)
      .def_readwrite("b_n", &OperatorConfig::b_n);

  py::class_<OperatorResult>(m, "OperatorResult")
      .def_readonly("value", &OperatorResult::value)
      .def_readonly("tail", &OperatorResult::tail)
      .def_readonly("terms", &OperatorResult::terms);

  m.def(
      "apply_T",
      [](const ShefferFamily& fam, double n, const py::object& f, double x, double tail_epsilon,
         std::int64_t max_terms) {
        return apply_T(fam, n, make_function(f), x, TruncationPolicy{tail_epsilon, max_terms});
      },
      py::arg("family"), py::arg("n"), py::arg("f"), py::arg("x"),
      py::arg("tail_epsilon") = 1e-12, py::arg("max_terms") = 100000);
  m.def(
      "apply_T_star",
      [](const ShefferFamily& fam, const OperatorConfig& cfg, const py::object& f, double x) {
        return apply_T_star(fam, cfg, make_function(f), x);
      },
      py::arg("family"), py::arg("config"), py::arg("f"), py::arg("x"));
  m.def(
      "apply_P_star",
      [](const ShefferFamily& fam, const OperatorConfig& cfg, const py::object& f, double x) {
        return apply_P_star(fam, cfg, default_weight(), make_function(f), x);
      },
      py::arg("family"), py::arg("config"), py::arg("f"), py::arg("x"));
  m.def(
      "eval_grid",
      [](const ShefferFamily& fam, const OperatorConfig& cfg, const py::object& f,
         std::vector<double> grid, bool star) {
        const auto pts =
            eval_grid(fam, cfg, make_function(f), grid, star ? OperatorKind::TStar : OperatorKind::T);
        std::vector<std::tuple<double, double, double>> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.emplace_back(p.x, p.value, p.tail);
        return out;
      },
      py::arg("family"), py::arg("config"), py::arg("f"), py::arg("grid"), py::arg("star") = true);

  m.def("moment_closed_form", &moment_closed_form, py::arg("family"), py::arg("n"), py::arg("b_n"),
        py::arg("x"), py::arg("i"));
  m.def("central_moment2", &central_moment2);
  m.def("algebraic_c2", &algebraic_c2);
  m.def("central_moment1_algebraic", &central_moment1_algebraic);

  m.def(
      "modulus",
      [](const py::object& f, double delta, double a0, double a1, const std::string& variant,
         int grid_points) {
        return modulus(make_function(f), delta, a0, a1, modulus_variant_from_string(variant),
                       grid_points)
            .value;
      },
      py::arg("f"), py::arg("delta"), py::arg("a0"), py::arg("a1"),
      py::arg("variant") = "two_point", py::arg("grid_points") = 2001);
  m.def(
      "second_modulus",
      [](const py::object& f, double delta, double a0, double a1, int grid_points) {
        return second_modulus(make_function(f), delta, a0, a1, grid_points).value;
      },
      py::arg("f"), py::arg("delta"), py::arg("a0"), py::arg("a1"), py::arg("grid_points") = 2001);
  m.def(
      "steklov",
      [](const py::object& f, double h, double x, double a0, double a1, int quad) {
        return steklov(make_function(f), h, x, a0, a1, quad);
      },
      py::arg("f"), py::arg("h"), py::arg("x"), py::arg("a0"), py::arg("a1"),
      py::arg("quadrature_points") = 64);

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("theorem", &BoundReport::theorem)
      .def_readonly("bound", &BoundReport::bound)
      .def_readonly("components", &BoundReport::components)
      .def_readonly("n", &BoundReport::n)
      .def_readonly("b_n", &BoundReport::b_n)
      .def_readonly("x", &BoundReport::x)
      .def_readonly("a", &BoundReport::a);
  m.def(
      "bound_thm26",
      [](const ShefferFamily& fam, double n, double b_n, const py::object& f, double a,
         const std::string& variant, int grid_points) {
        return bound_thm26(fam, n, b_n, make_function(f), a, modulus_variant_from_string(variant),
                           grid_points);
      },
      py::arg("family"), py::arg("n"), py::arg("b_n"), py::arg("f"), py::arg("a"),
      py::arg("variant") = "exact_increment", py::arg("grid_points") = 20001);
  m.def(
      "bound_thm27",
      [](const ShefferFamily& fam, double n, double b_n, const py::object& f, double a, double x,
         int grid_points) { return bound_thm27(fam, n, b_n, make_function(f), a, x, grid_points); },
      py::arg("family"), py::arg("n"), py::arg("b_n"), py::arg("f"), py::arg("a"), py::arg("x"),
      py::arg("grid_points") = 2001);
  m.def(
      "bound_thm28",
      [](const ShefferFamily& fam, double n, double b_n, std::array<double, 3> norms, double x) {
        return bound_thm28(fam, n, b_n, norms, x);
      },
      py::arg("family"), py::arg("n"), py::arg("b_n"), py::arg("f_norms"), py::arg("x"));
  m.def(
      "bound_thm29",
      [](const ShefferFamily& fam, double n, double b_n, const py::object& f, double x, double M,
         double norm_x_max, int grid_points) {
        return bound_thm29(fam, n, b_n, make_function(f), x, M, norm_x_max, grid_points);
      },
      py::arg("family"), py::arg("n"), py::arg("b_n"), py::arg("f"), py::arg("x"),
      py::arg("M") = 1.0, py::arg("norm_x_max") = 50.0, py::arg("grid_points") = 2001);

  m.def(
      "weighted_norm",
      [](const py::object& f, double x_max, int grid_points) {
        const auto r = weighted_norm(make_function(f), default_weight(), x_max, grid_points);
        return py::make_tuple(r.value, r.tail_flag, r.argmax);
      },
      py::arg("f"), py::arg("x_max") = 1000.0, py::arg("grid_points") = 100000);
  m.def(
      "lemma33_bound",
      [](const ShefferFamily& fam, double n, double b_n) {
        const auto r = lemma33_bound(fam, n, b_n);
        return py::make_tuple(r.bound, r.measured_norm, r.ok);
      },
      py::arg("family"), py::arg("n"), py::arg("b_n"));
  m.def(
      "weighted_modulus",
      [](const py::object& f, double delta, double x_max, int x_points, int t_points) {
        return weighted_modulus(make_function(f), default_weight(), delta, x_max, x_points,
                                t_points);
      },
      py::arg("f"), py::arg("delta"), py::arg("x_max") = 20.0, py::arg("x_points") = 2000,
      py::arg("t_points") = 200);
  m.def(
      "theorem37_quantities",
      [](const ShefferFamily& fam, double n, double b_n) {
        const auto q = theorem37_quantities(fam, n, b_n);
        return py::make_tuple(q.alpha, q.beta, q.gamma);
      },
      py::arg("family"), py::arg("n"), py::arg("b_n"));
  m.def(
      "bound_thm37",
      [](const ShefferFamily& fam, const OperatorConfig& cfg, const py::object& f,
         double lhs_x_max, int lhs_points) {
        const auto r = bound_thm37(fam, cfg, make_function(f), default_weight(), lhs_x_max,
                                   lhs_points);
        py::dict d;
        d["bound"] = r.bound;
        d["omega"] = r.omega;
        d["alpha"] = r.alpha;
        d["beta"] = r.beta;
        d["delta"] = r.delta;
        d["f_norm"] = r.f_norm;
        d["lhs"] = r.lhs;
        d["dominated"] = r.dominated;
        return d;
      },
      py::arg("family"), py::arg("config"), py::arg("f"), py::arg("lhs_x_max") = 10.0,
      py::arg("lhs_points") = 201);

  m.def(
      "run_cli",
      [](const std::string& command, const std::string& config_json) {
        const RunConfig cfg = parse_config_text(config_json);
        std::ostringstream log, err;
        const int code = cli::run_command(command, cfg, log, err);
        return py::make_tuple(code, log.str(), err.str());
      },
      py::arg("command"), py::arg("config_json"),
      "Run a CLI command (validate | converge | table | bounds | moments) from a JSON "
      "config string; returns (exit_code, stdout, stderr).");
}
