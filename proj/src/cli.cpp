#include "ssz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ssz/errors.hpp"
#include "ssz/format.hpp"
#include "ssz/moments.hpp"
#include "ssz/parallel.hpp"
#include "ssz/smoothness.hpp"
#include "ssz/weighted.hpp"

namespace ssz::cli {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: pin '\n' line endings
  if (!out) throw ConfigError("cannot open output file '" + path + "'");
  return out;
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> xs(static_cast<size_t>(count));
  if (count == 1) {
    xs[0] = a;
    return xs;
  }
  for (int i = 0; i < count; ++i) {
    xs[static_cast<size_t>(i)] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return xs;
}

bool summation_feasible(const RunConfig& cfg, double n, double b_n, double x) {
  return (n / b_n) * x <= static_cast<double>(cfg.max_terms);
}

}  // namespace

std::string summary_path(const std::string& out_path) {
  const auto dot = out_path.find_last_of('.');
  if (dot == std::string::npos || out_path.find('/', dot) != std::string::npos) {
    return out_path + "_summary";
  }
  return out_path.substr(0, dot) + "_summary" + out_path.substr(dot);
}

int cmd_validate(const RunConfig& cfg, std::ostream& log) {
  const ShefferFamily fam = cfg.family.build(cfg.series_order);
  bool ok = true;

  const FamilyValidation rep = validate_family(fam);  // throws on (1.5)(ii) violations
  log << "family '" << fam.name << "': H'(1)=" << format_value(rep.h_prime_at_1)
      << " A(1)=" << format_value(rep.a_at_1) << "\n";
  log << "positivity scan: " << (rep.positivity_ok ? "pass" : "FAIL") << " (min p_k(x) = "
      << format_value(rep.min_value) << " at x=" << format_value(rep.min_value_x)
      << ", k=" << rep.min_value_k << ")\n";
  for (const auto& w : rep.warnings) log << "warning: " << w << "\n";
  ok = ok && rep.positivity_ok;

  const ScalingSequence scaling = cfg.scaling.rule == "table" && cfg.scaling.n_values.empty()
                                      ? ScalingSequence::table_rule(cfg.n_list, cfg.scaling.b_values)
                                      : cfg.scaling.build();
  const ScalingCheck chk = check_scaling(scaling, cfg.n_list);
  log << "scaling '" << scaling.describe() << "': positive=" << (chk.positive ? "yes" : "NO")
      << " increasing=" << (chk.increasing ? "yes" : "NO")
      << " b_n/n decreasing=" << (chk.ratio_decreasing ? "yes" : "NO") << " (first ratio "
      << format_value(chk.first_ratio) << ", last " << format_value(chk.last_ratio) << ")\n";
  if (!chk.ok()) {
    log << "scaling check failed: b_n must increase with b_n/n -> 0\n";
    ok = false;
  }

  const TargetFunction f = cfg.function.build();
  if (f.envelope) {
    const auto grid = linspace(0.0, 20.0, 201);
    if (!f.envelope_holds(grid)) {
      log << "function envelope |f| <= beta e^(alpha x) fails on the spot grid\n";
      ok = false;
    }
  }

  log << (ok ? "validation passed\n" : "validation FAILED\n");
  return ok ? kExitOk : kExitValidationFailure;
}

int cmd_converge(const RunConfig& cfg, std::ostream& log) {
  const ShefferFamily fam = cfg.family.build(cfg.series_order);
  validate_family(fam);
  const TargetFunction f = cfg.function.build();
  const std::vector<double> xs = linspace(cfg.interval[0], cfg.interval[1], cfg.grid_points);

  struct Column {
    std::string name;
    std::vector<GridPoint> points;
  };
  std::vector<Column> columns;
  const bool want_t = (cfg.op == "T" || cfg.op == "both");
  const bool want_star = (cfg.op == "T_star" || cfg.op == "both");
  for (int pass = 0; pass < 2; ++pass) {
    const bool star = pass == 1;
    if ((star && !want_star) || (!star && !want_t)) continue;
    for (double n : cfg.n_list) {
      const OperatorConfig ocfg = cfg.operator_config(n);
      Column col;
      col.name = (star ? "Tstar_" : "T_") + format_index(n);
      col.points = eval_grid(fam, ocfg, f, xs, star ? OperatorKind::TStar : OperatorKind::T);
      columns.push_back(std::move(col));
    }
  }

  auto out = open_out(cfg.out);
  out << "x,f";
  for (const auto& col : columns) out << "," << col.name;
  out << "\n";
  for (size_t i = 0; i < xs.size(); ++i) {
    out << format_value(xs[i]) << "," << format_value(f(xs[i]));
    for (const auto& col : columns) out << "," << format_value(col.points[i].value);
    out << "\n";
  }

  auto sum_out = open_out(summary_path(cfg.out));
  sum_out << "column,sup_error\n";
  for (const auto& col : columns) {
    double sup = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sup = std::max(sup, std::abs(col.points[i].value - f(xs[i])));
    }
    sum_out << col.name << "," << format_value(sup) << "\n";
  }
  log << "wrote " << cfg.out << " and " << summary_path(cfg.out) << "\n";
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& log) {
  const ShefferFamily fam = cfg.family.build(cfg.series_order);
  validate_family(fam);
  const TargetFunction f = cfg.function.build();
  const ScalingSequence scaling = cfg.scaling.build();
  const ModulusVariant variant = modulus_variant_from_string(cfg.modulus.variant);

  std::vector<double> bounds(cfg.n_list.size());
  parallel_for(cfg.n_list.size(), [&](size_t i) {
    const double n = cfg.n_list[i];
    bounds[i] = bound_thm26(fam, n, scaling.b(n), f, cfg.a, variant, cfg.modulus.table_grid_points)
                    .bound;
  });

  auto out = open_out(cfg.out);
  out << "n,bound\n";
  for (size_t i = 0; i < cfg.n_list.size(); ++i) {
    out << format_index(cfg.n_list[i]) << "," << format_value(bounds[i]) << "\n";
  }
  log << "wrote " << cfg.out << "\n";
  return kExitOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& log) {
  const ShefferFamily fam = cfg.family.build(cfg.series_order);
  validate_family(fam);
  const TargetFunction f = cfg.function.build();
  const ScalingSequence scaling = cfg.scaling.build();
  const ModulusVariant variant = modulus_variant_from_string(cfg.modulus.variant);
  const WeightFunction w = default_weight();

  auto requested = [&](const std::string& t) {
    return std::find(cfg.theorems.begin(), cfg.theorems.end(), t) != cfg.theorems.end();
  };

  json root;
  root["family"] = fam.name;
  root["function"] = f.name;
  root["a"] = cfg.a;
  root["variant"] = cfg.modulus.variant;
  root["M"] = cfg.M;

  json results = json::array();
  json sup_errors = json::array();
  const std::array<double, 3> norms = estimate_cb2_norms(f, cfg.norm_x_max);

  for (double n : cfg.n_list) {
    const OperatorConfig ocfg = cfg.operator_config(n);
    // interval-level: Theorem 2.6 vs measured sup error on [0, a]
    json sup_entry;
    sup_entry["n"] = n;
    sup_entry["b_n"] = ocfg.b_n;
    if (requested("T2_6")) {
      const BoundReport b26 =
          bound_thm26(fam, n, ocfg.b_n, f, cfg.a, variant, cfg.modulus.grid_points);
      sup_entry["thm26_bound"] = b26.bound;
      sup_entry["thm26_components"] = b26.components;
      if (summation_feasible(cfg, n, ocfg.b_n, cfg.a)) {
        const auto grid = linspace(0.0, cfg.a, cfg.grid_points);
        const auto pts = eval_grid(fam, ocfg, f, grid, OperatorKind::TStar);
        double sup = 0.0;
        for (size_t i = 0; i < grid.size(); ++i) {
          sup = std::max(sup, std::abs(pts[i].value - f(grid[i])));
        }
        sup_entry["sup_error"] = sup;
        sup_entry["dominated"] = b26.bound >= sup;
      }
    }
    sup_errors.push_back(sup_entry);

    for (double x : cfg.x_values) {
      json entry;
      entry["n"] = n;
      entry["b_n"] = ocfg.b_n;
      entry["x"] = x;
      json jb;
      if (requested("T2_6")) {
        const BoundReport b = bound_thm26(fam, n, ocfg.b_n, f, cfg.a, variant, cfg.modulus.grid_points);
        jb["T2_6"] = {{"bound", b.bound}, {"components", b.components}};
      }
      if (requested("T2_7")) {
        const BoundReport b = bound_thm27(fam, n, ocfg.b_n, f, cfg.a, x, cfg.modulus.grid_points);
        jb["T2_7"] = {{"bound", b.bound}, {"components", b.components}};
      }
      if (requested("T2_8")) {
        const BoundReport b = bound_thm28(fam, n, ocfg.b_n, norms, x);
        jb["T2_8"] = {{"bound", b.bound}, {"components", b.components}};
      }
      if (requested("T2_9")) {
        const BoundReport b =
            bound_thm29(fam, n, ocfg.b_n, f, x, cfg.M, cfg.norm_x_max, cfg.modulus.grid_points);
        jb["T2_9"] = {{"bound", b.bound}, {"components", b.components}};
      }
      entry["bounds"] = jb;
      if (summation_feasible(cfg, n, ocfg.b_n, x)) {
        const double measured = std::abs(apply_T_star(fam, ocfg, f, x).value - f(x));
        entry["measured_error"] = measured;
        json ratios;
        for (const auto& item : jb.items()) {
          if (measured > 0.0) ratios[item.key()] = item.value()["bound"].get<double>() / measured;
        }
        entry["bound_over_error"] = ratios;
      }
      results.push_back(entry);
    }

    if (requested("T3_7")) {
      const Thm37Report t37 = bound_thm37(fam, ocfg, f, w);
      json entry;
      entry["n"] = n;
      entry["b_n"] = ocfg.b_n;
      entry["T3_7"] = {{"bound", t37.bound},   {"omega", t37.omega}, {"delta", t37.delta},
                       {"alpha", t37.alpha},   {"beta", t37.beta},   {"f_norm_rho", t37.f_norm},
                       {"lhs", t37.lhs},       {"dominated", t37.dominated}};
      root["weighted"].push_back(entry);
    }
  }
  root["results"] = results;
  root["sup_errors"] = sup_errors;

  auto out = open_out(cfg.out);
  out << root.dump(2) << "\n";
  log << "wrote " << cfg.out << "\n";
  return kExitOk;
}

int cmd_moments(const RunConfig& cfg, std::ostream& log) {
  const ShefferFamily fam = cfg.family.build(cfg.series_order);
  validate_family(fam);

  auto out = open_out(cfg.out);
  out << "n,b_n,x,m0,m1,m2,c2_displayed,c2_algebraic,m0_num,m1_num,m2_num,c2_num\n";
  for (double n : cfg.n_list) {
    const OperatorConfig ocfg = cfg.operator_config(n);
    for (double x : cfg.x_values) {
      const MomentSet m = moment_set(fam, n, ocfg.b_n, x);
      out << format_index(n) << "," << format_value(ocfg.b_n) << "," << format_value(x) << ","
          << format_value(m.m0) << "," << format_value(m.m1) << "," << format_value(m.m2) << ","
          << format_value(central_moment2(fam, n, ocfg.b_n, x)) << "," << format_value(m.c2);
      if (summation_feasible(cfg, n, ocfg.b_n, x)) {
        const double m0 = apply_T_star(fam, ocfg, builtin_function("e0"), x).value;
        const double m1 = apply_T_star(fam, ocfg, builtin_function("e1"), x).value;
        const double m2 = apply_T_star(fam, ocfg, builtin_function("e2"), x).value;
        TargetFunction sq;
        sq.name = "(t-x)^2";
        sq.eval = [x](double t) { return (t - x) * (t - x); };
        const double c2 = apply_T_star(fam, ocfg, sq, x).value;
        out << "," << format_value(m0) << "," << format_value(m1) << "," << format_value(m2) << ","
            << format_value(c2);
      } else {
        out << ",,,,";
      }
      out << "\n";
    }
  }
  log << "wrote " << cfg.out << "\n";
  return kExitOk;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& log,
                std::ostream& err) {
  try {
    if (name == "validate") return cmd_validate(cfg, log);
    if (name == "converge") return cmd_converge(cfg, log);
    if (name == "table") return cmd_table(cfg, log);
    if (name == "bounds") return cmd_bounds(cfg, log);
    if (name == "moments") return cmd_moments(cfg, log);
    err << "unknown command '" << name << "'\n";
    return kExitParseError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitParseError;
  }
}

}  // namespace ssz::cli
