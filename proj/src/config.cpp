#include "ssz/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ssz/errors.hpp"

namespace ssz {

using nlohmann::json;

ShefferFamily FamilySpec::build(int series_order) const {
  if (!A.empty() || !H.empty()) {
    if (A.empty() || H.empty()) {
      throw ConfigError("family: custom families need both A and H coefficient arrays");
    }
    return ShefferFamily::from_series("custom", TruncatedSeries(A), TruncatedSeries(H));
  }
  if (builtin == "appell") {
    if (g.empty()) throw ConfigError("family: appell requires a g coefficient array");
    return appell_family(TruncatedSeries(g));
  }
  (void)series_order;  // catalog families carry their own orders
  return builtin_family(builtin);
}

TargetFunction FunctionSpec::build() const {
  TargetFunction f;
  if (!sample_x.empty() || !sample_y.empty()) {
    f = sampled_function(sample_x, sample_y);
  } else {
    f = builtin_function(builtin);
  }
  if (envelope) f.envelope = envelope;
  return f;
}

ScalingSequence ScalingSpec::build() const {
  if (rule == "sqrt") return ScalingSequence::sqrt_rule();
  if (rule == "power") return ScalingSequence::power_rule(exponent);
  if (rule == "table") return ScalingSequence::table_rule(n_values, b_values);
  throw ConfigError("unknown scaling rule '" + rule + "' (expected sqrt | power | table)");
}

ScalingSpec ScalingSpec::parse_rule(const std::string& text) {
  ScalingSpec s;
  if (text == "sqrt") {
    s.rule = "sqrt";
    return s;
  }
  if (text.rfind("power:", 0) == 0) {
    s.rule = "power";
    try {
      s.exponent = std::stod(text.substr(6));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse power exponent in '" + text + "'");
    }
    return s;
  }
  if (text.rfind("table:", 0) == 0) {
    s.rule = "table";
    std::stringstream ss(text.substr(6));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        s.b_values.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ConfigError("cannot parse table value '" + tok + "' in '" + text + "'");
      }
    }
    if (s.b_values.empty()) throw ConfigError("empty table in '" + text + "'");
    return s;
  }
  throw ConfigError("unknown --bn rule '" + text + "' (expected sqrt | power:P | table:v1,v2,...)");
}

OperatorConfig RunConfig::operator_config(double n) const {
  OperatorConfig cfg;
  cfg.n = n;
  ScalingSpec sc = scaling;
  if (sc.rule == "table" && sc.n_values.empty()) sc.n_values = n_list;
  cfg.b_n = sc.build().b(n);
  cfg.trunc = truncation();
  return cfg;
}

namespace {

void expect_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ConfigError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

std::vector<double> as_double_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(where + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

  expect_keys(j, "config",
              {"family", "scaling", "n", "function", "interval", "grid_points", "out",
               "tail_epsilon", "max_terms", "series_order", "modulus", "operator", "theorems",
               "x_values", "a", "M", "norm_x_max"});

  RunConfig cfg;
  if (j.contains("family")) {
    const json& f = j["family"];
    if (f.is_string()) {
      cfg.family.builtin = f.get<std::string>();
    } else if (f.is_object()) {
      expect_keys(f, "family", {"builtin", "A", "H", "g"});
      if (f.contains("builtin")) cfg.family.builtin = f["builtin"].get<std::string>();
      if (f.contains("A")) cfg.family.A = as_double_list(f["A"], "family.A");
      if (f.contains("H")) cfg.family.H = as_double_list(f["H"], "family.H");
      if (f.contains("g")) cfg.family.g = as_double_list(f["g"], "family.g");
      if (!cfg.family.A.empty()) cfg.family.builtin.clear();
    } else {
      throw ConfigError("family: expected a string or an object");
    }
  }
  if (j.contains("scaling")) {
    const json& s = j["scaling"];
    if (s.is_string()) {
      cfg.scaling = ScalingSpec::parse_rule(s.get<std::string>());
    } else if (s.is_object()) {
      expect_keys(s, "scaling", {"rule", "exponent", "n_values", "b_values"});
      if (s.contains("rule")) cfg.scaling.rule = s["rule"].get<std::string>();
      if (s.contains("exponent")) cfg.scaling.exponent = s["exponent"].get<double>();
      if (s.contains("n_values")) cfg.scaling.n_values = as_double_list(s["n_values"], "scaling.n_values");
      if (s.contains("b_values")) cfg.scaling.b_values = as_double_list(s["b_values"], "scaling.b_values");
    } else {
      throw ConfigError("scaling: expected a string or an object");
    }
  }
  if (j.contains("n")) cfg.n_list = as_double_list(j["n"], "n");
  if (j.contains("function")) {
    const json& f = j["function"];
    if (f.is_string()) {
      cfg.function.builtin = f.get<std::string>();
    } else if (f.is_object()) {
      expect_keys(f, "function", {"builtin", "samples", "envelope"});
      if (f.contains("builtin")) cfg.function.builtin = f["builtin"].get<std::string>();
      if (f.contains("samples")) {
        expect_keys(f["samples"], "function.samples", {"x", "y"});
        cfg.function.sample_x = as_double_list(f["samples"]["x"], "function.samples.x");
        cfg.function.sample_y = as_double_list(f["samples"]["y"], "function.samples.y");
        cfg.function.builtin.clear();
      }
      if (f.contains("envelope")) {
        const auto env = as_double_list(f["envelope"], "function.envelope");
        if (env.size() != 2) throw ConfigError("function.envelope: expected [alpha, beta]");
        cfg.function.envelope = GrowthEnvelope{env[0], env[1]};
      }
    } else {
      throw ConfigError("function: expected a string or an object");
    }
  }
  if (j.contains("interval")) {
    const auto iv = as_double_list(j["interval"], "interval");
    if (iv.size() != 2) throw ConfigError("interval: expected [a0, a1]");
    cfg.interval = {iv[0], iv[1]};
  }
  if (j.contains("grid_points")) cfg.grid_points = j["grid_points"].get<int>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("tail_epsilon")) cfg.tail_epsilon = j["tail_epsilon"].get<double>();
  if (j.contains("max_terms")) cfg.max_terms = j["max_terms"].get<std::int64_t>();
  if (j.contains("series_order")) cfg.series_order = j["series_order"].get<int>();
  if (j.contains("modulus")) {
    const json& m = j["modulus"];
    expect_keys(m, "modulus", {"variant", "grid_points", "table_grid_points"});
    if (m.contains("variant")) cfg.modulus.variant = m["variant"].get<std::string>();
    if (m.contains("grid_points")) cfg.modulus.grid_points = m["grid_points"].get<int>();
    if (m.contains("table_grid_points"))
      cfg.modulus.table_grid_points = m["table_grid_points"].get<int>();
  }
  if (j.contains("operator")) cfg.op = j["operator"].get<std::string>();
  if (j.contains("theorems")) {
    cfg.theorems.clear();
    for (const auto& t : j["theorems"]) cfg.theorems.push_back(t.get<std::string>());
  }
  if (j.contains("x_values")) cfg.x_values = as_double_list(j["x_values"], "x_values");
  if (j.contains("a")) cfg.a = j["a"].get<double>();
  if (j.contains("M")) cfg.M = j["M"].get<double>();
  if (j.contains("norm_x_max")) cfg.norm_x_max = j["norm_x_max"].get<double>();

  // Early structural validation with parse-level diagnostics.
  if (cfg.n_list.empty()) throw ConfigError("n: list must be non-empty");
  for (double n : cfg.n_list) {
    if (!(n >= 1.0)) throw ConfigError("n: entries must be >= 1");
  }
  if (!(cfg.interval[1] > cfg.interval[0])) throw ConfigError("interval: a1 must exceed a0");
  if (cfg.grid_points < 1) throw ConfigError("grid_points: must be >= 1");
  if (cfg.op != "T" && cfg.op != "T_star" && cfg.op != "both") {
    throw ConfigError("operator: expected T | T_star | both");
  }
  modulus_variant_from_string(cfg.modulus.variant);  // validates the name
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize_config(const RunConfig& cfg) {
  json j;
  json fam;
  if (!cfg.family.A.empty()) {
    fam["A"] = cfg.family.A;
    fam["H"] = cfg.family.H;
  } else {
    fam["builtin"] = cfg.family.builtin;
    if (!cfg.family.g.empty()) fam["g"] = cfg.family.g;
  }
  j["family"] = fam;

  json sc;
  sc["rule"] = cfg.scaling.rule;
  if (cfg.scaling.rule == "power") sc["exponent"] = cfg.scaling.exponent;
  if (cfg.scaling.rule == "table") {
    sc["n_values"] = cfg.scaling.n_values;
    sc["b_values"] = cfg.scaling.b_values;
  }
  j["scaling"] = sc;

  j["n"] = cfg.n_list;

  json fn;
  if (!cfg.function.sample_x.empty()) {
    fn["samples"]["x"] = cfg.function.sample_x;
    fn["samples"]["y"] = cfg.function.sample_y;
  } else {
    fn["builtin"] = cfg.function.builtin;
  }
  if (cfg.function.envelope) {
    fn["envelope"] = {cfg.function.envelope->alpha, cfg.function.envelope->beta};
  }
  j["function"] = fn;

  j["interval"] = cfg.interval;
  j["grid_points"] = cfg.grid_points;
  j["out"] = cfg.out;
  j["tail_epsilon"] = cfg.tail_epsilon;
  j["max_terms"] = cfg.max_terms;
  j["series_order"] = cfg.series_order;
  j["modulus"] = {{"variant", cfg.modulus.variant},
                  {"grid_points", cfg.modulus.grid_points},
                  {"table_grid_points", cfg.modulus.table_grid_points}};
  j["operator"] = cfg.op;
  j["theorems"] = cfg.theorems;
  j["x_values"] = cfg.x_values;
  j["a"] = cfg.a;
  j["M"] = cfg.M;
  j["norm_x_max"] = cfg.norm_x_max;
  return j.dump(2) + "\n";
}

}  // namespace ssz
