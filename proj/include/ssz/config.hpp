#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ssz/functions.hpp"
#include "ssz/operators.hpp"
#include "ssz/sheffer.hpp"
#include "ssz/smoothness.hpp"

namespace ssz {

struct FamilySpec {
  std::string builtin = "szasz";  // szasz | example41 | example42 | appell | "" for custom A/H
  std::vector<double> A;          // custom coefficients
  std::vector<double> H;
  std::vector<double> g;  // appell generating coefficients

  ShefferFamily build(int series_order) const;
};

struct FunctionSpec {
  std::string builtin = "paper_f";  // empty when sampled
  std::vector<double> sample_x;
  std::vector<double> sample_y;
  std::optional<GrowthEnvelope> envelope;

  TargetFunction build() const;
};

struct ScalingSpec {
  std::string rule = "sqrt";  // sqrt | power | table
  double exponent = 0.5;
  std::vector<double> n_values;
  std::vector<double> b_values;

  ScalingSequence build() const;
  static ScalingSpec parse_rule(const std::string& text);  // "sqrt", "power:0.66", "table:1,2,3"
};

struct ModulusSpec {
  std::string variant = "exact_increment";
  int grid_points = 2001;
  int table_grid_points = 20001;
};

/// The full run configuration. Every numeric default lives here, not in
/// the command implementations, so a config file pins a run completely.
struct RunConfig {
  FamilySpec family;
  ScalingSpec scaling;
  std::vector<double> n_list = {10, 50, 100, 200, 300};
  FunctionSpec function;
  std::array<double, 2> interval = {0.0, 1.0};
  int grid_points = 101;
  std::string out = "out.csv";
  double tail_epsilon = 1e-12;
  std::int64_t max_terms = 100000;
  int series_order = kDefaultSeriesOrder;
  ModulusSpec modulus;
  std::string op = "T_star";  // T | T_star | both (converge columns)
  std::vector<std::string> theorems = {"T2_6", "T2_7", "T2_8", "T2_9", "T3_7"};
  std::vector<double> x_values = {0.25, 0.5, 0.75, 1.0};
  double a = 1.0;
  double M = 1.0;
  double norm_x_max = 50.0;

  TruncationPolicy truncation() const { return TruncationPolicy{tail_epsilon, max_terms}; }
  OperatorConfig operator_config(double n) const;
};

/// Parses a JSON document; unknown keys are errors with the offending key
/// named. Throws ConfigError.
RunConfig parse_config_text(const std::string& text);

RunConfig load_config_file(const std::string& path);

/// Canonical JSON serialization; parse(serialize(cfg)) is semantically
/// identical to cfg.
std::string serialize_config(const RunConfig& cfg);

}  // namespace ssz
