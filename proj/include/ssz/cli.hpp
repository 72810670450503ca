#pragma once

#include <iosfwd>
#include <string>

#include "ssz/config.hpp"

namespace ssz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitValidationFailure = 2;
inline constexpr int kExitNumericFailure = 3;

/// Family + scaling checks; human-readable report on `log`.
/// Returns kExitOk or kExitValidationFailure.
int cmd_validate(const RunConfig& cfg, std::ostream& log);

/// Operator-vs-function data grid. Writes cfg.out (columns: x, f, one
/// column per requested operator and n) and a companion
/// <out stem>_summary.csv of sup errors per column.
int cmd_converge(const RunConfig& cfg, std::ostream& log);

/// Error-bound table rows (n, bound) through the closed-form recipe:
/// interval [0, a], modulus from cfg (table grid), b_n from the scaling
/// rule. Supports n far beyond the summable range.
int cmd_table(const RunConfig& cfg, std::ostream& log);

/// JSON report of the theorem bounds at each (n, x) plus measured errors
/// where summation is feasible.
int cmd_bounds(const RunConfig& cfg, std::ostream& log);

/// CSV of closed-form moments and their numeric cross-check.
int cmd_moments(const RunConfig& cfg, std::ostream& log);

/// Maps an exception to the documented exit codes and prints the message.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& log,
                std::ostream& err);

std::string summary_path(const std::string& out_path);

}  // namespace ssz::cli
