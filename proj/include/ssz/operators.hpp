#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssz/functions.hpp"
#include "ssz/sheffer.hpp"

namespace ssz {

/// Stopping policy for the infinite operator sums.
struct TruncationPolicy {
  double tail_epsilon = 1e-12;
  std::int64_t max_terms = 100000;
};

/// One operator instance: index n and Chlodowsky scale b_n. The plain
/// (non-Chlodowsky) operator is the b_n = 1 case.
struct OperatorConfig {
  double n = 1.0;
  double b_n = 1.0;
  TruncationPolicy trunc;

  double ratio() const { return b_n / n; }
  void validate() const;
};

/// How the scale sequence b_n is produced.
struct ScalingSequence {
  enum class Rule { Sqrt, Power, Table };
  Rule rule = Rule::Sqrt;
  double exponent = 0.5;          // Power: b_n = n^exponent
  std::vector<double> n_values;   // Table rows
  std::vector<double> b_values;

  double b(double n) const;
  std::string describe() const;

  static ScalingSequence sqrt_rule();
  static ScalingSequence power_rule(double exponent);
  static ScalingSequence table_rule(std::vector<double> n_values, std::vector<double> b_values);
};

/// Empirical check of the b_n hypotheses along a sampled n list: values
/// positive and increasing, b_n/n decreasing toward zero.
struct ScalingCheck {
  bool positive = true;
  bool increasing = true;
  bool ratio_decreasing = true;
  bool ratio_small_at_end = true;  // final sampled b_n/n below the first
  double first_ratio = 0.0;
  double last_ratio = 0.0;
  bool ok() const { return positive && increasing && ratio_decreasing && ratio_small_at_end; }
};

ScalingCheck check_scaling(const ScalingSequence& seq, std::span<const double> n_list);

struct OperatorResult {
  double value = 0.0;
  double tail = 0.0;  // residual weight 1 - sum(w_k)
  std::int64_t terms = 0;
};

/// T_n(f; x): weights e^{-n x H(1)} p_k(n x) / A(1) against samples f(k/n).
OperatorResult apply_T(const ShefferFamily& fam, double n, const TargetFunction& f, double x,
                       TruncationPolicy trunc = {});

/// Chlodowsky variant T_n*(f; x): weights at argument (n/b_n) x against
/// samples f(k b_n / n). Throws NumericError when the central index
/// n x / b_n exceeds max_terms (such configurations belong to the
/// closed-form paths, not to direct summation).
OperatorResult apply_T_star(const ShefferFamily& fam, const OperatorConfig& cfg,
                            const TargetFunction& f, double x);

/// Weighted variant P_n*(f; x) = rho^2(x) sum_k w_k f(node_k) / rho^2(node_k).
OperatorResult apply_P_star(const ShefferFamily& fam, const OperatorConfig& cfg,
                            const WeightFunction& rho, const TargetFunction& f, double x);

struct GridPoint {
  double x = 0.0;
  double value = 0.0;
  double tail = 0.0;
};

enum class OperatorKind { T, TStar };

/// Per-point operator evaluation over a grid; points are processed
/// concurrently within the thread budget and assembled in order.
std::vector<GridPoint> eval_grid(const ShefferFamily& fam, const OperatorConfig& cfg,
                                 const TargetFunction& f, std::span<const double> grid,
                                 OperatorKind kind = OperatorKind::TStar);

namespace detail {

/// Streams the normalized weights w_k = e^{-lambda H(1)} p_k(lambda) / A(1)
/// in ascending k. The coefficients of exp(lambda H) are grown on demand by
/// the exp recurrence; the buffer is rescaled by 2^-kRescaleBits whenever a
/// coefficient crosses kRescaleThreshold, with the accumulated log-scale
/// folded back into each emitted weight. Weights whose true magnitude
/// underflows double come out as zero, which is also their contribution to
/// the sum.
class WeightStream {
 public:
  WeightStream(const ShefferFamily& fam, double lambda);

  double operator[](std::int64_t k);

 private:
  void extend(std::int64_t k);

  static constexpr double kRescaleThreshold = 1e250;
  static constexpr int kRescaleBits = 831;  // 2^831 ~ 1.4e250

  std::span<const double> a_coeffs_;
  std::span<const double> h_coeffs_;
  double lambda_;
  double log_pref_;    // -lambda H(1) - log|A(1)|
  double sign_pref_;   // sign of 1/A(1)
  double log_scale_ = 0.0;
  std::vector<double> exp_coeffs_;
};

}  // namespace detail

}  // namespace ssz
