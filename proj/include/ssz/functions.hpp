#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssz {

/// Exponential growth envelope |f(x)| <= beta * e^(alpha x).
struct GrowthEnvelope {
  double alpha = 0.0;
  double beta = 1.0;
};

/// A target function on [0, inf) with an optional growth certificate.
struct TargetFunction {
  std::string name;
  std::function<double(double)> eval;
  std::optional<GrowthEnvelope> envelope;

  double operator()(double x) const { return eval(x); }

  /// Spot check of the declared envelope on a grid; true when no envelope
  /// is attached.
  bool envelope_holds(std::span<const double> grid) const;
};

/// Catalog: "paper_f" (-4x e^{-3x}), "e0", "e1", "e2",
/// "rho" (1+x^2), "rho2" ((1+x^2)^2).
TargetFunction builtin_function(const std::string& name);

std::vector<std::string> builtin_function_names();

/// Piecewise-linear interpolant through sorted sample points; constant
/// continuation outside the sampled range.
TargetFunction sampled_function(std::vector<double> xs, std::vector<double> ys);

/// A weight rho on [0, inf) with its derivative, as used by the weighted
/// approximation machinery. The quadratic flag marks the stock 1 + x^2
/// weight, which unlocks the analytic pair-grid in the weighted modulus.
struct WeightFunction {
  std::string name;
  std::function<double(double)> rho;
  std::function<double(double)> rho_prime;
  bool quadratic = false;

  double operator()(double x) const { return rho(x); }
};

/// The stock weight rho(x) = 1 + x^2.
WeightFunction default_weight();

/// Weight from an evaluator; the derivative defaults to a central difference.
WeightFunction custom_weight(std::string name, std::function<double(double)> rho,
                             std::function<double(double)> rho_prime = nullptr);

}  // namespace ssz
