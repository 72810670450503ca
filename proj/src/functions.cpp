#include "ssz/functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ssz/errors.hpp"

namespace ssz {

bool TargetFunction::envelope_holds(std::span<const double> grid) const {
  if (!envelope) return true;
  for (double x : grid) {
    if (std::abs(eval(x)) > envelope->beta * std::exp(envelope->alpha * x) + 1e-12) return false;
  }
  return true;
}

TargetFunction builtin_function(const std::string& name) {
  TargetFunction f;
  f.name = name;
  if (name == "paper_f") {
    f.eval = [](double x) { return -4.0 * x * std::exp(-3.0 * x); };
    f.envelope = GrowthEnvelope{0.0, 0.5};  // |f| <= 4/(3e) ~ 0.4905
  } else if (name == "e0") {
    f.eval = [](double) { return 1.0; };
    f.envelope = GrowthEnvelope{0.0, 1.0};
  } else if (name == "e1") {
    f.eval = [](double x) { return x; };
    f.envelope = GrowthEnvelope{1.0, 1.0};
  } else if (name == "e2") {
    f.eval = [](double x) { return x * x; };
    f.envelope = GrowthEnvelope{2.0, 1.0};
  } else if (name == "rho") {
    f.eval = [](double x) { return 1.0 + x * x; };
    f.envelope = GrowthEnvelope{1.0, 2.0};
  } else if (name == "rho2") {
    f.eval = [](double x) {
      const double r = 1.0 + x * x;
      return r * r;
    };
    f.envelope = GrowthEnvelope{2.0, 4.0};
  } else {
    throw ConfigError("unknown builtin function '" + name +
                      "' (expected paper_f | e0 | e1 | e2 | rho | rho2)");
  }
  return f;
}

std::vector<std::string> builtin_function_names() {
  return {"paper_f", "e0", "e1", "e2", "rho", "rho2"};
}

TargetFunction sampled_function(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw ConfigError("sampled function: need equal-length x/y arrays with at least 2 points");
  }
  if (!std::is_sorted(xs.begin(), xs.end())) {
    throw ConfigError("sampled function: x samples must be sorted increasing");
  }
  TargetFunction f;
  f.name = "samples";
  f.eval = [xs = std::move(xs), ys = std::move(ys)](double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const size_t i = static_cast<size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
  };
  return f;
}

WeightFunction default_weight() {
  WeightFunction w;
  w.name = "rho_quadratic";
  w.rho = [](double x) { return 1.0 + x * x; };
  w.rho_prime = [](double x) { return 2.0 * x; };
  w.quadratic = true;
  return w;
}

WeightFunction custom_weight(std::string name, std::function<double(double)> rho,
                             std::function<double(double)> rho_prime) {
  WeightFunction w;
  w.name = std::move(name);
  if (!rho) throw std::invalid_argument("custom_weight: rho evaluator required");
  if (!rho_prime) {
    auto base = rho;
    rho_prime = [base](double x) {
      const double h = 1e-6 * (1.0 + std::abs(x));
      const double lo = std::max(0.0, x - h);
      return (base(x + h) - base(lo)) / (x + h - lo);
    };
  }
  w.rho = std::move(rho);
  w.rho_prime = std::move(rho_prime);
  return w;
}

}  // namespace ssz
