#include "ssz/operators.hpp"

#include <cmath>
#include <sstream>

#include "ssz/errors.hpp"
#include "ssz/parallel.hpp"

namespace ssz {

void OperatorConfig::validate() const {
  if (!(n >= 1.0)) throw ValidationError("OperatorConfig: n must be >= 1");
  if (!(b_n > 0.0)) throw ValidationError("OperatorConfig: b_n must be > 0");
  if (!(trunc.tail_epsilon > 0.0 && trunc.tail_epsilon < 1.0)) {
    throw ValidationError("OperatorConfig: tail_epsilon must lie in (0, 1)");
  }
  if (trunc.max_terms < 1) throw ValidationError("OperatorConfig: max_terms must be >= 1");
}

double ScalingSequence::b(double n) const {
  switch (rule) {
    case Rule::Sqrt:
      return std::sqrt(n);
    case Rule::Power:
      return std::pow(n, exponent);
    case Rule::Table: {
      for (size_t i = 0; i < n_values.size(); ++i) {
        if (n_values[i] == n) return b_values[i];
      }
      throw ConfigError("scaling table has no entry for n=" + std::to_string(n));
    }
  }
  throw ConfigError("scaling: unknown rule");
}

std::string ScalingSequence::describe() const {
  switch (rule) {
    case Rule::Sqrt:
      return "sqrt";
    case Rule::Power:
      return "power:" + std::to_string(exponent);
    case Rule::Table:
      return "table";
  }
  return "?";
}

ScalingSequence ScalingSequence::sqrt_rule() { return ScalingSequence{}; }

ScalingSequence ScalingSequence::power_rule(double exponent) {
  if (!(exponent > 0.0)) throw ConfigError("scaling power rule: exponent must be > 0");
  ScalingSequence s;
  s.rule = Rule::Power;
  s.exponent = exponent;
  return s;
}

ScalingSequence ScalingSequence::table_rule(std::vector<double> n_values,
                                            std::vector<double> b_values) {
  if (n_values.size() != b_values.size() || n_values.empty()) {
    throw ConfigError("scaling table rule: need equal-length non-empty n/b lists");
  }
  ScalingSequence s;
  s.rule = Rule::Table;
  s.n_values = std::move(n_values);
  s.b_values = std::move(b_values);
  return s;
}

ScalingCheck check_scaling(const ScalingSequence& seq, std::span<const double> n_list) {
  ScalingCheck chk;
  double prev_b = 0.0;
  double prev_ratio = 0.0;
  bool first = true;
  for (double n : n_list) {
    const double bn = seq.b(n);
    const double ratio = bn / n;
    if (!(bn > 0.0)) chk.positive = false;
    if (!first) {
      if (bn <= prev_b) chk.increasing = false;
      if (ratio >= prev_ratio) chk.ratio_decreasing = false;
    } else {
      chk.first_ratio = ratio;
    }
    prev_b = bn;
    prev_ratio = ratio;
    chk.last_ratio = ratio;
    first = false;
  }
  chk.ratio_small_at_end = chk.last_ratio < chk.first_ratio || n_list.size() < 2;
  return chk;
}

namespace detail {

WeightStream::WeightStream(const ShefferFamily& fam, double lambda)
    : a_coeffs_(fam.A.coeffs()),
      h_coeffs_(fam.H.coeffs()),
      lambda_(lambda),
      log_pref_(-lambda * fam.H1 - std::log(std::abs(fam.A1))),
      sign_pref_(fam.A1 < 0.0 ? -1.0 : 1.0) {
  exp_coeffs_.reserve(256);
  exp_coeffs_.push_back(1.0);  // h_0 = 0, so exp(lambda H) starts at 1
}

void WeightStream::extend(std::int64_t k) {
  while (static_cast<std::int64_t>(exp_coeffs_.size()) <= k) {
    const std::int64_t m = static_cast<std::int64_t>(exp_coeffs_.size());
    const std::int64_t jmax = std::min<std::int64_t>(m, static_cast<std::int64_t>(h_coeffs_.size()) - 1);
    double c = 0.0;
    for (std::int64_t j = 1; j <= jmax; ++j) {
      c += static_cast<double>(j) * lambda_ * h_coeffs_[static_cast<size_t>(j)] *
           exp_coeffs_[static_cast<size_t>(m - j)];
    }
    c /= static_cast<double>(m);
    if (std::abs(c) > kRescaleThreshold) {
      for (double& v : exp_coeffs_) v = std::ldexp(v, -kRescaleBits);
      c = std::ldexp(c, -kRescaleBits);
      log_scale_ += static_cast<double>(kRescaleBits) * M_LN2;
    }
    exp_coeffs_.push_back(c);
  }
}

double WeightStream::operator[](std::int64_t k) {
  extend(k);
  const std::int64_t jmax = std::min<std::int64_t>(k, static_cast<std::int64_t>(a_coeffs_.size()) - 1);
  double d = 0.0;
  for (std::int64_t j = 0; j <= jmax; ++j) {
    d += a_coeffs_[static_cast<size_t>(j)] * exp_coeffs_[static_cast<size_t>(k - j)];
  }
  if (d == 0.0) return 0.0;
  const double e = log_scale_ + log_pref_;
  if (e > -700.0 && e < 700.0) return sign_pref_ * d * std::exp(e);
  const double lg = std::log(std::abs(d)) + e;
  if (lg < -745.0) return 0.0;
  const double w = std::exp(lg);
  return (d < 0.0 ? -w : w) * sign_pref_;
}

}  // namespace detail

namespace {

// Shared summation core: T_n* when transform is null, P_n* otherwise.
OperatorResult sum_operator(const ShefferFamily& fam, double n, double b_n,
                            const TruncationPolicy& trunc, const TargetFunction& f, double x,
                            const WeightFunction* rho) {
  fam.require_usable();
  if (x < 0.0) throw std::invalid_argument("operator argument x must be >= 0");
  const double lambda = (n / b_n) * x;
  if (lambda > static_cast<double>(trunc.max_terms)) {
    std::ostringstream msg;
    msg << "central index n*x/b_n = " << lambda << " exceeds max_terms = " << trunc.max_terms
        << "; use the closed-form moment paths for this regime";
    throw NumericError(msg.str());
  }

  detail::WeightStream weights(fam, lambda);
  const double node_step = b_n / n;
  // Kahan-compensated accumulators: the stopping rule compares the weight
  // mass against 1 - tail_epsilon, which plain summation cannot resolve
  // once a few hundred terms have been added.
  double sum = 0.0, sum_c = 0.0;
  double cumw = 0.0, cumw_c = 0.0;
  const auto add = [](double& s, double& c, double v) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  };
  std::int64_t k = 0;
  bool stopped = false;
  for (; k < trunc.max_terms; ++k) {
    const double wk = weights[k];
    const double node = static_cast<double>(k) * node_step;
    double sample = f(node);
    if (rho) {
      const double r = rho->rho(node);
      if (!(r * r > 0.0)) {
        std::ostringstream msg;
        msg << "weight rho vanishes at sample node t=" << node;
        throw NumericError(msg.str());
      }
      sample /= r * r;
    }
    const double term = wk * sample;
    if (!std::isfinite(term)) {
      std::ostringstream msg;
      msg << "non-finite term at k=" << k << " (node t=" << node << ")";
      throw NumericError(msg.str());
    }
    add(sum, sum_c, term);
    add(cumw, cumw_c, wk);
    if (cumw >= 1.0 - trunc.tail_epsilon &&
        std::abs(term) < trunc.tail_epsilon * (1.0 + std::abs(sum))) {
      ++k;
      stopped = true;
      break;
    }
  }
  const double residual = 1.0 - cumw;
  if (!stopped && residual > trunc.tail_epsilon) {
    std::ostringstream msg;
    msg << "truncation failure: max_terms=" << trunc.max_terms << " reached with residual weight "
        << residual << " > tail_epsilon=" << trunc.tail_epsilon << " (n=" << n << ", b_n=" << b_n
        << ", x=" << x << ")";
    throw NumericError(msg.str());
  }

  OperatorResult out;
  out.value = rho ? rho->rho(x) * rho->rho(x) * sum : sum;
  out.tail = residual;
  out.terms = k;
  return out;
}

}  // namespace

OperatorResult apply_T(const ShefferFamily& fam, double n, const TargetFunction& f, double x,
                       TruncationPolicy trunc) {
  OperatorConfig cfg{n, 1.0, trunc};
  cfg.validate();
  return sum_operator(fam, n, 1.0, trunc, f, x, nullptr);
}

OperatorResult apply_T_star(const ShefferFamily& fam, const OperatorConfig& cfg,
                            const TargetFunction& f, double x) {
  cfg.validate();
  return sum_operator(fam, cfg.n, cfg.b_n, cfg.trunc, f, x, nullptr);
}

OperatorResult apply_P_star(const ShefferFamily& fam, const OperatorConfig& cfg,
                            const WeightFunction& rho, const TargetFunction& f, double x) {
  cfg.validate();
  return sum_operator(fam, cfg.n, cfg.b_n, cfg.trunc, f, x, &rho);
}

std::vector<GridPoint> eval_grid(const ShefferFamily& fam, const OperatorConfig& cfg,
                                 const TargetFunction& f, std::span<const double> grid,
                                 OperatorKind kind) {
  cfg.validate();
  std::vector<GridPoint> out(grid.size());
  parallel_for(grid.size(), [&](size_t i) {
    const double x = grid[i];
    try {
      const OperatorResult r = (kind == OperatorKind::TStar)
                                   ? apply_T_star(fam, cfg, f, x)
                                   : apply_T(fam, cfg.n, f, x, cfg.trunc);
      out[i] = GridPoint{x, r.value, r.tail};
    } catch (const NumericError& err) {
      std::ostringstream msg;
      msg << "at grid point x=" << x << ": " << err.what();
      throw NumericError(msg.str());
    }
  });
  return out;
}

}  // namespace ssz
