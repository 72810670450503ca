#include "ssz/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssz/errors.hpp"
#include "ssz/moments.hpp"

namespace ssz {

WeightValidation validate_weight(const WeightFunction& w, double x_max, int grid_points) {
  WeightValidation rep;
  rep.rho_at_zero_ok = std::abs(w.rho(0.0) - 1.0) <= 1e-9;
  if (!rep.rho_at_zero_ok) {
    throw ValidationError("weight '" + w.name + "': rho(0)=" + std::to_string(w.rho(0.0)) +
                          ", expected rho(0)=1");
  }
  double min_prime = w.rho_prime(0.0);
  for (int i = 0; i <= grid_points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(grid_points);
    if (!(w.rho(x) > 0.0)) {
      throw ValidationError("weight '" + w.name + "': rho must be positive (rho(" +
                            std::to_string(x) + ") <= 0)");
    }
    min_prime = std::min(min_prime, w.rho_prime(x));
  }
  rep.min_rho_prime = min_prime;
  rep.derivative_ok = min_prime >= 1.0 - 1e-12;
  if (!rep.derivative_ok) {
    rep.warnings.push_back("inf rho' = " + std::to_string(min_prime) +
                           " < 1 on the sample grid; the stock weight 1+x^2 shares this "
                           "(rho'(0)=0), so it is reported, not enforced");
  }
  return rep;
}

NormResult weighted_norm(const TargetFunction& f, const WeightFunction& w, double x_max,
                         int grid_points) {
  if (!(x_max > 0.0)) throw std::invalid_argument("weighted_norm: x_max must be > 0");
  NormResult out;
  for (int i = 0; i < grid_points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const double r = w.rho(x);
    if (!(r > 0.0)) throw NumericError("weighted_norm: rho vanishes at x=" + std::to_string(x));
    const double v = std::abs(f(x)) / r;
    if (v > out.value) {
      out.value = v;
      out.argmax = x;
    }
  }
  out.tail_flag = out.argmax >= 0.99 * x_max;
  return out;
}

Lemma33Report lemma33_bound(const ShefferFamily& fam, double n, double b_n) {
  fam.require_usable();
  const double r = b_n / n;
  const double c1 = (fam.A1 + 2.0 * fam.A1p + fam.A1 * fam.H1pp) / fam.A1;
  const double c2 = (fam.A1p + fam.A1pp) / fam.A1;
  Lemma33Report rep;
  rep.bound = 1.0 + r * c1 + r * r * c2;

  // ||T_n*(rho; .)||_rho from the closed form T_n*(rho; x) = rho(x) + r C1 x + r^2 C2.
  const WeightFunction w = default_weight();
  TargetFunction tn_rho;
  tn_rho.name = "Tn_star(rho)";
  tn_rho.eval = [r, c1, c2](double x) { return 1.0 + x * x + r * c1 * x + r * r * c2; };
  rep.measured_norm = weighted_norm(tn_rho, w, 1000.0, 100000).value;
  rep.ok = rep.measured_norm <= rep.bound + 1e-8;
  return rep;
}

double weighted_modulus(const TargetFunction& f, const WeightFunction& w, double delta,
                        double x_max, int x_points, int t_points) {
  if (!(delta > 0.0)) throw std::invalid_argument("weighted_modulus: delta must be > 0");
  double best = 0.0;
  for (int i = 0; i < x_points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(x_points - 1);
    const double rx = w.rho(x);
    auto consider = [&](double t) {
      const double d = std::abs(w.rho(t) - rx);
      if (d > delta * (1.0 + 1e-12)) return;
      const double v = std::abs(f(t) - f(x)) / ((d + 1.0) * rx);
      best = std::max(best, v);
    };
    if (w.quadratic) {
      // |rho(t) - rho(x)| <= delta  <=>  t in [sqrt(max(0, x^2-delta)), sqrt(x^2+delta)]
      const double lo = std::sqrt(std::max(0.0, x * x - delta));
      const double hi = std::sqrt(x * x + delta);
      for (int j = 0; j < t_points; ++j) {
        consider(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(t_points - 1));
      }
    } else {
      const int nt = 8 * t_points;
      for (int j = 0; j < nt; ++j) {
        consider(x_max * static_cast<double>(j) / static_cast<double>(nt - 1));
      }
    }
  }
  return best;
}

WeightedSequenceTriple theorem37_quantities(const ShefferFamily& fam, double n, double b_n) {
  fam.require_usable();
  const double r = b_n / n;
  WeightedSequenceTriple q;
  q.alpha = r * (fam.A1 + 2.0 * fam.A1p + fam.A1 * fam.H1pp) / fam.A1 +
            r * r * (fam.A1p + fam.A1pp) / fam.A1;
  q.beta = r * fam.A1p / fam.A1;
  q.gamma = 0.0;
  return q;
}

Thm37Report bound_thm37(const ShefferFamily& fam, const OperatorConfig& cfg,
                        const TargetFunction& f, const WeightFunction& w, double lhs_x_max,
                        int lhs_points) {
  const WeightedSequenceTriple q = theorem37_quantities(fam, cfg.n, cfg.b_n);
  Thm37Report rep;
  rep.alpha = q.alpha;
  rep.beta = q.beta;
  rep.delta = std::sqrt(q.alpha + 2.0 * q.beta);
  rep.omega = weighted_modulus(f, w, rep.delta);
  rep.f_norm = weighted_norm(f, w).value;
  rep.bound = 16.0 * rep.omega + q.alpha * rep.f_norm;

  for (int i = 0; i < lhs_points; ++i) {
    const double x = lhs_x_max * static_cast<double>(i) / static_cast<double>(lhs_points - 1);
    const double px = apply_P_star(fam, cfg, w, f, x).value;
    const double rho = w.rho(x);
    const double psi = 1.0 + x * x;
    rep.lhs = std::max(rep.lhs, std::abs(px - f(x)) / (rho * rho * rho * rho * psi));
  }
  rep.dominated = rep.lhs <= rep.bound;
  return rep;
}

std::array<double, 3> weighted_moment_norms(const ShefferFamily& fam, double n, double b_n,
                                            double x_max, int grid_points) {
  fam.require_usable();
  std::array<double, 3> norms{0.0, 0.0, 0.0};
  norms[0] = 0.0;  // T_n*(e_0) = 1 exactly
  norms[1] = std::abs(central_moment1_algebraic(fam, n, b_n));  // constant deviation, sup at x=0
  const double r = b_n / n;
  const double c1 = (fam.A1 + 2.0 * fam.A1p + fam.A1 * fam.H1pp) / fam.A1;
  const double c2 = (fam.A1p + fam.A1pp) / fam.A1;
  for (int i = 0; i < grid_points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    norms[2] = std::max(norms[2], std::abs(r * c1 * x + r * r * c2) / (1.0 + x * x));
  }
  return norms;
}

}  // namespace ssz
