#include "ssz/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ssz/errors.hpp"
#include "ssz/moments.hpp"

namespace ssz {

ModulusVariant modulus_variant_from_string(const std::string& s) {
  if (s == "two_point") return ModulusVariant::TwoPoint;
  if (s == "exact_increment") return ModulusVariant::ExactIncrement;
  throw ConfigError("unknown modulus variant '" + s + "' (expected two_point | exact_increment)");
}

std::string to_string(ModulusVariant v) {
  return v == ModulusVariant::TwoPoint ? "two_point" : "exact_increment";
}

ModulusReport modulus(const TargetFunction& f, double delta, double a0, double a1,
                      ModulusVariant variant, int grid_points) {
  if (delta < 0.0) throw std::invalid_argument("modulus: delta must be >= 0");
  if (!(a1 > a0)) throw std::invalid_argument("modulus: interval must be nondegenerate");
  if (grid_points < 2) throw std::invalid_argument("modulus: need at least 2 grid points");

  ModulusReport rep;
  rep.variant = variant;
  rep.a0 = a0;
  rep.a1 = a1;
  rep.grid_points = grid_points;
  rep.delta = delta;
  if (delta == 0.0) return rep;

  const double len = a1 - a0;
  if (variant == ModulusVariant::TwoPoint) {
    const double d = std::min(delta, len);  // clamp
    const size_t np = static_cast<size_t>(grid_points);
    const double h = len / static_cast<double>(np - 1);
    std::vector<double> fx(np);
    for (size_t i = 0; i < np; ++i) fx[i] = f(a0 + h * static_cast<double>(i));
    const size_t window =
        std::min<size_t>(np - 1, static_cast<size_t>(std::floor(d / h * (1.0 + 1e-12))));
    double best = 0.0;
    for (size_t off = 1; off <= window; ++off) {
      for (size_t i = 0; i + off < np; ++i) {
        best = std::max(best, std::abs(fx[i + off] - fx[i]));
      }
    }
    rep.value = best;
  } else {
    if (delta > len * (1.0 + 1e-12)) {
      throw NumericError("modulus (exact_increment): delta exceeds interval length, empty domain");
    }
    const double hi = a1 - delta;
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double x = a0 + (hi - a0) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
      best = std::max(best, std::abs(f(x + delta) - f(x)));
    }
    rep.value = best;
  }
  return rep;
}

ModulusReport second_modulus(const TargetFunction& f, double delta, double a0, double a1,
                             int grid_points, int t_points) {
  if (delta < 0.0) throw std::invalid_argument("second_modulus: delta must be >= 0");
  if (!(a1 > a0)) throw std::invalid_argument("second_modulus: interval must be nondegenerate");

  ModulusReport rep;
  rep.variant = ModulusVariant::TwoPoint;
  rep.a0 = a0;
  rep.a1 = a1;
  rep.grid_points = grid_points;
  rep.delta = delta;
  if (delta == 0.0) return rep;
  if (2.0 * delta > (a1 - a0) * (1.0 + 1e-12)) {
    throw NumericError("second_modulus: 2*delta exceeds interval length, empty domain");
  }

  double best = 0.0;
  for (int j = 1; j <= t_points; ++j) {
    const double t = delta * static_cast<double>(j) / static_cast<double>(t_points);
    const double hi = a1 - 2.0 * t;
    for (int i = 0; i < grid_points; ++i) {
      const double x = a0 + (hi - a0) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
      best = std::max(best, std::abs(f(x + 2.0 * t) - 2.0 * f(x + t) + f(x)));
    }
  }
  rep.value = best;
  return rep;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = x;
    weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace

double steklov(const TargetFunction& f, double h, double x, double a0, double a1,
               int quadrature_points) {
  if (!(h > 0.0)) throw std::invalid_argument("steklov: h must be > 0");
  if (!(a1 > a0)) throw std::invalid_argument("steklov: interval must be nondegenerate");
  if (quadrature_points < 2) throw std::invalid_argument("steklov: need >= 2 quadrature points");

  // Linear continuation outside [a0, a1] from boundary values and
  // one-sided difference slopes.
  const double eps = 1e-6 * (a1 - a0);
  const double f_lo = f(a0), slope_lo = (f(a0 + eps) - f_lo) / eps;
  const double f_hi = f(a1), slope_hi = (f_hi - f(a1 - eps)) / eps;
  auto fx = [&](double t) {
    if (t < a0) return f_lo + slope_lo * (t - a0);
    if (t > a1) return f_hi + slope_hi * (t - a1);
    return f(t);
  };

  std::vector<double> nodes, weights;
  gauss_legendre(quadrature_points, nodes, weights);
  const double half = h / 2.0;
  double acc = 0.0;
  for (int i = 0; i < quadrature_points; ++i) {
    const double s = half * nodes[static_cast<size_t>(i)];
    for (int j = 0; j < quadrature_points; ++j) {
      const double t = half * nodes[static_cast<size_t>(j)];
      const double u = s + t;
      acc += weights[static_cast<size_t>(i)] * weights[static_cast<size_t>(j)] *
             (2.0 * fx(x + u) - fx(x + 2.0 * u));
    }
  }
  // Jacobian (h/2)^2 of the map to [-h/2, h/2]^2, then the h^-2 prefactor.
  return acc * 0.25;
}

BoundReport bound_thm26(const ShefferFamily& fam, double n, double b_n, const TargetFunction& f,
                        double a, ModulusVariant variant, int grid_points) {
  if (!(a > 0.0)) throw std::invalid_argument("bound_thm26: a must be > 0");
  fam.require_usable();
  const double r = b_n / n;
  const double radicand = (1.0 + fam.H1pp) * a + r * (fam.A1p + fam.A1pp) / fam.A1;
  const double factor = 1.0 + std::sqrt(radicand);
  const double delta = std::sqrt(r);
  const ModulusReport om = modulus(f, delta, 0.0, a, variant, grid_points);

  BoundReport rep;
  rep.theorem = "T2_6";
  rep.n = n;
  rep.b_n = b_n;
  rep.a = a;
  rep.components["factor"] = factor;
  rep.components["radicand"] = radicand;
  rep.components["delta"] = delta;
  rep.components["omega"] = om.value;
  rep.bound = factor * om.value;
  return rep;
}

BoundReport bound_thm27(const ShefferFamily& fam, double n, double b_n, const TargetFunction& f,
                        double a, double x, int grid_points) {
  if (!(a > 0.0)) throw std::invalid_argument("bound_thm27: a must be > 0");
  fam.require_usable();
  const double c2 = algebraic_c2(fam, n, b_n, x);
  const double h = std::pow(std::max(c2, 0.0), 0.25);

  double f_norm = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = a * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    f_norm = std::max(f_norm, std::abs(f(t)));
  }
  // The second modulus needs x + 2t admissible up to t = h, which can step
  // past a; f lives on the half line, so widen the grid interval to [0, a+2h].
  const double om2 = (h > 0.0) ? second_modulus(f, h, 0.0, a + 2.0 * h, grid_points).value : 0.0;

  BoundReport rep;
  rep.theorem = "T2_7";
  rep.n = n;
  rep.b_n = b_n;
  rep.x = x;
  rep.a = a;
  rep.components["h"] = h;
  rep.components["c2"] = c2;
  rep.components["f_norm"] = f_norm;
  rep.components["omega2"] = om2;
  rep.components["term_norm"] = (2.0 / a) * f_norm * h * h;
  rep.components["term_omega"] = 0.75 * (a + 2.0 + h * h) * om2;
  rep.bound = rep.components["term_norm"] + rep.components["term_omega"];
  return rep;
}

BoundReport bound_thm28(const ShefferFamily& fam, double n, double b_n,
                        const std::array<double, 3>& f_norms, double x) {
  fam.require_usable();
  const double gamma = 0.5 * algebraic_c2(fam, n, b_n, x);
  BoundReport rep;
  rep.theorem = "T2_8";
  rep.n = n;
  rep.b_n = b_n;
  rep.x = x;
  rep.components["gamma"] = gamma;
  rep.components["norm_f"] = f_norms[0];
  rep.components["norm_f1"] = f_norms[1];
  rep.components["norm_f2"] = f_norms[2];
  rep.bound = gamma * (f_norms[0] + f_norms[1] + f_norms[2]);
  return rep;
}

BoundReport bound_thm29(const ShefferFamily& fam, double n, double b_n, const TargetFunction& f,
                        double x, double M, double norm_x_max, int grid_points) {
  fam.require_usable();
  const double gamma = 0.5 * algebraic_c2(fam, n, b_n, x);
  const double delta = 0.25 * gamma;

  double f_norm = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = norm_x_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    f_norm = std::max(f_norm, std::abs(f(t)));
  }
  const double sd = std::sqrt(std::max(delta, 0.0));
  const double om2 = (sd > 0.0) ? second_modulus(f, sd, 0.0, norm_x_max, grid_points).value : 0.0;

  BoundReport rep;
  rep.theorem = "T2_9";
  rep.n = n;
  rep.b_n = b_n;
  rep.x = x;
  rep.components["gamma"] = gamma;
  rep.components["delta"] = delta;
  rep.components["omega2"] = om2;
  rep.components["f_norm"] = f_norm;
  rep.components["M"] = M;
  rep.bound = 2.0 * M * (om2 + std::min(1.0, delta) * f_norm);
  return rep;
}

std::array<double, 3> estimate_cb2_norms(const TargetFunction& f, double x_max, int grid_points) {
  const double h = x_max / static_cast<double>(grid_points - 1);
  std::array<double, 3> norms{0.0, 0.0, 0.0};
  std::vector<double> fx(static_cast<size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i) fx[static_cast<size_t>(i)] = f(h * static_cast<double>(i));
  for (int i = 0; i < grid_points; ++i) {
    norms[0] = std::max(norms[0], std::abs(fx[static_cast<size_t>(i)]));
    if (i >= 1 && i + 1 < grid_points) {
      norms[1] = std::max(norms[1],
                          std::abs(fx[static_cast<size_t>(i + 1)] - fx[static_cast<size_t>(i - 1)]) /
                              (2.0 * h));
      norms[2] = std::max(norms[2], std::abs(fx[static_cast<size_t>(i + 1)] -
                                             2.0 * fx[static_cast<size_t>(i)] +
                                             fx[static_cast<size_t>(i - 1)]) /
                                        (h * h));
    }
  }
  // One-sided derivative estimates at the ends; for functions whose slope
  // peaks at 0 (the catalog's -4x e^{-3x} does) the interior stencil alone
  // would miss the maximum.
  if (grid_points >= 3) {
    norms[1] = std::max(norms[1], std::abs(fx[1] - fx[0]) / h);
    norms[1] = std::max(norms[1], std::abs(fx[static_cast<size_t>(grid_points - 1)] -
                                           fx[static_cast<size_t>(grid_points - 2)]) /
                                      h);
    norms[2] = std::max(norms[2], std::abs(fx[2] - 2.0 * fx[1] + fx[0]) / (h * h));
  }
  return norms;
}

}  // namespace ssz
