#pragma once

#include <array>
#include <map>
#include <string>

#include "ssz/functions.hpp"
#include "ssz/sheffer.hpp"

namespace ssz {

enum class ModulusVariant {
  TwoPoint,        // sup over |x - y| <= delta, both in the interval
  ExactIncrement,  // sup over x in [a0, a1 - delta] of |f(x+delta) - f(x)|
};

ModulusVariant modulus_variant_from_string(const std::string& s);
std::string to_string(ModulusVariant v);

struct ModulusReport {
  double delta = 0.0;
  double value = 0.0;
  ModulusVariant variant = ModulusVariant::TwoPoint;
  double a0 = 0.0;
  double a1 = 1.0;
  int grid_points = 0;
};

/// First-order modulus of continuity on [a0, a1], grid-based supremum.
/// TwoPoint clamps delta to the interval length; ExactIncrement throws
/// NumericError when delta exceeds it (empty domain). delta = 0 gives 0.
ModulusReport modulus(const TargetFunction& f, double delta, double a0, double a1,
                      ModulusVariant variant, int grid_points = 2001);

/// Second-order modulus: sup over t in (0, delta] and x in [a0, a1 - 2t]
/// of |f(x+2t) - 2 f(x+t) + f(x)|.
ModulusReport second_modulus(const TargetFunction& f, double delta, double a0, double a1,
                             int grid_points = 2001, int t_points = 128);

/// Second-order Steklov mean
///   f_h(x) = h^-2 \int\int_{[-h/2,h/2]^2} [2 f(x+s+t) - f(x+2(s+t))] ds dt
/// via tensor Gauss-Legendre quadrature. f is continued linearly beyond
/// [a0, a1] using the boundary value and a one-sided difference slope.
double steklov(const TargetFunction& f, double h, double x, double a0, double a1,
               int quadrature_points = 64);

/// A theorem-indexed error bound with the intermediate values it is
/// composed of, so callers (and tests) can re-derive the number.
struct BoundReport {
  std::string theorem;
  double bound = 0.0;
  std::map<std::string, double> components;
  double n = 1.0;
  double b_n = 1.0;
  double x = 0.0;  // meaningful for the pointwise theorems
  double a = 1.0;
};

/// Sup-norm bound on [0, a]:
///   {1 + sqrt((1+H''(1)) a + (b_n/n)(A'(1)+A''(1))/A(1))} * omega(f, sqrt(b_n/n)).
BoundReport bound_thm26(const ShefferFamily& fam, double n, double b_n, const TargetFunction& f,
                        double a, ModulusVariant variant, int grid_points = 2001);

/// Pointwise bound (2/a)||f|| h^2 + (3/4)(a + 2 + h^2) omega_2(f, h) with
/// h = (T_n*((e_1-x)^2; x))^(1/4); norms and moduli are taken on [0, a].
BoundReport bound_thm27(const ShefferFamily& fam, double n, double b_n, const TargetFunction& f,
                        double a, double x, int grid_points = 2001);

/// gamma_n(x) (||f|| + ||f'|| + ||f''||) with gamma_n(x) = c2 / 2.
BoundReport bound_thm28(const ShefferFamily& fam, double n, double b_n,
                        const std::array<double, 3>& f_norms, double x);

/// 2M { omega_2(f, sqrt(delta)) + min(1, delta) ||f|| } with
/// delta = gamma_n(x)/4. Sup norms over the half line are approximated on
/// [0, norm_x_max]; M is the caller's constant (default 1).
BoundReport bound_thm29(const ShefferFamily& fam, double n, double b_n, const TargetFunction& f,
                        double x, double M = 1.0, double norm_x_max = 50.0,
                        int grid_points = 2001);

/// Grid estimates of (||f||, ||f'||, ||f''||) on [0, x_max] by central
/// finite differences, for callers that only have an evaluator.
std::array<double, 3> estimate_cb2_norms(const TargetFunction& f, double x_max = 50.0,
                                         int grid_points = 4001);

}  // namespace ssz
