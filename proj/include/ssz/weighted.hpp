#pragma once

#include <string>
#include <vector>

#include "ssz/functions.hpp"
#include "ssz/operators.hpp"
#include "ssz/sheffer.hpp"

namespace ssz {

struct WeightValidation {
  bool rho_at_zero_ok = true;   // rho(0) = 1
  double min_rho_prime = 0.0;   // min sampled rho'
  bool derivative_ok = true;    // inf rho' >= 1 on the sample grid
  std::vector<std::string> warnings;
};

/// Checks the weighted-space assumptions on a grid. rho(0) = 1 is a hard
/// requirement; inf rho' >= 1 is reported as a warning when violated,
/// because the stock weight 1 + x^2 itself has rho'(0) = 0 and the theory
/// is used with it throughout.
WeightValidation validate_weight(const WeightFunction& w, double x_max = 20.0,
                                 int grid_points = 2001);

struct NormResult {
  double value = 0.0;
  double argmax = 0.0;
  bool tail_flag = false;  // maximizer within 1% of x_max: sup may sit beyond the grid
};

/// ||f||_rho = sup |f(x)| / rho(x), grid max over [0, x_max].
NormResult weighted_norm(const TargetFunction& f, const WeightFunction& w, double x_max = 1000.0,
                         int grid_points = 100000);

struct Lemma33Report {
  double bound = 0.0;          // 1 + (b_n/n) C1 + (b_n/n)^2 C2
  double measured_norm = 0.0;  // ||T_n*(rho; .)||_rho from the closed form
  bool ok = false;             // measured <= bound + 1e-8
};

Lemma33Report lemma33_bound(const ShefferFamily& fam, double n, double b_n);

/// Gadjiev-Aral weighted modulus
///   Omega_rho(f, delta) = sup_{|rho(t)-rho(x)| <= delta}
///                         |f(t)-f(x)| / ([|rho(t)-rho(x)|+1] rho(x)).
/// For the stock quadratic weight the admissible t-range per x is solved
/// analytically; other weights fall back to filtering a t grid.
double weighted_modulus(const TargetFunction& f, const WeightFunction& w, double delta,
                        double x_max = 20.0, int x_points = 2000, int t_points = 200);

struct WeightedSequenceTriple {
  double alpha = 0.0;  // (b_n/n) C1 + (b_n/n)^2 C2
  double beta = 0.0;   // (b_n/n) A'(1)/A(1)
  double gamma = 0.0;  // identically 0: P_n* reproduces rho^2
};

WeightedSequenceTriple theorem37_quantities(const ShefferFamily& fam, double n, double b_n);

struct Thm37Report {
  double bound = 0.0;  // 16 Omega_rho(f, sqrt(alpha + 2 beta)) + alpha ||f||_rho
  double omega = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double f_norm = 0.0;
  double lhs = 0.0;  // grid sup of |P_n*(f;x) - f(x)| / (rho^4 psi)(x)
  bool dominated = false;
};

/// Both sides of the weighted estimate: the displayed bound and the
/// measured ||P_n*(f) - f||_{rho^4 psi} with psi = 1 + x^2, over a grid on
/// [0, lhs_x_max].
Thm37Report bound_thm37(const ShefferFamily& fam, const OperatorConfig& cfg,
                        const TargetFunction& f, const WeightFunction& w, double lhs_x_max = 10.0,
                        int lhs_points = 201);

/// ||T_n*(e_i; .) - e_i||_rho for i in {0,1,2} from the closed forms, the
/// Theorem 3.4 convergence quantities.
std::array<double, 3> weighted_moment_norms(const ShefferFamily& fam, double n, double b_n,
                                            double x_max = 50.0, int grid_points = 20001);

}  // namespace ssz
