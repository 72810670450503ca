#pragma once

#include <span>
#include <vector>

#include "ssz/operators.hpp"
#include "ssz/sheffer.hpp"

namespace ssz {

/// Closed-form moments of T_n* at one point.
struct MomentSet {
  double m0 = 1.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double c2 = 0.0;  // algebraic second central moment m2 - 2x m1 + x^2
  double x = 0.0;
  double n = 1.0;
  double b_n = 1.0;
};

/// T_n*(e_i; x) for i in {0, 1, 2}:
///   e_0 -> 1
///   e_1 -> x + (b_n/n) A'(1)/A(1)
///   e_2 -> x^2 + (b_n/n) (A(1)+2A'(1)+A(1)H''(1))/A(1) x
///              + (b_n/n)^2 (A'(1)+A''(1))/A(1)
double moment_closed_form(const ShefferFamily& fam, double n, double b_n, double x, int i);

/// First central moment per the displayed identity T_n*((e_1 - x); x) = 0.
/// Expanding m1 - x instead gives (b_n/n) A'(1)/A(1), which is nonzero
/// whenever A'(1) != 0; both routes are exposed and callers pick.
double central_moment1_displayed();

double central_moment1_algebraic(const ShefferFamily& fam, double n, double b_n);

/// Second central moment as displayed:
///   (b_n/n)(1 + H''(1)) x + (b_n/n)^2 (A'(1)+A''(1))/A(1).
/// Expanding m2 - 2x m1 + x^2 from the closed-form moments yields the same
/// expression for every family (the A'(1) cross terms cancel), so this
/// equals algebraic_c2; both entry points are kept so tests can compare
/// the two routes.
double central_moment2(const ShefferFamily& fam, double n, double b_n, double x);

double algebraic_c2(const ShefferFamily& fam, double n, double b_n, double x);

MomentSet moment_set(const ShefferFamily& fam, double n, double b_n, double x);

struct KorovkinRow {
  double n = 1.0;
  double b_n = 1.0;
  double dev_e0 = 0.0;  // sup over [0,a] of |T_n*(e_i;x) - x^i|, closed forms
  double dev_e1 = 0.0;
  double dev_e2 = 0.0;
};

struct KorovkinReport {
  double a = 1.0;
  std::vector<KorovkinRow> rows;
  bool deviations_nonincreasing = true;
};

/// Korovkin-style convergence table along a scaling sequence. The e_1
/// deviation is constant in x and the e_2 deviation is increasing on
/// x >= 0 whenever its coefficients are nonnegative, so the suprema are
/// taken at the endpoint in those cases and on a 1001-point grid otherwise.
KorovkinReport korovkin_report(const ShefferFamily& fam, const ScalingSequence& scaling, double a,
                               std::span<const double> n_list);

}  // namespace ssz
