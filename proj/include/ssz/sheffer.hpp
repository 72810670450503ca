#pragma once

#include <span>
#include <string>
#include <vector>

#include "ssz/series.hpp"

namespace ssz {

inline constexpr int kDefaultSeriesOrder = 64;

/// A Sheffer pair (A, H) generating polynomials p_k(x) through
///   A(t) e^{x H(t)} = sum_k p_k(x) t^k,
/// together with the derivative values at t = 1 that every closed-form
/// moment in this library is built from.
struct ShefferFamily {
  std::string name;
  TruncatedSeries A;
  TruncatedSeries H;

  double A1 = 1.0;    // A(1)
  double A1p = 0.0;   // A'(1)
  double A1pp = 0.0;  // A''(1)
  double H1 = 1.0;    // H(1)
  double H1p = 1.0;   // H'(1)
  double H1pp = 0.0;  // H''(1)

  static ShefferFamily from_series(std::string name, TruncatedSeries a, TruncatedSeries h);

  /// Cheap guard used by the operator evaluators: the hypotheses that make
  /// the weights a partition of unity. Throws ValidationError.
  void require_usable() const;
};

struct ShefferValues {
  double x = 0.0;
  std::vector<double> values;  // p_0(x) .. p_K(x)
};

struct FamilyValidation {
  double h_prime_at_1 = 1.0;
  double a_at_1 = 1.0;
  bool positivity_ok = true;
  double min_value = 0.0;  // most negative p_k(x) seen in the scan
  double min_value_x = 0.0;
  int min_value_k = 0;
  std::vector<std::string> warnings;

  bool passed() const { return positivity_ok; }
};

/// Checks the operator hypotheses: H'(1) = 1 and A(1) != 0 (hard errors),
/// the series form h_0 = 0, h_1 != 0 (hard errors), and an empirical
/// positivity scan of p_k(x) over scan_grid for k <= scan_order.
/// a_0 = 0 is downgraded to a warning: the catalog itself contains such a
/// family and the resulting operators stay positive.
FamilyValidation validate_family(const ShefferFamily& fam,
                                 std::span<const double> scan_grid = {},
                                 int scan_order = 128);

/// p_k(x) for k = 0..K: coefficients of A(t) * exp(x H(t)) at order K.
ShefferValues sheffer_values(const ShefferFamily& fam, double x, int K);

/// Catalog: "szasz" (A=1, H=t), "example41" (A=e^t, H=t),
/// "example42" (A=t, H=t).
ShefferFamily builtin_family(const std::string& name);

/// Appell family: A = g, H(t) = t.
ShefferFamily appell_family(const TruncatedSeries& g, const std::string& name = "appell");

std::vector<std::string> builtin_family_names();

}  // namespace ssz
