#pragma once

#include <span>
#include <vector>

namespace ssz {

/// A finite Maclaurin expansion c_0 + c_1 t + ... + c_K t^K.
///
/// All arithmetic stays closed at the larger of the two operand orders;
/// shorter operands are treated as zero-padded. Values are immutable after
/// construction, so instances can be shared freely across threads.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_{0.0} {}
  explicit TruncatedSeries(std::vector<double> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(double value, int order = 0);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^k; zero beyond the stored order.
  double operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(k)] : 0.0;
  }

  std::span<const double> coeffs() const { return coeffs_; }

  TruncatedSeries padded(int order) const;

  /// Coefficient-wise scaling, i.e. the series of s * a(t).
  TruncatedSeries scaled(double s) const;

 private:
  std::vector<double> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at max(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients of exp(a(t)) at the order of a, via the standard recurrence
///   c_0 = e^{a_0},  c_m = (1/m) * sum_{j=1..m} j a_j c_{m-j}.
/// A nonzero constant term is absorbed exactly into c_0.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// Values a(t0), a'(t0), ..., a^(max_order)(t0) evaluated from the truncated
/// coefficients. Accuracy in the analytic sense is the caller's business via
/// the stored order.
std::vector<double> series_eval_derivatives(const TruncatedSeries& a, double t0, int max_order);

}  // namespace ssz
