#include "ssz/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssz {

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries: coefficient vector must be non-empty");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("TruncatedSeries: coefficients must be finite");
    }
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  return TruncatedSeries(std::vector<double>(static_cast<size_t>(order) + 1, 0.0));
}

TruncatedSeries TruncatedSeries::constant(double value, int order) {
  TruncatedSeries s = zero(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::padded(int order) const {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  std::vector<double> c(static_cast<size_t>(order) + 1, 0.0);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), c.size()), c.begin());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::scaled(double s) const {
  std::vector<double> c(coeffs_);
  for (double& v : c) v *= s;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int k = std::max(a.order(), b.order());
  std::vector<double> c(static_cast<size_t>(k) + 1, 0.0);
  for (int i = 0; i <= k; ++i) c[static_cast<size_t>(i)] = a[i] + b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int k = std::max(a.order(), b.order());
  std::vector<double> c(static_cast<size_t>(k) + 1, 0.0);
  const int na = std::min(a.order(), k);
  for (int i = 0; i <= na; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const int nb = std::min(b.order(), k - i);
    for (int j = 0; j <= nb; ++j) c[static_cast<size_t>(i + j)] += ai * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  const int k = a.order();
  std::vector<double> c(static_cast<size_t>(k) + 1, 0.0);
  c[0] = std::exp(a[0]);
  for (int m = 1; m <= k; ++m) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += static_cast<double>(j) * a[j] * c[static_cast<size_t>(m - j)];
    c[static_cast<size_t>(m)] = acc / static_cast<double>(m);
  }
  return TruncatedSeries(std::move(c));
}

std::vector<double> series_eval_derivatives(const TruncatedSeries& a, double t0, int max_order) {
  if (max_order < 0) throw std::invalid_argument("series_eval_derivatives: max_order must be >= 0");
  std::vector<double> out(static_cast<size_t>(max_order) + 1, 0.0);
  for (int d = 0; d <= max_order; ++d) {
    // d-th derivative: sum_{k>=d} c_k * k!/(k-d)! * t0^{k-d}, summed by Horner
    // from the high end to keep the falling factorials incremental.
    double acc = 0.0;
    for (int k = a.order(); k >= d; --k) {
      double ffac = 1.0;
      for (int j = 0; j < d; ++j) ffac *= static_cast<double>(k - j);
      acc = acc * t0 + a[k] * ffac;
    }
    out[static_cast<size_t>(d)] = acc;
  }
  return out;
}

}  // namespace ssz
