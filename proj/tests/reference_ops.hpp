#pragma once

// Hand-coded reference evaluators, kept independent of the library's weight
// stream so the specialization tests compare two genuinely different routes.

#include <cmath>
#include <cstdint>
#include <vector>

namespace refops {

// Szasz operator: e^{-nx} sum_k (nx)^k / k! f(k/n).
template <typename F>
double szasz(double n, F&& f, double x) {
  const double lam = n * x;
  if (lam == 0.0) return f(0.0);
  const std::int64_t kmax =
      static_cast<std::int64_t>(lam + 12.0 * std::sqrt(lam + 1.0) + 80.0);
  double term = std::exp(-lam);
  double sum = term * f(0.0);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    term *= lam / static_cast<double>(k);
    sum += term * f(static_cast<double>(k) / n);
  }
  return sum;
}

// Jakimovski-Leviatan operator for an Appell family with generating series g:
// e^{-nx}/g(1) sum_k p_k(nx) f(k/n),  p_k(y) = sum_j g_j y^{k-j}/(k-j)!.
template <typename F>
double jakimovski_leviatan(const std::vector<double>& g, double n, F&& f, double x) {
  const double lam = n * x;
  double g1 = 0.0;
  for (double gj : g) g1 += gj;
  const std::int64_t kmax =
      static_cast<std::int64_t>(lam + 12.0 * std::sqrt(lam + 1.0) + 80.0) +
      static_cast<std::int64_t>(g.size());
  // Poisson factors q_i = e^{-lam} lam^i / i!
  std::vector<double> q(static_cast<size_t>(kmax) + 1);
  q[0] = std::exp(-lam);
  for (std::int64_t i = 1; i <= kmax; ++i) q[static_cast<size_t>(i)] = q[static_cast<size_t>(i - 1)] * lam / static_cast<double>(i);
  double sum = 0.0;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    double pk = 0.0;
    for (std::size_t j = 0; j < g.size() && static_cast<std::int64_t>(j) <= k; ++j) {
      pk += g[j] * q[static_cast<size_t>(k - static_cast<std::int64_t>(j))];
    }
    sum += pk * f(static_cast<double>(k) / n);
  }
  return sum / g1;
}

// Closed form of the catalog's A=e^t family: Poisson weights at lam+1.
template <typename F>
double example41_closed_form(double n, double b_n, F&& f, double x) {
  const double lam = (n / b_n) * x + 1.0;
  const std::int64_t kmax =
      static_cast<std::int64_t>(lam + 12.0 * std::sqrt(lam + 1.0) + 80.0);
  double term = std::exp(-lam);
  double sum = 0.0;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    if (k > 0) term *= lam / static_cast<double>(k);
    sum += term * f(static_cast<double>(k) * b_n / n);
  }
  return sum;
}

inline std::vector<double> exp_series_coeffs(int order) {
  std::vector<double> g(static_cast<size_t>(order) + 1);
  double v = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) v /= static_cast<double>(k);
    g[static_cast<size_t>(k)] = v;
  }
  return g;
}

}  // namespace refops
