#include "ssz/sheffer.hpp"

#include <cmath>
#include <sstream>

#include "ssz/errors.hpp"

namespace ssz {

namespace {

constexpr double kHPrimeTol = 1e-9;
constexpr double kAOneTol = 1e-12;
constexpr double kPositivityTol = 1e-12;

std::vector<double> default_scan_grid() {
  std::vector<double> g;
  g.reserve(101);
  for (int i = 0; i <= 100; ++i) g.push_back(0.1 * static_cast<double>(i));
  return g;
}

}  // namespace

ShefferFamily ShefferFamily::from_series(std::string name, TruncatedSeries a, TruncatedSeries h) {
  ShefferFamily fam;
  fam.name = std::move(name);
  fam.A = std::move(a);
  fam.H = std::move(h);
  const auto da = series_eval_derivatives(fam.A, 1.0, 2);
  const auto dh = series_eval_derivatives(fam.H, 1.0, 2);
  fam.A1 = da[0];
  fam.A1p = da[1];
  fam.A1pp = da[2];
  fam.H1 = dh[0];
  fam.H1p = dh[1];
  fam.H1pp = dh[2];
  return fam;
}

void ShefferFamily::require_usable() const {
  std::ostringstream msg;
  if (std::abs(H1p - 1.0) > kHPrimeTol) {
    msg << "family '" << name << "': H'(1)=" << H1p << " violates H'(1)=1";
    throw ValidationError(msg.str());
  }
  if (std::abs(A1) <= kAOneTol) {
    msg << "family '" << name << "': A(1)=" << A1 << " is numerically zero";
    throw ValidationError(msg.str());
  }
}

FamilyValidation validate_family(const ShefferFamily& fam, std::span<const double> scan_grid,
                                 int scan_order) {
  if (fam.H[0] != 0.0) {
    std::ostringstream msg;
    msg << "family '" << fam.name << "': H has constant term h_0=" << fam.H[0]
        << ", expected h_0=0";
    throw ValidationError(msg.str());
  }
  if (fam.H[1] == 0.0) {
    throw ValidationError("family '" + fam.name + "': H has h_1=0, expected h_1 != 0");
  }
  fam.require_usable();

  FamilyValidation report;
  report.h_prime_at_1 = fam.H1p;
  report.a_at_1 = fam.A1;
  if (fam.A[0] == 0.0) {
    report.warnings.push_back(
        "A has constant term a_0=0; the a_0 != 0 hypothesis is relaxed "
        "(the catalog family with A(t)=t does this and stays positive)");
  }

  std::vector<double> grid_storage;
  if (scan_grid.empty()) {
    grid_storage = default_scan_grid();
    scan_grid = grid_storage;
  }
  const int order = std::max(scan_order, 0);
  for (double x : scan_grid) {
    const ShefferValues vals = sheffer_values(fam, x, order);
    for (int k = 0; k <= order; ++k) {
      const double v = vals.values[static_cast<size_t>(k)];
      if (v < report.min_value) {
        report.min_value = v;
        report.min_value_x = x;
        report.min_value_k = k;
      }
    }
  }
  report.positivity_ok = report.min_value >= -kPositivityTol;
  return report;
}

ShefferValues sheffer_values(const ShefferFamily& fam, double x, int K) {
  if (K < 0) throw std::invalid_argument("sheffer_values: K must be >= 0");
  if (x < 0.0) throw std::invalid_argument("sheffer_values: x must be >= 0");
  const TruncatedSeries expxh = series_exp(fam.H.scaled(x).padded(K));
  const TruncatedSeries prod = series_mul(fam.A.padded(K), expxh);
  ShefferValues out;
  out.x = x;
  out.values.assign(prod.coeffs().begin(), prod.coeffs().end());
  return out;
}

ShefferFamily builtin_family(const std::string& name) {
  const TruncatedSeries h_identity(std::vector<double>{0.0, 1.0});
  if (name == "szasz") {
    return ShefferFamily::from_series("szasz", TruncatedSeries(std::vector<double>{1.0}),
                                      h_identity);
  }
  if (name == "example41") {
    // A(t) = e^t, carried to the positivity-scan order so that p_k matches
    // the closed form (1+x)^k/k! for every scanned k
    constexpr int order = 128;
    std::vector<double> a(static_cast<size_t>(order) + 1, 0.0);
    double inv_fact = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) inv_fact /= static_cast<double>(k);
      a[static_cast<size_t>(k)] = inv_fact;
    }
    return ShefferFamily::from_series("example41", TruncatedSeries(std::move(a)), h_identity);
  }
  if (name == "example42") {
    // A(t) = t
    return ShefferFamily::from_series("example42", TruncatedSeries(std::vector<double>{0.0, 1.0}),
                                      h_identity);
  }
  throw ConfigError("unknown builtin family '" + name +
                    "' (expected szasz | example41 | example42, or appell with a g series)");
}

ShefferFamily appell_family(const TruncatedSeries& g, const std::string& name) {
  return ShefferFamily::from_series(name, g, TruncatedSeries(std::vector<double>{0.0, 1.0}));
}

std::vector<std::string> builtin_family_names() { return {"szasz", "example41", "example42"}; }

}  // namespace ssz
