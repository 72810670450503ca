#include "ssz/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ssz {

namespace {

// Coefficient of the x term in (2.3) / Lemma 3.3: (A + 2A' + A H'')/A at 1.
double coef_linear(const ShefferFamily& fam) {
  return (fam.A1 + 2.0 * fam.A1p + fam.A1 * fam.H1pp) / fam.A1;
}

// Constant coefficient: (A' + A'')/A at 1.
double coef_const(const ShefferFamily& fam) { return (fam.A1p + fam.A1pp) / fam.A1; }

}  // namespace

double moment_closed_form(const ShefferFamily& fam, double n, double b_n, double x, int i) {
  const double r = b_n / n;
  switch (i) {
    case 0:
      return 1.0;
    case 1:
      return x + r * fam.A1p / fam.A1;
    case 2:
      return x * x + r * coef_linear(fam) * x + r * r * coef_const(fam);
    default:
      throw std::invalid_argument("moment_closed_form: i must be 0, 1 or 2");
  }
}

double central_moment1_displayed() { return 0.0; }

double central_moment1_algebraic(const ShefferFamily& fam, double n, double b_n) {
  return (b_n / n) * fam.A1p / fam.A1;
}

double central_moment2(const ShefferFamily& fam, double n, double b_n, double x) {
  const double r = b_n / n;
  return r * (1.0 + fam.H1pp) * x + r * r * coef_const(fam);
}

double algebraic_c2(const ShefferFamily& fam, double n, double b_n, double x) {
  const double m1 = moment_closed_form(fam, n, b_n, x, 1);
  const double m2 = moment_closed_form(fam, n, b_n, x, 2);
  return m2 - 2.0 * x * m1 + x * x;
}

MomentSet moment_set(const ShefferFamily& fam, double n, double b_n, double x) {
  MomentSet m;
  m.m0 = 1.0;
  m.m1 = moment_closed_form(fam, n, b_n, x, 1);
  m.m2 = moment_closed_form(fam, n, b_n, x, 2);
  m.c2 = algebraic_c2(fam, n, b_n, x);
  m.x = x;
  m.n = n;
  m.b_n = b_n;
  return m;
}

KorovkinReport korovkin_report(const ShefferFamily& fam, const ScalingSequence& scaling, double a,
                               std::span<const double> n_list) {
  if (!(a > 0.0)) throw std::invalid_argument("korovkin_report: a must be > 0");
  KorovkinReport rep;
  rep.a = a;
  const double c1 = coef_linear(fam);
  const double c2 = coef_const(fam);
  for (double n : n_list) {
    KorovkinRow row;
    row.n = n;
    row.b_n = scaling.b(n);
    const double r = row.b_n / n;
    row.dev_e0 = 0.0;
    row.dev_e1 = std::abs(r * fam.A1p / fam.A1);
    if (c1 >= 0.0 && c2 >= 0.0) {
      row.dev_e2 = r * c1 * a + r * r * c2;
    } else {
      double sup = 0.0;
      for (int i = 0; i <= 1000; ++i) {
        const double x = a * static_cast<double>(i) / 1000.0;
        sup = std::max(sup, std::abs(r * c1 * x + r * r * c2));
      }
      row.dev_e2 = sup;
    }
    rep.rows.push_back(row);
  }
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    if (rep.rows[i].dev_e0 > rep.rows[i - 1].dev_e0 || rep.rows[i].dev_e1 > rep.rows[i - 1].dev_e1 ||
        rep.rows[i].dev_e2 > rep.rows[i - 1].dev_e2) {
      rep.deviations_nonincreasing = false;
    }
  }
  return rep;
}

}  // namespace ssz
