#include <doctest.h>

#include <cmath>

#include "ssz/moments.hpp"
#include "ssz/operators.hpp"

using namespace ssz;

TEST_CASE("closed-form moments") {
  const ShefferFamily szasz = builtin_family("szasz");
  const ShefferFamily ex41 = builtin_family("example41");

  CHECK(moment_closed_form(szasz, 17, 3.0, 1.3, 0) == 1.0);
  CHECK(moment_closed_form(ex41, 17, 3.0, 1.3, 0) == 1.0);

  CHECK(moment_closed_form(szasz, 100, 10, 2.0, 2) == doctest::Approx(4.2).epsilon(1e-13));

  const double r = std::sqrt(10.0) / 10.0;
  const double expect = 1.0 + 3.0 * r + 2.0 * 0.1;
  CHECK(moment_closed_form(ex41, 10, std::sqrt(10.0), 1.0, 2) ==
        doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("central moments") {
  const ShefferFamily szasz = builtin_family("szasz");
  const ShefferFamily ex41 = builtin_family("example41");

  CHECK(central_moment2(szasz, 100, 10, 2.0) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(central_moment2(ex41, 10, std::sqrt(10.0), 1.0) ==
        doctest::Approx(std::sqrt(10.0) / 10.0 + 0.2).epsilon(1e-13));
  CHECK(central_moment2(szasz, 100, 10, 0.0) == 0.0);

  CHECK(central_moment1_displayed() == 0.0);
  CHECK(central_moment1_algebraic(szasz, 100, 10) == 0.0);
  CHECK(central_moment1_algebraic(ex41, 100, 10) == doctest::Approx(0.1).epsilon(1e-13));
}

TEST_CASE("the displayed second central moment equals the algebraic expansion") {
  // The A'(1) cross terms cancel in m2 - 2x m1 + x^2, so the two routes
  // agree for every family, not only those with A'(1) = 0.
  for (const auto& name : builtin_family_names()) {
    const ShefferFamily fam = builtin_family(name);
    for (double n : {10.0, 100.0}) {
      for (double x : {0.0, 0.5, 2.0}) {
        const double paper = central_moment2(fam, n, std::sqrt(n), x);
        const double algebraic = algebraic_c2(fam, n, std::sqrt(n), x);
        CHECK(std::abs(paper - algebraic) <= 1e-12 * (1.0 + std::abs(paper)));
      }
    }
  }
}

TEST_CASE("moment set satisfies its own identity") {
  const ShefferFamily ex42 = builtin_family("example42");
  const MomentSet m = moment_set(ex42, 25, 5.0, 1.5);
  CHECK(std::abs(m.c2 - (m.m2 - 2.0 * m.x * m.m1 + m.x * m.x * m.m0)) < 1e-12);
}

TEST_CASE("closed forms match direct summation") {
  const auto e0 = builtin_function("e0");
  const auto e1 = builtin_function("e1");
  const auto e2 = builtin_function("e2");
  for (const auto& name : builtin_family_names()) {
    const ShefferFamily fam = builtin_family(name);
    for (double n : {10.0, 100.0, 1000.0}) {
      for (double b_n : {std::sqrt(n), std::pow(n, 2.0 / 3.0)}) {
        OperatorConfig cfg;
        cfg.n = n;
        cfg.b_n = b_n;
        for (double x : {0.0, 0.5, 1.0, 2.0}) {
          const TargetFunction* fs[] = {&e0, &e1, &e2};
          for (int i = 0; i < 3; ++i) {
            const double numeric = apply_T_star(fam, cfg, *fs[i], x).value;
            const double closed = moment_closed_form(fam, n, b_n, x, i);
            CHECK(std::abs(numeric - closed) <= 1e-8 * (1.0 + std::abs(closed)));
          }
          TargetFunction sq;
          sq.name = "(t-x)^2";
          sq.eval = [x](double t) { return (t - x) * (t - x); };
          const double numeric_c2 = apply_T_star(fam, cfg, sq, x).value;
          CHECK(std::abs(numeric_c2 - algebraic_c2(fam, n, b_n, x)) <=
                1e-8 * (1.0 + std::abs(numeric_c2)));
        }
      }
    }
  }
}

TEST_CASE("korovkin report") {
  const ShefferFamily szasz = builtin_family("szasz");
  const std::vector<double> ns{10, 100, 1000};
  const auto rep = korovkin_report(szasz, ScalingSequence::sqrt_rule(), 1.0, ns);
  REQUIRE(rep.rows.size() == 3);
  const double expect_e2[] = {std::sqrt(10.0) / 10.0, 0.1, std::sqrt(1000.0) / 1000.0};
  for (size_t i = 0; i < 3; ++i) {
    CHECK(rep.rows[i].dev_e0 == 0.0);
    CHECK(rep.rows[i].dev_e1 == 0.0);
    CHECK(rep.rows[i].dev_e2 == doctest::Approx(expect_e2[i]).epsilon(1e-9));
  }
  CHECK(rep.deviations_nonincreasing);

  const auto rep41 =
      korovkin_report(builtin_family("example41"), ScalingSequence::sqrt_rule(), 1.0, ns);
  CHECK(rep41.rows[1].dev_e1 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(rep41.deviations_nonincreasing);
}
