#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "polyvortex/dynamics.hpp"
#include "polyvortex/errors.hpp"
#include "polyvortex/nested.hpp"

using namespace polyvortex;

namespace {

std::mt19937_64 rng(90210u);

int count_for_alignment(const std::vector<NestedSolution>& sols, Alignment a) {
  int c = 0;
  for (const auto& s : sols) {
    if (s.alignment == a) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("mu and lambda closed forms") {
  CHECK(mu(2) == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-15));
  CHECK(mu(3) == doctest::Approx(1.5 + std::sqrt(1.25)).epsilon(1e-15));
  CHECK(lambda_n(2) == doctest::Approx(4.0));
  CHECK(lambda_n(3) == doctest::Approx(3.0));
  for (int n = 2; n <= 64; ++n) {
    CHECK(std::abs(mu(n) + 1.0 / mu(n) - lambda_n(n)) < 1e-13);
  }
}

TEST_CASE("equation coefficients for the anchor ratios") {
  const auto a = equation_coefficients(2, 1.0, Alignment::Aligned);
  CHECK(a.alpha == doctest::Approx(5.0));
  CHECK(a.beta == doctest::Approx(5.0));
  CHECK(a.gamma == doctest::Approx(24.0));

  const auto s = equation_coefficients(2, 1.0, Alignment::Staggered);
  CHECK(s.alpha == doctest::Approx(5.0));
  CHECK(s.beta == doctest::Approx(-5.0));
  CHECK(s.gamma == doctest::Approx(-24.0));

  // n = 3, ratio -1: the right-hand side lambda*(r^2 + lambda r + 1) = -3,
  // negated for the staggered branch
  const auto a3 = equation_coefficients(3, -1.0, Alignment::Aligned);
  CHECK(a3.gamma == doctest::Approx(-3.0));
  const auto s3 = equation_coefficients(3, -1.0, Alignment::Staggered);
  CHECK(s3.gamma == doctest::Approx(3.0));
}

TEST_CASE("g_eval and f_eval closed-form anchors") {
  const PolynomialInstance p{5.0, 5.0, 24.0, 2};
  CHECK(std::abs(g_eval(p, std::sqrt(5.0 + 2.0 * std::sqrt(6.0)))) < 1e-12);
  CHECK(g_eval(p, 1e-9) == doctest::Approx(5.0 * 5.0 - 24.0).epsilon(1e-8));

  const PolynomialInstance q{2.0, 0.0, 0.3, 5};
  CHECK(std::abs(f_eval(q, 2.0 * 5.0 / 7.0)) < 1e-13);

  CHECK_THROWS_AS(g_eval(p, 0.0), ValidationError);
  CHECK_THROWS_AS(f_eval(p, -1.0), ValidationError);
}

TEST_CASE("positive roots: biquadratic anchors") {
  const auto aligned = positive_roots({5.0, 5.0, 24.0, 2});
  REQUIRE(aligned.size() == 2);
  CHECK(aligned[0] ==
        doctest::Approx(std::sqrt(5.0 - 2.0 * std::sqrt(6.0))).epsilon(1e-12));
  CHECK(aligned[1] ==
        doctest::Approx(std::sqrt(5.0 + 2.0 * std::sqrt(6.0))).epsilon(1e-12));

  const auto staggered = positive_roots({5.0, -5.0, -24.0, 2});
  REQUIRE(staggered.size() == 1);
  CHECK(staggered[0] == doctest::Approx(1.0).epsilon(1e-12));

  const auto opposite = positive_roots(equation_coefficients(2, -1.0, Alignment::Staggered));
  REQUIRE(opposite.size() == 2);
  CHECK(opposite[0] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
  CHECK(opposite[1] == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-12));
}

TEST_CASE("analytic root counts on the anchor instances") {
  // biquadratic with 0 < gamma < alpha beta and alpha + beta > 0: two roots
  const auto two = count_roots_analytic({5.0, 5.0, 24.0, 2});
  CHECK(two.exact());
  CHECK(two.lo == 2);
  // gamma > alpha beta: one root
  const auto one = count_roots_analytic({5.0, -5.0, -24.0, 2});
  CHECK(one.exact());
  CHECK(one.lo == 1);
  // n >= 3 with both factors negative and alpha beta >= gamma > 0: none
  const auto none = count_roots_analytic({-1.0, -2.0, 1.0, 4});
  CHECK(none.exact());
  CHECK(none.lo == 0);
  CHECK(positive_roots({-1.0, -2.0, 1.0, 4}).empty());
}

TEST_CASE("analytic count flags case boundaries") {
  // gamma vanishes on the mu boundary ratios
  const auto p = equation_coefficients(3, -mu(3), Alignment::Staggered);
  CHECK(std::abs(p.gamma) < 1e-10);
  CHECK(count_roots_analytic(p).boundary);
}

TEST_CASE("regime classification rows") {
  const auto r1 = classify_regime(2, 1.0);
  CHECK(r1.aligned.lo == 2);
  CHECK(r1.aligned.hi == 2);
  CHECK(r1.staggered.lo == 1);
  CHECK(r1.staggered.hi == 1);
  CHECK(r1.regime == "same_sign");

  const auto r2 = classify_regime(3, -1.0 / mu(3));
  CHECK(r2.aligned.lo == 1);
  CHECK(r2.staggered.lo == 2);
  CHECK(r2.staggered.hi == 2);

  for (int n : {2, 3, 5, 9}) {
    const auto r3 = classify_regime(n, -1.0);
    CHECK(r3.aligned.lo == 0);
    CHECK(r3.aligned.hi == 0);
    CHECK(r3.staggered.lo == 2);
    CHECK(r3.staggered.hi == 2);
  }

  CHECK(classify_regime(5, 3.0).staggered.hi == 3);
  CHECK(classify_regime(5, -0.1).regime == "small_negative");
  CHECK(classify_regime(5, -1.3).regime == "middle_negative");
  CHECK(classify_regime(5, -7.0).regime == "large_negative");
  CHECK(classify_regime(5, -mu(5)).regime == "at_mu_boundary");
  CHECK_THROWS_AS(classify_regime(3, 0.0), ValidationError);
}

TEST_CASE("solve_nested: equal pair rings") {
  const auto sols = solve_nested(2, 1.0, 1.0, {1.0, 0.0});
  REQUIRE(sols.size() == 3);
  CHECK(count_for_alignment(sols, Alignment::Aligned) == 2);
  CHECK(count_for_alignment(sols, Alignment::Staggered) == 1);
  for (const auto& sol : sols) {
    CHECK(sol.report.residual < 1e-10);
    CHECK(sol.report.kind == EquilibriumKind::Rotation);
    REQUIRE(sol.report.center.has_value());
    CHECK(std::abs(*sol.report.center) < 1e-9);
  }
  // the staggered solution is the unit square
  for (const auto& sol : sols) {
    if (sol.alignment == Alignment::Staggered) {
      CHECK(sol.x == doctest::Approx(1.0).epsilon(1e-12));
      const auto rep = classify(sol.system);
      CHECK(rep.omega == doctest::Approx(1.5).epsilon(1e-11));
    }
  }
}

TEST_CASE("solve_nested: equal triangles give two aligned solutions") {
  const auto sols = solve_nested(3, 1.0, 1.0, {1.0, 0.0});
  CHECK(count_for_alignment(sols, Alignment::Aligned) == 2);
  for (const auto& sol : sols) {
    CHECK(sol.report.residual < 1e-10);
  }
}

TEST_CASE("solve_nested: opposite pair rings are staggered only") {
  const auto sols = solve_nested(2, 1.0, -1.0, {1.0, 0.0});
  CHECK(count_for_alignment(sols, Alignment::Aligned) == 0);
  REQUIRE(count_for_alignment(sols, Alignment::Staggered) == 2);
  CHECK(sols[0].x == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-10));
  CHECK(sols[1].x == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-10));
}

TEST_CASE("solve_nested rejects bad input") {
  CHECK_THROWS_AS(solve_nested(2, 0.0, 1.0, {1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(solve_nested(1, 1.0, 1.0, {1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(solve_nested(2, 1.0, 1.0, {0.0, 0.0}), ValidationError);
}

TEST_CASE("absolute equilibrium: pair ring anchor") {
  const auto abs_eq = absolute_equilibrium(2, 1.0);
  CHECK(abs_eq.gamma2 == doctest::Approx(-(2.0 + std::sqrt(3.0))).epsilon(1e-14));
  CHECK(std::abs(abs_eq.s2_over_s1) ==
        doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-14));
  CHECK(argument(abs_eq.s2_over_s1) ==
        doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-14));
  CHECK(std::abs(oneil_sum(abs_eq.system)) < 1e-11);

  const auto rep = classify(abs_eq.system, 1e-9);
  CHECK(rep.kind == EquilibriumKind::Absolute);
}

TEST_CASE("absolute equilibrium identities and fixed-point flow") {
  for (int n = 2; n <= 8; ++n) {
    const auto abs_eq = absolute_equilibrium(n, 1.0);
    const double r = abs_eq.gamma2;
    const PlanePoint lhs = ipow(abs_eq.s2_over_s1, n);
    CHECK(std::abs(lhs - PlanePoint(-r * r, 0.0)) < 1e-12 * std::max(1.0, r * r));
    CHECK(std::abs(r * r + lambda_n(n) * r + 1.0) < 1e-12);
    // the external ring carries the larger vorticity magnitude
    CHECK(std::abs(abs_eq.gamma2) > 1.0);
    CHECK(std::abs(abs_eq.s2_over_s1) > 1.0);
  }
  // fixed point of the flow
  const auto abs_eq = absolute_equilibrium(2, 1.0);
  const Trajectory tr = integrate(abs_eq.system, 10.0, 1e-10);
  double max_disp = 0.0;
  for (const auto& state : tr.states) {
    for (std::size_t k = 0; k < state.size(); ++k) {
      max_disp = std::max(max_disp,
                          std::abs(state.positions()[k] - abs_eq.system.positions()[k]));
    }
  }
  CHECK(max_disp < 1e-8);
}

TEST_CASE("scan over the seven regime rows of the triangle") {
  const double m = mu(3);
  const std::vector<double> grid{-5.0, -m, -1.0, -1.0 / m, -0.1, 0.5, 2.0};
  const auto rows = scan_regimes(3, grid);
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) CHECK(row.consistent);
  CHECK(rows[0].prediction.regime == "large_negative");
  CHECK(rows[1].prediction.regime == "at_mu_boundary");
  CHECK(rows[1].aligned_numeric == 1);
  CHECK(rows[1].staggered_numeric == 2);
  CHECK(rows[2].prediction.regime == "opposite_equal");
  CHECK(rows[2].aligned_numeric == 0);
  CHECK(rows[2].staggered_numeric == 2);
  CHECK(rows[3].aligned_numeric == 1);
  CHECK(rows[3].staggered_numeric == 2);
  CHECK(rows[5].aligned_numeric == 2);
  CHECK(rows[6].aligned_numeric == 2);
}

TEST_CASE("scan CSV columns") {
  const auto rows = scan_regimes(2, {1.0, -1.0});
  std::ostringstream out;
  write_scan_csv(rows, out);
  const std::string text = out.str();
  CHECK(text.rfind("n,gamma_ratio,regime_label,aligned_predicted,aligned_numeric,"
                   "staggered_predicted,staggered_numeric,mu_n\n",
                   0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("aligned equation has exactly two roots for positive ratios") {
  std::uniform_real_distribution<double> u(0.05, 8.0);
  for (int n = 2; n <= 12; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto roots = positive_roots(equation_coefficients(n, u(rng), Alignment::Aligned));
      CHECK(roots.size() == 2);
    }
  }
}

TEST_CASE("x = 1 solves the staggered equation for equal vorticities") {
  for (int n = 2; n <= 12; ++n) {
    const auto p = equation_coefficients(n, 1.0, Alignment::Staggered);
    CHECK(std::abs(g_eval(p, 1.0)) < 1e-12);
    const auto roots = positive_roots(p);
    const bool found = std::any_of(roots.begin(), roots.end(),
                                   [](double x) { return std::abs(x - 1.0) < 1e-10; });
    CHECK(found);
  }
}

TEST_CASE("analytic counts agree with numeric roots on random instances") {
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  int checked = 0;
  while (checked < 10000) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double r = u(rng);
    if (std::abs(r) < 0.05) continue;
    for (Alignment a : {Alignment::Aligned, Alignment::Staggered}) {
      const auto p = equation_coefficients(n, r, a);
      const auto count = count_roots_analytic(p);
      if (count.boundary) continue;
      const auto roots = positive_roots(p);
      const int numeric = static_cast<int>(roots.size());
      CHECK(count.lo <= numeric);
      CHECK(numeric <= count.hi);
      if (count.exact()) CHECK(numeric == count.lo);
      ++checked;
    }
  }
}

TEST_CASE("ring swap sends roots to their reciprocals") {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  int checked = 0;
  while (checked < 400) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const double r = u(rng);
    if (std::abs(r) < 0.05 || std::abs(r + 1.0) < 0.02) continue;
    for (Alignment a : {Alignment::Aligned, Alignment::Staggered}) {
      const auto roots = positive_roots(equation_coefficients(n, r, a));
      const auto swapped = positive_roots(equation_coefficients(n, 1.0 / r, a));
      REQUIRE(roots.size() == swapped.size());
      for (double x : roots) {
        const double want = 1.0 / x;
        double best = 1e300;
        for (double y : swapped) best = std::min(best, std::abs(y - want));
        CHECK(best <= 1e-9 * std::max(1.0, want));
      }
    }
    ++checked;
  }
}
