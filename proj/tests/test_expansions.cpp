/* SPDX-License-Identifier: Apache-2.0 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cfrac/expansions.hpp"
#include "oracles.hpp"

using namespace cfrac;
using cfrac::test::kPi;
using cfrac::test::ref_sec_tan;
using cfrac::test::ref_xcot;
using cfrac::test::rel_err;

namespace {

// E_0(y) = y cot y - y; mpmath at 30 digits.
constexpr double kE0AtHalf = 0.415243860856225960;
constexpr double kE0AtQuarter = 0.729079341161485026;
constexpr double kXcotAt1 = 0.642092615934330703;
constexpr double kSecTanAt1 = 3.40822344233582784842;

}  // namespace

TEST_CASE("cot_cf terms") {
  const CfSpec cf = cot_cf();
  CHECK(cf.name == "xcot");
  CHECK(cf.leading == PolyTerm::constant(1));
  CHECK(cf.terms(1) == TermPair{PolyTerm::quadratic(-1), PolyTerm::constant(3)});
  CHECK(cf.terms(4) == TermPair{PolyTerm::quadratic(-1), PolyTerm::constant(9)});
  CHECK(rel_err(eval_adaptive(cf, 1.0, 1e-12).value, kXcotAt1) <= 1e-12);
}

TEST_CASE("sec_tan_flat_spec terms") {
  const CfSpec cf = sec_tan_flat_spec();
  CHECK(cf.name == "sec-tan");
  const PolyTerm px = PolyTerm::linear(1), mx = PolyTerm::linear(-1);
  const TermPair want[] = {{px, PolyTerm::constant(1)}, {mx, PolyTerm::constant(2)},
                           {mx, PolyTerm::constant(3)}, {px, PolyTerm::constant(2)},
                           {px, PolyTerm::constant(5)}, {mx, PolyTerm::constant(2)},
                           {mx, PolyTerm::constant(7)}, {px, PolyTerm::constant(2)}};
  for (std::size_t k = 1; k <= 8; ++k) CHECK(cf.terms(k) == want[k - 1]);

  const EvalReport r = eval_adaptive(cf, 1.0, 1e-12);
  CHECK(rel_err(r.value, kSecTanAt1) <= 1e-12);
  CHECK(rel_err(r.value, sec_tan(1.0, 1e-12).value) <= 1e-13);
}

TEST_CASE("w_value") {
  CHECK(w_value(0, 0.0, 7) == 1.0);
  CHECK(w_value(2, 0.0, 0) == 9.0);
  CHECK(rel_err(w_value(0, 1.0, 10), kXcotAt1) <= 1e-12);

  SUBCASE("single pair by hand") {
    const double x = 0.8, x2 = x * x;
    CHECK(w_value(1, x, 0) == doctest::Approx(5.0 - x2 / 7.0).epsilon(1e-15));
    CHECK(w_value(1, x, 0, Tail::given(10.0)) ==
          doctest::Approx(5.0 - x2 / (7.0 - x2 / 10.0)).epsilon(1e-15));
    CHECK(w_value(1, x, 0, Tail::leading()) ==
          doctest::Approx(5.0 - x2 / (7.0 - x2 / 9.0)).epsilon(1e-15));
  }
  SUBCASE("W_0 approximates x cot x") {
    for (double x : cfrac::test::xcot_grid()) {
      CHECK_MESSAGE(rel_err(w_value(0, x, 16), ref_xcot(x)) <= 1e-12, "x = " << x);
    }
  }
}

TEST_CASE("e_value") {
  CHECK(e_value(0, 0.0, 0) == 1.0);
  CHECK(e_value(1, 0.0, 0) == 5.0);
  CHECK(std::fabs(e_value(0, 1.0, 12) - (kXcotAt1 - 1.0)) <= 1e-10);

  SUBCASE("one level by hand") {
    const double x = 0.6, t = 7.5;
    const double want = 1.0 - x / (1.0 - x / (3.0 + x / (1.0 + x / t)));
    CHECK(e_value(0, x, 0, Tail::given(t)) == doctest::Approx(want).epsilon(1e-15));
    CHECK(e_value(0, x, 0) == doctest::Approx(1.0 - x / (1.0 - x / (3.0 + x))).epsilon(1e-15));
  }
  SUBCASE("vanishing denominator") {
    // 3 + x/1 = 0 at x = -3.
    CHECK_THROWS_AS(e_value(0, -3.0, 0), DivisionNearZero);
  }
}

TEST_CASE("u_value") {
  CHECK(u_value(0, 0.0, 0) == 1.0);
  CHECK(std::fabs(u_value(0, 1.0, 12) - kE0AtHalf) <= 1e-10);
  CHECK(std::fabs(u_value(0, 0.5, 12) - kE0AtQuarter) <= 1e-10);

  SUBCASE("default tail is the leading estimate") {
    const double x = 0.9;
    const double tail = 5.0 - x / 2.0;
    const double want = 1.0 - x / (2.0 - x / (3.0 + x / (2.0 + x / tail)));
    CHECK(u_value(0, x, 0) == doctest::Approx(want).epsilon(1e-15));
    CHECK(u_value(0, x, 0, Tail::given(tail)) == u_value(0, x, 0));
  }
  SUBCASE("vanishing denominator") {
    // 3 + x/(2 + ...) with x = -6 and the inner term dropped.
    CHECK_THROWS_AS(u_value(0, -6.0, 0, Tail::dropped()), DivisionNearZero);
  }
}

TEST_CASE("leading tail estimate helps the nested U recursion") {
  // Truncation error of 1 + x/U_0 with the leading closing value against the
  // plain dropped term, at a shallow level where truncation dominates.
  for (double x : cfrac::test::sec_tan_grid()) {
    if (x == 0.0) continue;
    const double want = ref_sec_tan(x);
    const double with_leading = std::fabs(1.0 + x / u_value(0, x, 0) - want);
    const double dropped = std::fabs(1.0 + x / u_value(0, x, 0, Tail::dropped()) - want);
    CHECK_MESSAGE(with_leading <= dropped, "x = " << x);
  }
}

TEST_CASE("sec_tan") {
  CHECK(sec_tan(0.0, 1e-12).value == 1.0);
  CHECK(rel_err(sec_tan(kPi / 4, 1e-12).value, 1.0 + std::sqrt(2.0)) <= 1e-12);
  CHECK(rel_err(sec_tan(-kPi / 4, 1e-12).value, std::sqrt(2.0) - 1.0) <= 1e-12);
  CHECK(rel_err(sec_tan(1.0, 1e-12).value, kSecTanAt1) <= 1e-12);

  CHECK_THROWS_AS(sec_tan(kPi / 2, 1e-12), DivisionNearZero);
  CHECK_THROWS_AS(sec_tan(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sec_tan(1.4, 1e-12, 2), NoConvergence);

  const EvalReport r = sec_tan(0.3, 1e-12);
  CHECK(r.method == Method::backward);
  CHECK(r.est_rel_err <= 1e-12);
}

TEST_CASE("definition chain on the |x| <= 1.4 grid") {
  for (double x : cfrac::test::sec_tan_grid()) {
    const double w = w_value(0, x, 40);
    const double e = e_value(0, x, 40);
    const double u = u_value(0, x, 40);
    CHECK_MESSAGE(rel_err(e, w - x) <= 1e-10, "x = " << x);
    CHECK_MESSAGE(rel_err(u, e_value(0, x / 2, 40)) <= 1e-10, "x = " << x);
    CHECK_MESSAGE(rel_err(sec_tan(x, 1e-13).value, ref_sec_tan(x)) <= 1e-12, "x = " << x);
  }
}

TEST_CASE("flattened stream matches the nested truncations") {
  const CfSpec flat = sec_tan_flat_spec();
  for (double x : cfrac::test::sec_tan_grid()) {
    for (std::size_t m = 0; m < 6; ++m) {
      // Depth 4m+4: unroll through U_m and drop x/U_{m+1}.
      const double nested = 1.0 + x / u_value(0, x, m, Tail::dropped());
      CHECK(rel_err(eval_backward(flat, x, 4 * m + 4), nested) <= 1e-13);
      // Depth 4m+1: U_m closed by its constant 4m+1.
      if (m > 0) {
        const double shallow = 1.0 + x / u_value(0, x, m - 1, Tail::given(4.0 * m + 1.0));
        CHECK(rel_err(eval_backward(flat, x, 4 * m + 1), shallow) <= 1e-13);
      }
    }
  }
}

TEST_CASE("sec + tan and sec - tan are reciprocal") {
  for (double x : cfrac::test::sec_tan_grid()) {
    const double p = sec_tan(x, 1e-13).value * sec_tan(-x, 1e-13).value;
    CHECK_MESSAGE(std::fabs(p - 1.0) <= 1e-10, "x = " << x);
  }
}
