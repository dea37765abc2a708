/* SPDX-License-Identifier: Apache-2.0 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "cfrac/cf_core.hpp"
#include "cfrac/expansions.hpp"
#include "oracles.hpp"

using namespace cfrac;
using cfrac::test::kPi;
using cfrac::test::ref_sec_tan;
using cfrac::test::ref_xcot;
using cfrac::test::rel_err;

namespace {

// Every partial denominator is 0, so the innermost divisor vanishes for any x.
CfSpec degenerate_spec() {
  return {"degenerate", PolyTerm::constant(0), [](std::size_t) {
            return TermPair{PolyTerm::linear(1), PolyTerm{}};
          }};
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("Coeff keeps lowest terms with positive denominator") {
  CHECK(Coeff(4, -6) == Coeff(-2, 3));
  CHECK(Coeff(0, -5) == Coeff(0, 1));
  CHECK_THROWS_AS(Coeff(1, 0), std::invalid_argument);
}

TEST_CASE("PolyTerm evaluation and printing") {
  const PolyTerm t{Coeff(1, 2), Coeff(-3), Coeff(2)};
  CHECK(t.at(2.0) == doctest::Approx(0.5 - 6.0 + 8.0));
  CHECK(PolyTerm::quadratic(-1).to_string() == "-x^2");
  CHECK(PolyTerm::linear(1).to_string() == "x");
  CHECK(PolyTerm::constant(7).to_string() == "7");
  CHECK(t.to_string() == "2x^2 - 3x + 1/2");
  CHECK(PolyTerm{}.to_string() == "0");
}

TEST_CASE("term_at") {
  const CfSpec cot = cot_cf();
  SUBCASE("first terms of the x cot x fraction") {
    const auto [a, b] = term_at(cot, 1, 2.0);
    CHECK(a == -4.0);
    CHECK(b == 3.0);
    const auto [a3, b3] = term_at(cot, 3, 1.0);
    CHECK(a3 == -1.0);
    CHECK(b3 == 7.0);
  }
  SUBCASE("linear numerator vanishes at zero") {
    const auto [a, b] = term_at(sec_tan_flat_spec(), 5, 0.0);
    CHECK(a == 0.0);
    CHECK(b == 5.0);
  }
  SUBCASE("index zero is rejected") { CHECK_THROWS_AS(term_at(cot, 0, 1.0), std::invalid_argument); }
  SUBCASE("zero partial numerator is rejected") {
    const CfSpec bad{"bad", PolyTerm::constant(1),
                     [](std::size_t) { return TermPair{PolyTerm{}, PolyTerm::constant(1)}; }};
    CHECK_THROWS_AS(term_at(bad, 1, 1.0), std::invalid_argument);
  }
}

TEST_CASE("eval_backward") {
  const CfSpec cot = cot_cf();
  CHECK(eval_backward(cot, 0.0, 5) == 1.0);
  CHECK(rel_err(eval_backward(cot, 1.0, 20), 0.642092615934330703) <= 1e-13);
  CHECK(std::fabs(eval_backward(cot, kPi / 2, 40)) <= 1e-12);
  CHECK_THROWS_AS(eval_backward(cot, 1.0, 0), std::invalid_argument);

  SUBCASE("poles of the approximant") {
    CHECK_THROWS_AS(eval_backward(degenerate_spec(), 1.0, 1), DivisionNearZero);
    // 1 + x/(1 - x/2) has a pole at x = 2.
    CHECK_THROWS_AS(eval_backward(sec_tan_flat_spec(), 2.0, 2), DivisionNearZero);
    CHECK_THROWS_AS(eval_backward(cot, 1.0, 3, 0.0), DivisionNearZero);
  }

  SUBCASE("a tail extends the innermost denominator") {
    // depth 1 with tail t: 1 + a1/(b1 + a2/t)
    const double x = 0.7, t = 4.5;
    const double want = 1.0 + (-x * x) / (3.0 + (-x * x) / t);
    CHECK(eval_backward(cot, x, 1, t) == doctest::Approx(want).epsilon(1e-15));
  }
}

TEST_CASE("eval_forward") {
  const CfSpec cot = cot_cf();
  const CfSpec flat = sec_tan_flat_spec();

  SUBCASE("x = 0 gives b0 everywhere") {
    for (double h : eval_forward(cot, 0.0, 12)) CHECK(h == 1.0);
  }
  SUBCASE("agrees with backward recurrence") {
    const auto h = eval_forward(cot, 1.0, 20);
    REQUIRE(h.size() == 20);
    CHECK(rel_err(h.back(), eval_backward(cot, 1.0, 20)) <= 1e-13);
  }
  SUBCASE("hand-evaluated convergents of the sec-tan stream at x = 1") {
    // 1 + 1/(1 - 1/(2 - 1/(3 + 1/(2 + 1/5)))) = 92/27, and with -1/2 below 5: 167/49.
    const auto h = eval_forward(flat, 1.0, 6);
    CHECK(h[0] == 2.0);
    CHECK(h[1] == 3.0);
    CHECK(h[2] == 3.5);
    CHECK(h[3] == doctest::Approx(3.4).epsilon(1e-15));
    CHECK(h[4] == doctest::Approx(92.0 / 27.0).epsilon(1e-15));
    CHECK(h[5] == doctest::Approx(167.0 / 49.0).epsilon(1e-15));
  }
  SUBCASE("Q vanishing is a pole") {
    CHECK_THROWS_AS(eval_forward(degenerate_spec(), 1.0, 3), DivisionNearZero);
  }
  SUBCASE("rescaling never changes a convergent") {
    for (double x : {0.3, 1.0, 1.4, -1.2}) {
      const auto plain = eval_forward(flat, x, 200);
      const auto forced = eval_forward(flat, x, 200, 1.0);
      for (std::size_t n = 0; n < plain.size(); ++n) CHECK(bit_equal(plain[n], forced[n]));
    }
    const auto plain = eval_forward(cot, 2.5, 300);
    const auto forced = eval_forward(cot, 2.5, 300, 8.0);
    for (std::size_t n = 0; n < plain.size(); ++n) CHECK(bit_equal(plain[n], forced[n]));
  }
}

TEST_CASE("eval_lentz") {
  const CfSpec cot = cot_cf();
  const CfSpec flat = sec_tan_flat_spec();

  const EvalReport r = eval_lentz(cot, 1.0, 1e-14, 100);
  CHECK(rel_err(r.value, 0.642092615934330703) <= 1e-13);
  CHECK(r.method == Method::lentz);
  CHECK(r.est_rel_err < 1e-14);

  const EvalReport zero = eval_lentz(flat, 0.0, 1e-14, 100);
  CHECK(zero.value == 1.0);
  CHECK(zero.depth <= 2);

  CHECK(std::fabs(eval_lentz(flat, 1.0, 1e-14, 200).value - 3.408223442335828) <= 1e-12);

  CHECK_THROWS_AS(eval_lentz(flat, 1.0, 1e-14, 3), NoConvergence);
  CHECK_THROWS_AS(eval_lentz(flat, 1.0, 0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(eval_lentz(flat, 1.0, 1e-10, 1), std::invalid_argument);
}

TEST_CASE("eval_adaptive") {
  const CfSpec cot = cot_cf();
  const CfSpec flat = sec_tan_flat_spec();

  const EvalReport half = eval_adaptive(cot, 0.5, 1e-12);
  CHECK(rel_err(half.value, ref_xcot(0.5)) <= 1e-12);
  CHECK(half.depth <= 64);
  CHECK(half.est_rel_err <= 1e-12);

  CHECK(rel_err(eval_adaptive(flat, -0.25, 1e-12).value, 0.776743102763349378) <= 1e-12);

  const EvalReport zero = eval_adaptive(flat, 0.0, 1e-12);
  CHECK(zero.value == 1.0);
  CHECK(zero.depth == 8);

  CHECK_THROWS_AS(eval_adaptive(flat, 1.4, 1e-12, 8), NoConvergence);
  CHECK_THROWS_AS(eval_adaptive(flat, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eval_adaptive(degenerate_spec(), 1.0, 1e-12), DivisionNearZero);
}

TEST_CASE("eval_fixed compares against depth - 1") {
  const CfSpec flat = sec_tan_flat_spec();
  const EvalReport r = eval_fixed(flat, 1.0, 6);
  CHECK(r.depth == 6);
  CHECK(r.est_rel_err ==
        doctest::Approx(std::fabs(167.0 / 49.0 - 92.0 / 27.0) / (167.0 / 49.0)).epsilon(1e-12));
  const EvalReport f = eval_fixed(flat, 1.0, 1, Method::forward);
  CHECK(f.value == 2.0);
  CHECK(f.est_rel_err == 0.5);  // |2 - 1| / 2
  CHECK_THROWS_AS(eval_fixed(flat, 1.0, 4, Method::lentz), std::invalid_argument);
}

TEST_CASE("true tail is at least as accurate as the plain convergent") {
  const CfSpec flat = sec_tan_flat_spec();
  for (double x : cfrac::test::sec_tan_grid()) {
    for (std::size_t depth : {2u, 4u, 6u, 9u, 12u}) {
      const double tail = continuation_value(flat, x, depth + 1, 2 * depth);
      const double want = ref_sec_tan(x);
      const double plain = std::fabs(eval_backward(flat, x, depth) - want);
      const double tailed = std::fabs(eval_backward(flat, x, depth, tail) - want);
      CHECK_MESSAGE(tailed <= plain + 4e-16 * std::fabs(want), "x = " << x << " depth " << depth);
    }
  }
}

TEST_CASE("continuation_value from 0 is the convergent") {
  const CfSpec cot = cot_cf();
  CHECK(bit_equal(continuation_value(cot, 0.9, 0, 11), eval_backward(cot, 0.9, 11)));
}

TEST_CASE("repeated evaluation is bit-identical") {
  const CfSpec flat = sec_tan_flat_spec();
  for (double x : {-1.3, 0.1, 0.77, 1.4}) {
    CHECK(bit_equal(eval_backward(flat, x, 37), eval_backward(flat, x, 37)));
    CHECK(bit_equal(eval_forward(flat, x, 37).back(), eval_forward(flat, x, 37).back()));
    CHECK(bit_equal(eval_lentz(flat, x, 1e-14, 500).value, eval_lentz(flat, x, 1e-14, 500).value));
    CHECK(bit_equal(eval_adaptive(flat, x, 1e-12).value, eval_adaptive(flat, x, 1e-12).value));
  }
}
