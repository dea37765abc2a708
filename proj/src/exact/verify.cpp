/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/exact/verify.hpp"

#include <sstream>

#include "cfrac/expansions.hpp"

namespace cfrac::exact {

namespace {

std::optional<BigRat> quotient(const BigRat& num, const BigRat& den) {
  if (den == 0) return std::nullopt;
  return BigRat(num / den);
}

BigRat lead(std::size_t k) { return BigRat(4 * static_cast<long>(k) + 1); }
BigRat mid(std::size_t k) { return BigRat(4 * static_cast<long>(k) + 3); }

// 4k+1 - x/(outer - sign*x/(4k+3 + x/(inner + x/t))), the common shape of the
// E and U steps (outer = inner = 1 or 2, sign = +1).
std::optional<BigRat> quad_step(std::size_t k, long outer, long inner, long sign, const BigRat& x,
                                const BigRat& t) {
  const auto r4 = quotient(x, t);
  if (!r4) return std::nullopt;
  const auto r3 = quotient(x, inner + *r4);
  if (!r3) return std::nullopt;
  const auto r2 = quotient(x, mid(k) + *r3);
  if (!r2) return std::nullopt;
  const auto r1 = quotient(x, outer - sign * *r2);
  if (!r1) return std::nullopt;
  return BigRat(lead(k) - *r1);
}

RatFunc rf_const(const BigRat& c) { return RatFunc(Poly(c)); }

}  // namespace

BigRat random_small_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 99);
  BigRat r(BigInt(num(gen)), BigInt(den(gen)));
  r.canonicalize();
  return r;
}

IdentityCheck check_identity(const PointMap& lhs, const PointMap& rhs, std::size_t trials,
                             std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("check_identity: trials must be >= 1");
  std::mt19937_64 gen(seed);
  IdentityCheck out;
  for (std::size_t i = 0; i < trials; ++i) {
    const BigRat x = random_small_rational(gen);
    const BigRat t = random_small_rational(gen);
    const auto l = lhs(x, t);
    const auto r = rhs(x, t);
    if (!l || !r) {
      ++out.skipped;
      continue;
    }
    ++out.evaluated;
    if (*l != *r) ++out.mismatches;
  }
  if (2 * out.skipped > trials) {
    throw InsufficientSamples("InsufficientSamples: " + std::to_string(out.skipped) + " of " +
                              std::to_string(trials) + " draws skipped; choose another seed");
  }
  return out;
}

PointMap w_step_minus_x(std::size_t k) {
  return [k](const BigRat& x, const BigRat& t) -> std::optional<BigRat> {
    const BigRat x2 = x * x;
    const auto r2 = quotient(x2, t + x);
    if (!r2) return std::nullopt;
    const auto r1 = quotient(x2, mid(k) - *r2);
    if (!r1) return std::nullopt;
    return BigRat(lead(k) - *r1 - x);
  };
}

PointMap e_step(std::size_t k) {
  return [k](const BigRat& x, const BigRat& t) { return quad_step(k, 1, 1, 1, x, t); };
}

PointMap e_step_half(std::size_t k) {
  return [k](const BigRat& x, const BigRat& t) { return quad_step(k, 1, 1, 1, BigRat(x / 2), t); };
}

PointMap u_step(std::size_t k) {
  return [k](const BigRat& x, const BigRat& t) { return quad_step(k, 2, 2, 1, x, t); };
}

PointMap e_step_sign_flipped(std::size_t k) {
  return [k](const BigRat& x, const BigRat& t) { return quad_step(k, 1, 1, -1, x, t); };
}

PointMap u_step_wrong_constant(std::size_t k) {
  return [k](const BigRat& x, const BigRat& t) { return quad_step(k, 3, 2, 1, x, t); };
}

CfSpec cot_cf_corrupted() {
  CfSpec cf = cot_cf();
  cf.name = "xcot-corrupted";
  cf.termgen = [gen = cf.termgen](std::size_t k) {
    TermPair t = gen(k);
    if (k == 2) t.a = PolyTerm::quadratic(1);
    return t;
  };
  return cf;
}

CfSpec sec_tan_flat_corrupted() {
  CfSpec cf = sec_tan_flat_spec();
  cf.name = "sec-tan-corrupted";
  cf.termgen = [gen = cf.termgen](std::size_t k) {
    TermPair t = gen(k);
    if (k == 3) t.a = PolyTerm::linear(1);
    return t;
  };
  return cf;
}

bool verify_eq4(std::size_t k, std::size_t trials, std::uint64_t seed) {
  return check_identity(w_step_minus_x(k), e_step(k), trials, seed).holds();
}

bool verify_eq6(std::size_t k, std::size_t trials, std::uint64_t seed) {
  return check_identity(e_step_half(k), u_step(k), trials, seed).holds();
}

RatFunc nested_w_exact(std::size_t m) {
  const RatFunc x2 = RatFunc::x() * RatFunc::x();
  RatFunc w = rf_const(lead(m)) - x2 / rf_const(mid(m));
  for (std::size_t j = m; j-- > 0;) {
    w = rf_const(lead(j)) - x2 / (rf_const(mid(j)) - x2 / w);
  }
  return w;
}

bool verify_w_pairing(std::size_t m, const CfSpec& cot) {
  return convergent_exact(cot, 2 * m + 1) == nested_w_exact(m);
}

bool verify_w_pairing(std::size_t m) { return verify_w_pairing(m, cot_cf()); }

RatFunc nested_sec_tan_exact(std::size_t m, std::size_t cut) {
  if (cut < 1 || cut > 4) throw std::invalid_argument("nested_sec_tan_exact: cut must be in [1, 4]");
  const RatFunc x = RatFunc::x();
  const RatFunc two(2);

  RatFunc u;
  switch (cut) {
    case 1: u = rf_const(lead(m)); break;
    case 2: u = rf_const(lead(m)) - x / two; break;
    case 3: u = rf_const(lead(m)) - x / (two - x / rf_const(mid(m))); break;
    case 4: u = rf_const(lead(m)) - x / (two - x / (rf_const(mid(m)) + x / two)); break;
  }
  for (std::size_t j = m; j-- > 0;) {
    u = rf_const(lead(j)) - x / (two - x / (rf_const(mid(j)) + x / (two + x / u)));
  }
  return RatFunc(1) + x / u;
}

bool verify_flatten(std::size_t m, const CfSpec& flat) {
  for (std::size_t cut = 1; cut <= 4; ++cut) {
    if (convergent_exact(flat, 4 * m + cut) != nested_sec_tan_exact(m, cut)) return false;
  }
  return true;
}

bool verify_flatten(std::size_t m) { return verify_flatten(m, sec_tan_flat_spec()); }

bool verify_series(std::size_t order, const CfSpec& flat) {
  const SeriesCoeffs s = series_from_ratfunc(convergent_exact(flat, 2 * order + 3), order);
  for (std::size_t n = 0; n <= order; ++n) {
    BigRat expected(zigzag(n), factorial(n));
    expected.canonicalize();
    if (s.coeffs[n] != expected) return false;
  }
  return true;
}

bool verify_series(std::size_t order) { return verify_series(order, sec_tan_flat_spec()); }

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::eq4: return "eq4";
    case Suite::eq6: return "eq6";
    case Suite::pairing: return "pairing";
    case Suite::flatten: return "flatten";
    case Suite::series: return "series";
  }
  return "unknown";
}

SuiteResult run_suite(Suite suite, const VerifyOptions& opts) {
  SuiteResult out{suite, true, {}};
  std::ostringstream detail;
  auto fail_at = [&](const char* what, std::size_t i) {
    if (out.passed) detail << "; first failure at " << what << " = " << i;
    out.passed = false;
  };

  const CfSpec flat = opts.mutant ? sec_tan_flat_corrupted() : sec_tan_flat_spec();
  if (opts.mutant) detail << "mutant; ";

  switch (suite) {
    case Suite::eq4:
    case Suite::eq6: {
      detail << "k = 0.." << opts.max_level << ", " << opts.trials << " trials each, seed "
             << opts.seed;
      for (std::size_t k = 0; k <= opts.max_level; ++k) {
        const PointMap lhs = suite == Suite::eq4 ? w_step_minus_x(k) : e_step_half(k);
        PointMap rhs;
        if (suite == Suite::eq4) {
          rhs = opts.mutant ? e_step_sign_flipped(k) : e_step(k);
        } else {
          rhs = opts.mutant ? u_step_wrong_constant(k) : u_step(k);
        }
        if (!check_identity(lhs, rhs, opts.trials, opts.seed).holds()) fail_at("k", k);
      }
      break;
    }
    case Suite::pairing: {
      const CfSpec cot = opts.mutant ? cot_cf_corrupted() : cot_cf();
      detail << "m = 0.." << opts.max_pairing;
      for (std::size_t m = 0; m <= opts.max_pairing; ++m) {
        if (!verify_w_pairing(m, cot)) fail_at("m", m);
      }
      break;
    }
    case Suite::flatten:
      detail << "m = 0.." << opts.max_flatten << ", depths 1.." << 4 * opts.max_flatten + 4;
      for (std::size_t m = 0; m <= opts.max_flatten; ++m) {
        if (!verify_flatten(m, flat)) fail_at("m", m);
      }
      break;
    case Suite::series:
      detail << "order " << opts.series_order << ", convergent depth "
             << 2 * opts.series_order + 3;
      if (!verify_series(opts.series_order, flat)) fail_at("order", opts.series_order);
      break;
  }
  out.detail = detail.str();
  return out;
}

}  // namespace cfrac::exact
