/* SPDX-License-Identifier: Apache-2.0 */

// Exact checks of each step that takes the x*cot(x) fraction to the
// sec(x) + tan(x) fraction.
//
// The one-step identities (W -> E and E -> U) involve an indeterminate tail.
// They are checked by exact evaluation at random rational points (x, t):
// both sides are rational functions of low total degree in (x, t), so
// agreement at dozens of generic points leaves no room for a discrepancy.
// Whole truncations are compared as normalized rational functions in x.

#ifndef CFRAC_EXACT_VERIFY_HPP
#define CFRAC_EXACT_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cfrac/cf_core.hpp"
#include "cfrac/exact/ratfunc.hpp"
#include "cfrac/exact/series.hpp"

namespace cfrac::exact {

inline constexpr std::uint64_t kDefaultSeed = 20040229;
inline constexpr std::size_t kDefaultTrials = 64;

/// More than half of the random draws hit an exactly vanishing denominator.
class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

/// One side of an identity in (x, t). Returns nullopt when a denominator
/// vanishes at the point.
using PointMap = std::function<std::optional<BigRat>(const BigRat& x, const BigRat& t)>;

struct IdentityCheck {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;

  bool holds() const { return mismatches == 0; }
};

/// Rational with numerator in [-99, 99] and denominator in [1, 99].
BigRat random_small_rational(std::mt19937_64& gen);

/// Compares lhs and rhs at `trials` random rational points; a draw where
/// either side is undefined is skipped. Throws InsufficientSamples when more
/// than half the draws are skipped.
IdentityCheck check_identity(const PointMap& lhs, const PointMap& rhs, std::size_t trials,
                             std::uint64_t seed = kDefaultSeed);

// Single unrolled steps with the next symbol replaced by t.
PointMap w_step_minus_x(std::size_t k);  // (4k+1 - x^2/(4k+3 - x^2/(t + x))) - x
PointMap e_step(std::size_t k);          // 4k+1 - x/(1 - x/(4k+3 + x/(1 + x/t)))
PointMap e_step_half(std::size_t k);     // e_step(k) at x/2
PointMap u_step(std::size_t k);          // 4k+1 - x/(2 - x/(4k+3 + x/(2 + x/t)))

bool verify_eq4(std::size_t k, std::size_t trials = kDefaultTrials,
                std::uint64_t seed = kDefaultSeed);
bool verify_eq6(std::size_t k, std::size_t trials = kDefaultTrials,
                std::uint64_t seed = kDefaultSeed);

/// W_0 unrolled through W_m with x^2/W_{m+1} dropped.
RatFunc nested_w_exact(std::size_t m);

/// Depth-(2m+1) convergent of `cot` equals nested_w_exact(m).
bool verify_w_pairing(std::size_t m, const CfSpec& cot);
bool verify_w_pairing(std::size_t m);

/// 1 + x/U_0 with U_0 unrolled through level m. Within level m the nesting is
///   U_m = 4m+1 - x/(2 - x/(4m+3 + x/(2 + x/U_{m+1})))
/// and `cut` in [1, 4] keeps that many of its partial denominators
/// (4m+1, 2, 4m+3, 2), dropping the fraction below the last one kept.
RatFunc nested_sec_tan_exact(std::size_t m, std::size_t cut);

/// The flattened stream at depth 4m+j equals nested_sec_tan_exact(m, j),
/// checked for every j in [1, 4].
bool verify_flatten(std::size_t m, const CfSpec& flat);
bool verify_flatten(std::size_t m);

/// Depth-(2*order+3) convergent of `flat` has Maclaurin coefficients
/// zigzag(n)/n! for n = 0..order.
bool verify_series(std::size_t order, const CfSpec& flat);
bool verify_series(std::size_t order);

// Corrupted counterparts used to show that each check can fail.
PointMap e_step_sign_flipped(std::size_t k);  // 1 + x/(4k+3 ...) in place of 1 - x/(...)
PointMap u_step_wrong_constant(std::size_t k);  // outer 2 replaced by 3
CfSpec cot_cf_corrupted();       // a_2 = +x^2
CfSpec sec_tan_flat_corrupted(); // a_3 = +x

enum class Suite { eq4, eq6, pairing, flatten, series };

std::string_view to_string(Suite s);

struct VerifyOptions {
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_level = 5;     // eq4 and eq6 check k = 0..max_level
  std::size_t max_pairing = 8;   // pairing checks m = 0..max_pairing
  std::size_t max_flatten = 3;   // flatten checks m = 0..max_flatten
  std::size_t series_order = 12;
  /// Run against a deliberately corrupted variant of each identity, which
  /// must make the suite fail.
  bool mutant = false;
};

struct SuiteResult {
  Suite suite;
  bool passed = false;
  std::string detail;
};

SuiteResult run_suite(Suite suite, const VerifyOptions& opts = {});

}  // namespace cfrac::exact

#endif  // CFRAC_EXACT_VERIFY_HPP
