/* SPDX-License-Identifier: Apache-2.0 */

// Continued fractions for x*cot(x) and sec(x) + tan(x).
//
// x*cot(x) has the classical expansion 1 - x^2/(3 - x^2/(5 - x^2/(7 - ...))).
// Grouping its terms in pairs gives the recursion
//
//     W_k = 4k+1 - x^2/(4k+3 - x^2/W_{k+1}),          x*cot(x) = W_0,
//
// and E_k(x) = W_k - x satisfies
//
//     E_k = 4k+1 - x/(1 - x/(4k+3 + x/(1 + x/E_{k+1}))).
//
// With U_k(x) = E_k(x/2),
//
//     U_k = 4k+1 - x/(2 - x/(4k+3 + x/(2 + x/U_{k+1}))),
//     sec(x) + tan(x) = 1 + x/U_0(x).
//
// Flattening the last line into a single stream gives b0 = 1 and, for k >= 1,
// b_k = k (k odd) or 2 (k even), a_k = +x (k mod 4 in {0, 1}) or -x otherwise.

#ifndef CFRAC_EXPANSIONS_HPP
#define CFRAC_EXPANSIONS_HPP

#include <cstddef>

#include "cfrac/cf_core.hpp"

namespace cfrac {

/// b0 = 1, a_k = -x^2, b_k = 2k+1. Named "xcot".
CfSpec cot_cf();

/// Single-stream form of 1 + x/U_0(x). Named "sec-tan".
CfSpec sec_tan_flat_spec();

enum class NestedKind { W, E, U };

/// A symbol W_k, E_k or U_k of the nested recursions.
struct NestedForm {
  NestedKind form = NestedKind::W;
  std::size_t k = 0;
};

/// How the innermost W/E/U of a truncated recursion is closed off.
class Tail {
 public:
  enum class Kind { dropped, leading, given };

  /// The innermost term containing W_{K+1} (resp. E, U) is omitted.
  static Tail dropped() { return Tail(Kind::dropped, 0.0); }
  /// The innermost symbol is replaced by its leading behaviour:
  /// W_K ~ 4K+1, E_K ~ 4K+1 - x, U_K ~ 4K+1 - x/2.
  static Tail leading() { return Tail(Kind::leading, 0.0); }
  /// The innermost symbol is replaced by the given value.
  static Tail given(double value) { return Tail(Kind::given, value); }

  Kind kind() const { return kind_; }
  double value() const { return value_; }

  /// Closing value for form.k at x, or nullopt when the term is dropped.
  std::optional<double> resolve(NestedForm at, double x) const;

 private:
  Tail(Kind kind, double value) : kind_(kind), value_(value) {}
  Kind kind_;
  double value_;
};

/// W_k unrolled through index k + pairs; W_{k+pairs+1} is closed by tail.
double w_value(std::size_t k, double x, std::size_t pairs, Tail tail = Tail::dropped());

/// E_k unrolled through index k + levels.
double e_value(std::size_t k, double x, std::size_t levels, Tail tail = Tail::dropped());

/// U_k unrolled through index k + levels. Closed by the leading estimate
/// 4K+1 - x/2 unless told otherwise.
double u_value(std::size_t k, double x, std::size_t levels, Tail tail = Tail::leading());

/// sec(x) + tan(x) = 1 + x/U_0(x), deepening U_0 over 1, 2, 4, ... levels
/// until successive results agree within target_rel_err. The report's depth
/// is the number of U levels unrolled past U_0.
///
/// Throws DivisionNearZero when U_0 vanishes (a pole of sec + tan) and
/// NoConvergence when more than max_levels levels would be needed.
EvalReport sec_tan(double x, double target_rel_err,
                   std::size_t max_levels = kAdaptiveMaxDepth / 4);

}  // namespace cfrac

#endif  // CFRAC_EXPANSIONS_HPP
