/* SPDX-License-Identifier: Apache-2.0 */

// Generalized continued fractions
//
//     b0 + a1/(b1 + a2/(b2 + a3/(b3 + ...)))
//
// whose partial numerators and denominators are polynomials of degree <= 2
// in x with rational coefficients, plus three floating-point evaluation
// strategies: backward recurrence (optionally closed with a tail estimate),
// the forward three-term recurrence, and the modified Lentz algorithm.

#ifndef CFRAC_CF_CORE_HPP
#define CFRAC_CF_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfrac {

/// Magnitude below which Lentz intermediates are clamped.
inline constexpr double kTinyGuard = 1e-30;
/// Magnitude below which a divisor is treated as a pole of the approximant.
inline constexpr double kPoleThreshold = 1e-300;
/// Forward recurrence rescales P and Q once either exceeds this magnitude.
inline constexpr double kRescaleThreshold = 1e150;
inline constexpr std::size_t kAdaptiveStartDepth = 8;
inline constexpr std::size_t kAdaptiveMaxDepth = 4096;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An intermediate denominator vanished (|d| < kPoleThreshold).
class DivisionNearZero : public Error {
 public:
  using Error::Error;
};

/// An iterative evaluation hit its term or depth cap before converging.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Exact rational with 64-bit parts, kept in lowest terms with den > 0.
/// Only used for the small coefficients of partial numerators/denominators.
class Coeff {
 public:
  constexpr Coeff() = default;
  Coeff(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Coeff&, const Coeff&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// c0 + c1*x + c2*x^2.
struct PolyTerm {
  Coeff c0;
  Coeff c1;
  Coeff c2;

  static PolyTerm constant(Coeff c) { return {c, 0, 0}; }
  static PolyTerm linear(Coeff c) { return {0, c, 0}; }
  static PolyTerm quadratic(Coeff c) { return {0, 0, c}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  double at(double x) const;
  /// Human-readable form such as "-x^2", "x", "-1/2x + 3".
  std::string to_string() const;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// (partial numerator, partial denominator) at one index.
struct TermPair {
  PolyTerm a;
  PolyTerm b;

  friend bool operator==(const TermPair&, const TermPair&) = default;
};

/// A named continued fraction: leading term b0 and a pure generator
/// k -> (a_k, b_k) defined for every k >= 1.
struct CfSpec {
  std::string name;
  PolyTerm leading;
  std::function<TermPair(std::size_t)> termgen;

  /// Throws std::invalid_argument for k == 0 or a zero partial numerator.
  TermPair terms(std::size_t k) const;
};

enum class Method { backward, forward, lentz };

std::string_view to_string(Method m);

struct EvalReport {
  double value = 0.0;
  std::size_t depth = 0;
  double est_rel_err = 0.0;
  Method method = Method::backward;
};

/// |current - previous| / max(|current|, kPoleThreshold).
double relative_change(double current, double previous);

/// (a_k(x), b_k(x)) in double precision.
std::pair<double, double> term_at(const CfSpec& cf, std::size_t k, double x);

/// N-th convergent by backward recurrence. With a tail t, the innermost
/// denominator becomes b_N + a_{N+1}/t, where t estimates the value of the
/// sub-fraction starting at index N+1.
double eval_backward(const CfSpec& cf, double x, std::size_t depth,
                     std::optional<double> tail = std::nullopt);

/// Value of the sub-fraction b_start + a_{start+1}/(b_{start+1} + ...)
/// truncated after `depth` further terms.
double continuation_value(const CfSpec& cf, double x, std::size_t start, std::size_t depth);

/// Convergents h_1..h_N by the forward recurrence
///   P_n = b_n P_{n-1} + a_n P_{n-2},  Q_n = b_n Q_{n-1} + a_n Q_{n-2}.
/// P and Q are rescaled by a power of two whenever either exceeds
/// rescale_threshold, so the reported h_n are unaffected bit for bit.
std::vector<double> eval_forward(const CfSpec& cf, double x, std::size_t depth,
                                 double rescale_threshold = kRescaleThreshold);

/// Modified Lentz; stops once |Delta_n - 1| < eps.
EvalReport eval_lentz(const CfSpec& cf, double x, double eps, std::size_t max_terms);

/// Backward recurrence at a fixed depth; the error estimate compares against
/// depth - 1 (depth 0 being b0 alone).
EvalReport eval_fixed(const CfSpec& cf, double x, std::size_t depth,
                      Method method = Method::backward);

/// Backward recurrence at depths 8, 16, 32, ... until two successive values
/// agree within target_rel_err. The first probe compares depth 8 with depth 4.
EvalReport eval_adaptive(const CfSpec& cf, double x, double target_rel_err,
                         std::size_t max_depth = kAdaptiveMaxDepth);

}  // namespace cfrac

#endif  // CFRAC_CF_CORE_HPP
