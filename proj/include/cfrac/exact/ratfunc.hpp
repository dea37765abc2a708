/* SPDX-License-Identifier: Apache-2.0 */

#ifndef CFRAC_EXACT_RATFUNC_HPP
#define CFRAC_EXACT_RATFUNC_HPP

#include <cstddef>
#include <string>

#include "cfrac/cf_core.hpp"
#include "cfrac/exact/poly.hpp"

namespace cfrac::exact {

class DivisionByZeroFunction : public Error {
 public:
  using Error::Error;
};

/// A continued fraction collapsed to a zero denominator polynomial.
class DegenerateConvergent : public Error {
 public:
  using Error::Error;
};

/// Largest depth convergent_exact accepts.
inline constexpr std::size_t kMaxExactDepth = 64;

/// num/den in lowest terms with a monic denominator. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZeroFunction when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Restores the invariants; a no-op on any RatFunc.
  RatFunc normalized() const { return RatFunc(num_, den_); }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

enum class RfOp { add, sub, mul, div };

RatFunc rf_arith(RfOp op, const RatFunc& f, const RatFunc& g);

inline RatFunc operator+(const RatFunc& f, const RatFunc& g) { return rf_arith(RfOp::add, f, g); }
inline RatFunc operator-(const RatFunc& f, const RatFunc& g) { return rf_arith(RfOp::sub, f, g); }
inline RatFunc operator*(const RatFunc& f, const RatFunc& g) { return rf_arith(RfOp::mul, f, g); }
inline RatFunc operator/(const RatFunc& f, const RatFunc& g) { return rf_arith(RfOp::div, f, g); }

/// f(c*x).
RatFunc rf_scale_arg(const RatFunc& f, const BigRat& c);

/// Exact b0 + a1/(b1 + ... + a_N/b_N), normalized after every step.
/// depth must lie in [1, kMaxExactDepth].
RatFunc convergent_exact(const CfSpec& cf, std::size_t depth);

}  // namespace cfrac::exact

#endif  // CFRAC_EXACT_RATFUNC_HPP
