/* SPDX-License-Identifier: Apache-2.0 */

#ifndef CFRAC_EXACT_POLY_HPP
#define CFRAC_EXACT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cfrac/cf_core.hpp"

namespace cfrac::exact {

/// Arbitrary-precision rational; always canonical (den > 0, lowest terms).
using BigRat = mpq_class;
using BigInt = mpz_class;

BigRat to_bigrat(const Coeff& c);

/// "p/q", or "p" when q == 1.
std::string to_string(const BigRat& r);

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
/// The coefficient list never ends in a zero; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs);
  Poly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(const PolyTerm& t);

  static Poly x();

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigRat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }
  const BigRat& leading() const { return coeffs_.back(); }

  BigRat operator()(const BigRat& x) const;
  /// p(c*x).
  Poly scale_arg(const BigRat& c) const;
  /// Divides through by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigRat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const BigRat& c) { return a *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);

}  // namespace cfrac::exact

#endif  // CFRAC_EXACT_POLY_HPP
