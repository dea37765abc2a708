/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/exact/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfrac::exact {

BigRat to_bigrat(const Coeff& c) {
  BigRat r(BigInt(static_cast<long>(c.num())), BigInt(static_cast<long>(c.den())));
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Poly::Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const BigRat& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(const PolyTerm& t)
    : Poly(std::vector<BigRat>{to_bigrat(t.c0), to_bigrat(t.c1), to_bigrat(t.c2)}) {}

Poly Poly::x() { return Poly(std::vector<BigRat>{0, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat Poly::operator()(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::scale_arg(const BigRat& c) const {
  std::vector<BigRat> out(coeffs_);
  BigRat power = 1;
  for (auto& v : out) {
    v *= power;
    power *= c;
  }
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly out(*this);
  const BigRat lead = leading();
  for (auto& v : out.coeffs_) v /= lead;
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRat> out(coeffs_.size() + o.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRat& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigRat mag = abs(c);
    if (mag != 1 || i == 0) out += exact::to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly(), num};

  std::vector<BigRat> rem(num.coeffs());
  std::vector<BigRat> quot(num.coeffs().size() - den.coeffs().size() + 1, BigRat(0));
  const std::size_t dn = den.coeffs().size();
  const BigRat& lead = den.leading();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigRat q = rem[i + dn - 1] / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[i + j] -= q * den.coeffs()[j];
  }
  rem.resize(dn - 1);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace cfrac::exact
