/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/exact/ratfunc.hpp"

#include <stdexcept>

namespace cfrac::exact {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const BigRat lead = den.leading();
  num_ = num * BigRat(1 / lead);
  den_ = den.monic();
}

std::string RatFunc::to_string() const {
  if (den_ == Poly(1)) return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc rf_arith(RfOp op, const RatFunc& f, const RatFunc& g) {
  switch (op) {
    case RfOp::add:
      return RatFunc(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
    case RfOp::sub:
      return RatFunc(f.num() * g.den() - g.num() * f.den(), f.den() * g.den());
    case RfOp::mul:
      return RatFunc(f.num() * g.num(), f.den() * g.den());
    case RfOp::div:
      if (g.is_zero()) throw DivisionByZeroFunction("division by the zero rational function");
      return RatFunc(f.num() * g.den(), f.den() * g.num());
  }
  throw std::invalid_argument("unknown RfOp");
}

RatFunc rf_scale_arg(const RatFunc& f, const BigRat& c) {
  if (c == 0) {
    // f(0*x) is the constant f(0).
    const BigRat d0 = f.den().coeff(0);
    if (d0 == 0) throw DivisionByZeroFunction("f(0) is undefined");
    return RatFunc(Poly(BigRat(f.num().coeff(0) / d0)));
  }
  return RatFunc(f.num().scale_arg(c), f.den().scale_arg(c));
}

RatFunc convergent_exact(const CfSpec& cf, std::size_t depth) {
  if (depth == 0 || depth > kMaxExactDepth) {
    throw std::invalid_argument("convergent_exact: depth must lie in [1, " +
                                std::to_string(kMaxExactDepth) + "]");
  }
  RatFunc t(Poly(cf.terms(depth).b));
  for (std::size_t k = depth; k > 0; --k) {
    if (t.is_zero()) {
      throw DegenerateConvergent(cf.name + ": convergent collapses at depth " +
                                 std::to_string(depth) + " (index " + std::to_string(k) + ")");
    }
    const Poly b = k - 1 == 0 ? Poly(cf.leading) : Poly(cf.terms(k - 1).b);
    t = RatFunc(b) + RatFunc(Poly(cf.terms(k).a)) / t;
  }
  return t;
}

}  // namespace cfrac::exact
