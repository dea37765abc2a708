/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/expansions.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace cfrac {

namespace {

double divide(double num, double den, double x) {
  if (!(std::fabs(den) >= kPoleThreshold)) {
    std::ostringstream os;
    os << "DivisionNearZero: nested recursion denominator " << den << " at x = " << x;
    throw DivisionNearZero(os.str());
  }
  return num / den;
}

double odd_lead(std::size_t k) { return 4.0 * static_cast<double>(k) + 1.0; }
double odd_mid(std::size_t k) { return 4.0 * static_cast<double>(k) + 3.0; }

}  // namespace

CfSpec cot_cf() {
  return {"xcot", PolyTerm::constant(1), [](std::size_t k) {
            return TermPair{PolyTerm::quadratic(-1),
                            PolyTerm::constant(2 * static_cast<std::int64_t>(k) + 1)};
          }};
}

CfSpec sec_tan_flat_spec() {
  return {"sec-tan", PolyTerm::constant(1), [](std::size_t k) {
            const auto kk = static_cast<std::int64_t>(k);
            const std::int64_t sign = (k % 4 == 0 || k % 4 == 1) ? 1 : -1;
            return TermPair{PolyTerm::linear(sign), PolyTerm::constant(k % 2 ? kk : 2)};
          }};
}

std::optional<double> Tail::resolve(NestedForm at, double x) const {
  switch (kind_) {
    case Kind::dropped:
      return std::nullopt;
    case Kind::given:
      return value_;
    case Kind::leading:
      switch (at.form) {
        case NestedKind::W: return odd_lead(at.k);
        case NestedKind::E: return odd_lead(at.k) - x;
        case NestedKind::U: return odd_lead(at.k) - x / 2.0;
      }
  }
  return std::nullopt;
}

double w_value(std::size_t k, double x, std::size_t pairs, Tail tail) {
  const std::size_t last = k + pairs;
  const double x2 = x * x;
  const auto inner = tail.resolve({NestedKind::W, last + 1}, x);
  // x^2/W_{last+1}
  double frac = inner ? divide(x2, *inner, x) : 0.0;
  double w = 0.0;
  for (std::size_t j = last + 1; j-- > k;) {
    w = odd_lead(j) - divide(x2, odd_mid(j) - frac, x);
    if (j > k) frac = divide(x2, w, x);
  }
  return w;
}

double e_value(std::size_t k, double x, std::size_t levels, Tail tail) {
  const std::size_t last = k + levels;
  const auto inner = tail.resolve({NestedKind::E, last + 1}, x);
  double frac = inner ? divide(x, *inner, x) : 0.0;  // x/E_{last+1}
  double e = 0.0;
  for (std::size_t j = last + 1; j-- > k;) {
    const double d3 = odd_mid(j) + divide(x, 1.0 + frac, x);
    const double d2 = 1.0 - divide(x, d3, x);
    e = odd_lead(j) - divide(x, d2, x);
    if (j > k) frac = divide(x, e, x);
  }
  return e;
}

double u_value(std::size_t k, double x, std::size_t levels, Tail tail) {
  const std::size_t last = k + levels;
  const auto inner = tail.resolve({NestedKind::U, last + 1}, x);
  double frac = inner ? divide(x, *inner, x) : 0.0;  // x/U_{last+1}
  double u = 0.0;
  for (std::size_t j = last + 1; j-- > k;) {
    const double d3 = odd_mid(j) + divide(x, 2.0 + frac, x);
    const double d2 = 2.0 - divide(x, d3, x);
    u = odd_lead(j) - divide(x, d2, x);
    if (j > k) frac = divide(x, u, x);
  }
  return u;
}

EvalReport sec_tan(double x, double target_rel_err, std::size_t max_levels) {
  if (!(target_rel_err > 0.0)) {
    throw std::invalid_argument("sec_tan: target_rel_err must be positive");
  }
  auto at_levels = [x](std::size_t levels) {
    const double u0 = u_value(0, x, levels);
    return 1.0 + divide(x, u0, x);
  };
  double previous = at_levels(1);
  for (std::size_t levels = 2; levels <= max_levels; levels *= 2) {
    const double value = at_levels(levels);
    const double change = relative_change(value, previous);
    if (change <= target_rel_err) return {value, levels, change, Method::backward};
    previous = value;
  }
  std::ostringstream os;
  os << "NoConvergence: sec_tan at x = " << x << " did not reach relative change "
     << target_rel_err << " within " << max_levels << " levels";
  throw NoConvergence(os.str());
}

}  // namespace cfrac
