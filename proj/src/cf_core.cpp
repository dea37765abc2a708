/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/cf_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cfrac {

namespace {

void check_divisor(double d, const char* where, double x) {
  if (!(std::fabs(d) >= kPoleThreshold)) {
    std::ostringstream os;
    os << "DivisionNearZero: " << where << " denominator " << d << " at x = " << x;
    throw DivisionNearZero(os.str());
  }
}

void append_monomial(std::string& out, const Coeff& c, std::string_view var) {
  if (c.is_zero()) return;
  const bool negative = c.num() < 0;
  const std::int64_t mag = negative ? -c.num() : c.num();
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const bool unit = mag == 1 && c.den() == 1;
  if (!unit || var.empty()) {
    out += std::to_string(mag);
    if (c.den() != 1) out += "/" + std::to_string(c.den());
  }
  out += var;
}

}  // namespace

Coeff::Coeff(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Coeff: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

double PolyTerm::at(double x) const {
  return c0.to_double() + x * (c1.to_double() + x * c2.to_double());
}

std::string PolyTerm::to_string() const {
  std::string out;
  append_monomial(out, c2, "x^2");
  append_monomial(out, c1, "x");
  append_monomial(out, c0, "");
  return out.empty() ? "0" : out;
}

TermPair CfSpec::terms(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("term index must be >= 1");
  TermPair t = termgen(k);
  if (t.a.is_zero()) {
    throw std::invalid_argument(name + ": zero partial numerator at k = " + std::to_string(k));
  }
  return t;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::backward: return "backward";
    case Method::forward: return "forward";
    case Method::lentz: return "lentz";
  }
  return "unknown";
}

double relative_change(double current, double previous) {
  return std::fabs(current - previous) / std::max(std::fabs(current), kPoleThreshold);
}

std::pair<double, double> term_at(const CfSpec& cf, std::size_t k, double x) {
  const TermPair t = cf.terms(k);
  return {t.a.at(x), t.b.at(x)};
}

double continuation_value(const CfSpec& cf, double x, std::size_t start, std::size_t depth) {
  const std::size_t last = start + depth;
  double t = last == 0 ? cf.leading.at(x) : term_at(cf, last, x).second;
  for (std::size_t k = last; k > start; --k) {
    check_divisor(t, "backward recurrence", x);
    const double a = term_at(cf, k, x).first;
    const double b = k - 1 == 0 ? cf.leading.at(x) : term_at(cf, k - 1, x).second;
    t = b + a / t;
  }
  return t;
}

double eval_backward(const CfSpec& cf, double x, std::size_t depth, std::optional<double> tail) {
  if (depth == 0) throw std::invalid_argument("eval_backward: depth must be >= 1");
  if (!tail) return continuation_value(cf, x, 0, depth);

  check_divisor(*tail, "tail", x);
  double t = term_at(cf, depth, x).second + term_at(cf, depth + 1, x).first / *tail;
  for (std::size_t k = depth; k > 0; --k) {
    check_divisor(t, "backward recurrence", x);
    const double a = term_at(cf, k, x).first;
    const double b = k - 1 == 0 ? cf.leading.at(x) : term_at(cf, k - 1, x).second;
    t = b + a / t;
  }
  return t;
}

std::vector<double> eval_forward(const CfSpec& cf, double x, std::size_t depth,
                                 double rescale_threshold) {
  if (depth == 0) throw std::invalid_argument("eval_forward: depth must be >= 1");
  std::vector<double> h;
  h.reserve(depth);

  double p_prev = 1.0, p = cf.leading.at(x);
  double q_prev = 0.0, q = 1.0;
  for (std::size_t n = 1; n <= depth; ++n) {
    const auto [a, b] = term_at(cf, n, x);
    const double p_next = b * p + a * p_prev;
    const double q_next = b * q + a * q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;

    const double big = std::max(std::fabs(p), std::fabs(q));
    if (big > rescale_threshold && std::isfinite(big)) {
      const int e = std::ilogb(big);
      p = std::ldexp(p, -e);
      q = std::ldexp(q, -e);
      p_prev = std::ldexp(p_prev, -e);
      q_prev = std::ldexp(q_prev, -e);
    }
    check_divisor(q, "forward recurrence Q", x);
    h.push_back(p / q);
  }
  return h;
}

EvalReport eval_lentz(const CfSpec& cf, double x, double eps, std::size_t max_terms) {
  if (!(eps > 0.0)) throw std::invalid_argument("eval_lentz: eps must be positive");
  if (max_terms < 2) throw std::invalid_argument("eval_lentz: max_terms must be >= 2");

  double f = cf.leading.at(x);
  if (std::fabs(f) < kTinyGuard) f = kTinyGuard;
  double c = f;
  double d = 0.0;
  for (std::size_t j = 1; j <= max_terms; ++j) {
    const auto [a, b] = term_at(cf, j, x);
    d = b + a * d;
    if (std::fabs(d) < kTinyGuard) d = kTinyGuard;
    c = b + a / c;
    if (std::fabs(c) < kTinyGuard) c = kTinyGuard;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    const double change = std::fabs(delta - 1.0);
    if (change < eps) return {f, j, change, Method::lentz};
  }
  std::ostringstream os;
  os << "NoConvergence: Lentz iteration for " << cf.name << " at x = " << x << " exceeded "
     << max_terms << " terms";
  throw NoConvergence(os.str());
}

EvalReport eval_fixed(const CfSpec& cf, double x, std::size_t depth, Method method) {
  if (depth == 0) throw std::invalid_argument("eval_fixed: depth must be >= 1");
  switch (method) {
    case Method::backward: {
      const double v = eval_backward(cf, x, depth);
      const double prev = depth == 1 ? cf.leading.at(x) : eval_backward(cf, x, depth - 1);
      return {v, depth, relative_change(v, prev), Method::backward};
    }
    case Method::forward: {
      const auto h = eval_forward(cf, x, depth);
      const double prev = depth == 1 ? cf.leading.at(x) : h[depth - 2];
      return {h.back(), depth, relative_change(h.back(), prev), Method::forward};
    }
    case Method::lentz:
      break;
  }
  throw std::invalid_argument("eval_fixed: Lentz has no fixed-depth mode");
}

EvalReport eval_adaptive(const CfSpec& cf, double x, double target_rel_err, std::size_t max_depth) {
  if (!(target_rel_err > 0.0)) {
    throw std::invalid_argument("eval_adaptive: target_rel_err must be positive");
  }
  double previous = eval_backward(cf, x, kAdaptiveStartDepth / 2);
  for (std::size_t depth = kAdaptiveStartDepth; depth <= max_depth; depth *= 2) {
    const double value = eval_backward(cf, x, depth);
    const double change = relative_change(value, previous);
    if (change <= target_rel_err) return {value, depth, change, Method::backward};
    previous = value;
  }
  std::ostringstream os;
  os << "NoConvergence: adaptive evaluation of " << cf.name << " at x = " << x
     << " did not reach relative change " << target_rel_err << " by depth " << max_depth;
  throw NoConvergence(os.str());
}

}  // namespace cfrac
