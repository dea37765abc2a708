/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/exact/series.hpp"

#include <algorithm>

namespace cfrac::exact {

SeriesCoeffs series_from_ratfunc(const RatFunc& f, std::size_t order) {
  const BigRat d0 = f.den().coeff(0);
  if (d0 == 0) throw PoleAtOrigin("denominator vanishes at x = 0: " + f.to_string());

  // den * c = num  =>  c_n = (num_n - sum_{j=1..n} den_j c_{n-j}) / den_0
  SeriesCoeffs out;
  out.coeffs.reserve(order + 1);
  const auto& den = f.den().coeffs();
  for (std::size_t n = 0; n <= order; ++n) {
    BigRat acc = f.num().coeff(n);
    const std::size_t upto = std::min(n, den.size() - 1);
    for (std::size_t j = 1; j <= upto; ++j) acc -= den[j] * out.coeffs[n - j];
    out.coeffs.push_back(acc / d0);
  }
  return out;
}

SeriesCoeffs truncated_product(const SeriesCoeffs& a, const SeriesCoeffs& b) {
  const std::size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  SeriesCoeffs out{std::vector<BigRat>(len, BigRat(0))};
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; i + j < len; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

}  // namespace cfrac::exact
