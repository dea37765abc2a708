/* SPDX-License-Identifier: Apache-2.0 */

#ifndef CFRAC_EXACT_SERIES_HPP
#define CFRAC_EXACT_SERIES_HPP

#include <cstddef>
#include <vector>

#include "cfrac/exact/ratfunc.hpp"

namespace cfrac::exact {

/// f has no Taylor expansion at the origin.
class PoleAtOrigin : public Error {
 public:
  using Error::Error;
};

/// Maclaurin coefficients c_0..c_order, ascending.
struct SeriesCoeffs {
  std::vector<BigRat> coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  friend bool operator==(const SeriesCoeffs&, const SeriesCoeffs&) = default;
};

/// Power-series long division of num by den up to x^order.
SeriesCoeffs series_from_ratfunc(const RatFunc& f, std::size_t order);

/// Product truncated to the shorter order.
SeriesCoeffs truncated_product(const SeriesCoeffs& a, const SeriesCoeffs& b);

/// n-th Euler zigzag number, from the Seidel-Entringer (boustrophedon) triangle.
BigInt zigzag(std::size_t n);

BigInt factorial(std::size_t n);

}  // namespace cfrac::exact

#endif  // CFRAC_EXACT_SERIES_HPP
