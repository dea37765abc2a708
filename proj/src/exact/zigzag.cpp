/* SPDX-License-Identifier: Apache-2.0 */

#include "cfrac/exact/series.hpp"

namespace cfrac::exact {

BigInt zigzag(std::size_t n) {
  // Row r of the triangle: T(r,0) = 0 for r > 0, T(r,j) = T(r,j-1) + T(r-1,r-j).
  // The zigzag number is the last entry of row n.
  std::vector<BigInt> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1);
    next[0] = 0;
    for (std::size_t j = 1; j <= r; ++j) next[j] = next[j - 1] + row[r - j];
    row = std::move(next);
  }
  return row.back();
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace cfrac::exact
