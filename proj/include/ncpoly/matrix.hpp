// Exact linear algebra on matrices of rationals and of sparse polynomials:
// fraction-free determinants, skew-symmetric Pfaffians, and inverse entries
// restricted to a block of indices (shared-elimination fast path).
#pragma once

#include <vector>

#include "ncpoly/poly.hpp"

namespace ncpoly {

using PolyMat = std::vector<std::vector<Poly>>;
using RatMat = std::vector<std::vector<Rat>>;

// Determinant via Bareiss fraction-free elimination with row pivoting.
// The empty matrix has determinant 1.
Poly det_bareiss(PolyMat a);

Rat det_rat(RatMat a);

// Pfaffian of a skew-symmetric matrix (zero when the dimension is odd).
Rat pfaffian_rat(RatMat a);

// (-1)^{i+j} * det(a with row i and column j removed).
Poly cofactor(const PolyMat& a, int i, int j);

// Inverse entries of a restricted to the given index block:
//   (a^{-1})[block[i]][block[j]] = num[i][j] / den   (not reduced).
// Eliminates the non-block part once, then takes small core determinants;
// falls back to plain cofactors when elimination stalls on a zero pivot.
struct BlockInverse {
  Poly den;
  std::vector<std::vector<Poly>> num;
  bool used_fallback = false;
};
BlockInverse block_inverse(const PolyMat& a, const std::vector<int>& block);

}  // namespace ncpoly
