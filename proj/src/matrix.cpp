// Exact determinant, Pfaffian, and block-inverse routines.
#include "ncpoly/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncpoly {

namespace {

int nvars_of(const PolyMat& a) {
  return a.empty() ? 0 : a[0][0].nvars();
}

void check_square(const PolyMat& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("matrix not square");
}

}  // namespace

Poly det_bareiss(PolyMat a) {
  check_square(a);
  const int n = static_cast<int>(a.size());
  const int nv = nvars_of(a);
  if (n == 0) return Poly::constant(0, 1);
  int sign = 1;
  Poly prev = Poly::constant(nv, 1);
  for (int r = 0; r + 1 < n; ++r) {
    if (a[r][r].is_zero()) {
      int swap_row = -1;
      for (int i = r + 1; i < n; ++i)
        if (!a[i][r].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Poly(nv);  // zero column => singular
      std::swap(a[r], a[swap_row]);
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < n; ++j) {
        Poly t = a[r][r] * a[i][j] - a[i][r] * a[r][j];
        a[i][j] = Poly::div_exact(t, prev);
      }
      a[i][r] = Poly(nv);
    }
    prev = a[r][r];
  }
  Poly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

Rat det_rat(RatMat a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix not square");
  if (n == 0) return 1;
  Rat det = 1;
  for (int r = 0; r < n; ++r) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (a[i][r] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      det = -det;
    }
    det *= a[r][r];
    for (int i = r + 1; i < n; ++i) {
      if (a[i][r] == 0) continue;
      Rat f = a[i][r] / a[r][r];
      for (int j = r; j < n; ++j) a[i][j] -= f * a[r][j];
    }
  }
  return det;
}

Rat pfaffian_rat(RatMat a) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix not square");
  if (n % 2 != 0) return 0;
  Rat pf = 1;
  for (int k = 0; k < n; k += 2) {
    // Pivot: bring a nonzero entry of row k to position k+1.
    int piv = -1;
    for (int j = k + 1; j < n; ++j)
      if (a[k][j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return 0;  // zero row
    if (piv != k + 1) {
      std::swap(a[piv], a[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k + 1]);
      pf = -pf;
    }
    pf *= a[k][k + 1];
    // Congruence update clearing row/column k beyond position k+1.
    for (int j = k + 2; j < n; ++j) {
      if (a[k][j] == 0) continue;
      Rat f = a[k][j] / a[k][k + 1];
      for (int i = 0; i < n; ++i) a[j][i] -= f * a[k + 1][i];
      for (int i = 0; i < n; ++i) a[i][j] -= f * a[i][k + 1];
    }
  }
  return pf;
}

Poly cofactor(const PolyMat& a, int i, int j) {
  check_square(a);
  const int n = static_cast<int>(a.size());
  PolyMat minor;
  minor.reserve(n - 1);
  for (int r = 0; r < n; ++r) {
    if (r == i) continue;
    std::vector<Poly> row;
    row.reserve(n - 1);
    for (int c = 0; c < n; ++c) {
      if (c == j) continue;
      row.push_back(a[r][c]);
    }
    minor.push_back(std::move(row));
  }
  Poly d = det_bareiss(std::move(minor));
  return ((i + j) % 2 == 0) ? d : -d;
}

namespace {

PolyMat erase_row_col(const PolyMat& a, int i, int j) {
  PolyMat out;
  out.reserve(a.size() - 1);
  for (size_t r = 0; r < a.size(); ++r) {
    if (static_cast<int>(r) == i) continue;
    std::vector<Poly> row;
    row.reserve(a.size() - 1);
    for (size_t c = 0; c < a.size(); ++c) {
      if (static_cast<int>(c) == j) continue;
      row.push_back(a[r][c]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

BlockInverse block_inverse_fallback(const PolyMat& a,
                                    const std::vector<int>& block) {
  BlockInverse out;
  out.used_fallback = true;
  out.den = det_bareiss(a);
  const int k = static_cast<int>(block.size());
  out.num.assign(k, std::vector<Poly>(k, Poly(nvars_of(a))));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.num[i][j] = cofactor(a, block[j], block[i]);
  return out;
}

}  // namespace

BlockInverse block_inverse(const PolyMat& a, const std::vector<int>& block) {
  check_square(a);
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(block.size());
  const int nv = nvars_of(a);
  if (k == 0) throw std::invalid_argument("empty block");
  std::vector<char> in_block(n, 0);
  for (int b : block) {
    if (b < 0 || b >= n || in_block[b])
      throw std::invalid_argument("bad block index");
    in_block[b] = 1;
  }

  // One-pass fraction-free Gauss-Jordan on [a | I restricted to the block
  // columns]: every row operation left-multiplies both halves by the same
  // transform, so once the left half is delta * I the right half is
  // delta * a^{-1}[:, block], with delta the shared final pivot. Entries
  // stay determinants of submatrices of `a`, which keeps them far smaller
  // than the cofactors of an eliminated core.
  const int w = n + k;
  PolyMat m(n, std::vector<Poly>(w, Poly(nv)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  for (int c = 0; c < k; ++c) m[block[c]][n + c] = Poly::constant(nv, 1);

  try {
    Poly prev = Poly::constant(nv, 1);
    for (int r = 0; r < n; ++r) {
      if (m[r][r].is_zero()) {
        int swap_row = -1;
        for (int i = r + 1; i < n; ++i)
          if (!m[i][r].is_zero()) {
            swap_row = i;
            break;
          }
        if (swap_row < 0)
          throw std::domain_error("block_inverse: singular matrix");
        std::swap(m[r], m[swap_row]);
      }
      const Poly piv = m[r][r];
      for (int i = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0; j < w; ++j) {
          if (j == r) continue;
          Poly t = piv * m[i][j] - m[i][r] * m[r][j];
          m[i][j] = Poly::div_exact(t, prev);
        }
        m[i][r] = Poly(nv);
      }
      prev = piv;
    }
    const Poly& delta = m[n - 1][n - 1];
    for (int i = 0; i < n; ++i)
      if (!(m[i][i] == delta))
        throw std::domain_error("block_inverse: lost the scalar diagonal");
    BlockInverse out;
    out.den = delta;
    out.num.assign(k, std::vector<Poly>(k, Poly(nv)));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) out.num[r][c] = m[block[r]][n + c];
    return out;
  } catch (const std::domain_error&) {
    return block_inverse_fallback(a, block);
  }
}

}  // namespace ncpoly
