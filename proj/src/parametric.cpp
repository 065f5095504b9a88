// Quadratic-form blocks and the two routes to the first polynomial.
#include "ncpoly/parametric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncpoly {

namespace {

// The quadratic form reads each vertex word as a linear order, and for the
// root vertex the two sign-preserving linearizations (cut before slot 0 or
// before slot 2) give genuinely different matrices: unlike the other
// vertices, the root has no hypermomentum column to absorb the difference.
// Canonicalize so the result is a property of the graph, not of where the
// stored word happens to start: prefer the cut that places an external leg at
// a boundary (first or last position) of the linear word. Keep the stored cut
// on ties, and when the root carries no external leg the stored order stands
// as part of the input data.
RibbonGraph canonicalize_root_cut(const RibbonGraph& g) {
  const auto& w = g.vertices[g.root];
  const int len = static_cast<int>(w.size());
  if (len < 4) return g;
  auto ext_at = [&](int pos) { return w[pos % len].kind == Corner::Ext; };
  const bool stored_ok = ext_at(0) || ext_at(len - 1);
  const bool rotated_ok = ext_at(2) || ext_at(1);
  if (stored_ok || !rotated_ok) return g;
  RibbonGraph out = g;
  auto& word = out.vertices[out.root];
  std::rotate(word.begin(), word.begin() + 2, word.end());
  return out;
}

}  // namespace

ParametricMatrices build_matrices(const RibbonGraph& in) {
  validate(in);
  RibbonGraph g = canonicalize_root_cut(in);
  ParametricMatrices out;
  out.L = g.line_count();
  out.n = g.n();
  const int L = out.L;
  out.E.assign(2 * L, std::vector<int>(2 * L, 0));
  for (const auto& w : g.vertices) {
    // Hooks: (slot position, line id) per line end at this vertex.
    std::vector<std::pair<int, int>> hooks;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i].kind == Corner::Kind::Line)
        hooks.emplace_back(static_cast<int>(i), w[i].id);
    for (auto [i, li] : hooks) {
      for (auto [j, lj] : hooks) {
        if (i == j) continue;
        int om = i < j ? 1 : -1;
        int si = slot_sign(i), sj = slot_sign(j);
        int a = li - 1, b = lj - 1;
        out.E[a][b] += -om;
        out.E[a][L + b] += -om * sj;
        out.E[L + a][b] += -om * si;
        out.E[L + a][L + b] += -om * si * sj;
      }
    }
  }
  for (int i = 0; i < 2 * L; ++i)
    for (int j = 0; j < 2 * L; ++j)
      if (out.E[i][j] != -out.E[j][i])
        throw std::logic_error("internal: E block is not antisymmetric");
  out.Cu.assign(L, std::vector<int>(out.n - 1, 0));
  out.Cv.assign(L, std::vector<int>(out.n - 1, 0));
  for (int v = 0; v < out.n; ++v)
    if (v != g.root) out.vertex_of_column.push_back(v);
  for (size_t c = 0; c < out.vertex_of_column.size(); ++c) {
    const auto& w = g.vertices[out.vertex_of_column[c]];
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i].kind != Corner::Kind::Line) continue;
      out.Cu[w[i].id - 1][c] += 1;
      out.Cv[w[i].id - 1][c] += slot_sign(static_cast<int>(i));
    }
  }
  return out;
}

PolyMat hu_matrix(const RibbonGraph& g) {
  ParametricMatrices bl = build_matrices(g);
  const int L = bl.L, n = bl.n;
  const int nv = L + 1;  // t1..tL, s
  const int dim = 2 * L + n - 1;
  Poly s = Poly::variable(nv, L);
  PolyMat m(dim, std::vector<Poly>(dim, Poly::constant(nv, 0)));
  for (int i = 0; i < 2 * L; ++i)
    for (int j = 0; j < 2 * L; ++j)
      if (bl.E[i][j]) m[i][j] = s.scaled(bl.E[i][j]);
  for (int a = 0; a < L; ++a) {
    for (int c = 0; c < n - 1; ++c) {
      if (bl.Cu[a][c]) {
        m[a][2 * L + c] += Poly::constant(nv, bl.Cu[a][c]);
        m[2 * L + c][a] += Poly::constant(nv, -bl.Cu[a][c]);
      }
      if (bl.Cv[a][c]) {
        m[L + a][2 * L + c] += Poly::constant(nv, bl.Cv[a][c]);
        m[2 * L + c][L + a] += Poly::constant(nv, -bl.Cv[a][c]);
      }
    }
  }
  // Kinetic diagonal: the u-row entry 1/t is cleared by scaling the whole
  // u row by t, which is exactly the product of t's the determinant formula
  // wants; the v diagonal gains +t.
  for (int a = 0; a < L; ++a) {
    Poly t = Poly::variable(nv, a);
    for (int j = 0; j < dim; ++j) m[a][j] = m[a][j] * t;
    m[a][a] += Poly::constant(nv, 1);
    m[L + a][L + a] += t;
  }
  return m;
}

Poly hu_det(const RibbonGraph& g) {
  PolyMat m = hu_matrix(g);
  // A graph shrunk to one bare vertex has an empty matrix; its polynomial is
  // the constant 1 in the (t..., s) arity the caller expects.
  if (m.empty()) return Poly::constant(g.line_count() + 1, 1);
  return det_bareiss(std::move(m));
}

Poly hu_pfaffian_sum(const RibbonGraph& g) {
  validate(g);
  const int L = g.line_count();
  const int n = g.n();
  int guard = resolve_max_lines();
  if (L > guard)
    throw std::domain_error("graph has " + std::to_string(L) +
                            " lines; limit is " + std::to_string(guard) +
                            " (set NCPOLY_MAX_L to raise)");
  Topology topo = topology(g);
  ParametricMatrices bl = build_matrices(g);
  const int dim = 2 * L + n - 1;
  // Integer antisymmetric matrix at s = 1.
  RatMat b(dim, std::vector<Rat>(dim, 0));
  for (int i = 0; i < 2 * L; ++i)
    for (int j = 0; j < 2 * L; ++j) b[i][j] = bl.E[i][j];
  for (int a = 0; a < L; ++a) {
    for (int c = 0; c < n - 1; ++c) {
      b[a][2 * L + c] += bl.Cu[a][c];
      b[2 * L + c][a] -= bl.Cu[a][c];
      b[L + a][2 * L + c] += bl.Cv[a][c];
      b[2 * L + c][L + a] -= bl.Cv[a][c];
    }
  }
  const int nv = L + 1;
  Poly total = Poly::constant(nv, 0);
  for (unsigned maskI = 0; maskI < (1u << L); ++maskI) {
    for (unsigned maskJ = 0; maskJ < (1u << L); ++maskJ) {
      std::vector<bool> kill(dim, false);
      int killed = 0;
      for (int l = 0; l < L; ++l) {
        if (maskI >> l & 1) kill[l] = true, ++killed;
        if (maskJ >> l & 1) kill[L + l] = true, ++killed;
      }
      if ((dim - killed) % 2) continue;
      std::vector<int> keep;
      keep.reserve(dim - killed);
      for (int x = 0; x < dim; ++x)
        if (!kill[x]) keep.push_back(x);
      RatMat sub(keep.size(), std::vector<Rat>(keep.size()));
      for (size_t r = 0; r < keep.size(); ++r)
        for (size_t c = 0; c < keep.size(); ++c)
          sub[r][c] = b[keep[r]][keep[c]];
      Rat pf = pfaffian_rat(sub);
      if (pf == 0) continue;
      int nI = __builtin_popcount(maskI), nJ = __builtin_popcount(maskJ);
      int k = nI + nJ - L - topo.F + 1;
      int sexp = 2 * topo.g - k;
      if (sexp < 0)
        throw std::logic_error("internal: surviving minor with negative s power");
      Expo mono(nv, 0);
      for (int l = 0; l < L; ++l) {
        if (!(maskI >> l & 1)) mono[l] += 1;
        if (maskJ >> l & 1) mono[l] += 1;
      }
      mono[L] = sexp;
      total.add_term(mono, pf * pf);
    }
  }
  return total;
}

Leading leading_terms(const Poly& hu, const std::vector<int>& S_lines) {
  std::vector<int> w(hu.nvars(), 0);
  for (int l : S_lines) {
    if (l < 1 || l > hu.nvars() - 1)
      throw std::domain_error("leading_terms: line id out of range");
    w[l - 1] = 2;
  }
  auto [deg, part] = hu.weighted_leading(w);
  return Leading{deg, part};
}

DetQReport check_detq(const RibbonGraph& g, int D,
                      const std::vector<Rat>& t_values, const Rat& s_value) {
  if (D < 2 || D % 2)
    throw std::domain_error("check_detq: dimension must be a positive even integer");
  const int L = g.line_count();
  if (static_cast<int>(t_values.size()) != L)
    throw std::domain_error("check_detq: need one t value per line");
  for (const Rat& t : t_values)
    if (t == 0) throw std::domain_error("check_detq: t values must be nonzero");
  ParametricMatrices bl = build_matrices(g);
  const int n = bl.n;
  const int dim = 2 * L + n - 1;
  RatMat a(dim, std::vector<Rat>(dim, 0));
  RatMat bmat(dim, std::vector<Rat>(dim, 0));
  for (int l = 0; l < L; ++l) {
    a[l][l] = Rat(1) / t_values[l];
    a[L + l][L + l] = t_values[l];
  }
  for (int i = 0; i < 2 * L; ++i)
    for (int j = 0; j < 2 * L; ++j)
      if (bl.E[i][j]) bmat[i][j] = s_value * bl.E[i][j];
  for (int l = 0; l < L; ++l) {
    for (int c = 0; c < n - 1; ++c) {
      bmat[l][2 * L + c] += bl.Cu[l][c];
      bmat[2 * L + c][l] -= bl.Cu[l][c];
      bmat[L + l][2 * L + c] += bl.Cv[l][c];
      bmat[2 * L + c][L + l] -= bl.Cv[l][c];
    }
  }
  // sigma: D/2 diagonal copies of [[0,1],[1,0]].
  auto sigma = [&](int r, int c) -> int {
    return (r / 2 == c / 2 && r != c) ? 1 : 0;
  };
  RatMat q(dim * D, std::vector<Rat>(dim * D, 0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) {
          Rat val = 0;
          if (r == c) val += a[i][j];
          if (sigma(r, c)) val -= bmat[i][j];
          if (val != 0) q[i * D + r][j * D + c] = val;
        }
  RatMat m(dim, std::vector<Rat>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m[i][j] = a[i][j] + bmat[i][j];
  DetQReport rep;
  rep.dim_q = dim * D;
  rep.det_q = det_rat(q);
  rep.det_m = det_rat(m);
  Rat pw = 1;
  for (int k = 0; k < D; ++k) pw *= rep.det_m;
  rep.ok = rep.det_q == pw;
  return rep;
}

}  // namespace ncpoly
