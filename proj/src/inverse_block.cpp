// Host-vs-shrunken-graph inverse block comparison, fully symbolic.
#include "ncpoly/inverse_block.hpp"

#include <algorithm>
#include <set>

#include "ncpoly/matrix.hpp"
#include "ncpoly/parametric.hpp"

namespace ncpoly {

namespace {

// Index bookkeeping for one graph's matrix: u rows 0..L-1, v rows L..2L-1,
// momentum columns 2L..2L+n-2 (one per non-root vertex, ascending).
struct Layout {
  int L = 0;
  int dim = 0;
  std::vector<int> vertex_of_column;
  int p_index(int vertex) const {
    for (size_t c = 0; c < vertex_of_column.size(); ++c)
      if (vertex_of_column[c] == vertex) return 2 * L + static_cast<int>(c);
    throw GraphError("no momentum column for vertex");
  }
};

// Polynomial matrix over t1..tL, s, rho: the matrix with S lines rescaled
// t -> rho^2 t, conjugated by diag(rho on S u-rows) and with every u row
// multiplied by its t to clear the kinetic 1/t. rho_lines empty gives the
// plain (rho-free) version in the same variable scheme.
PolyMat scaled_matrix(const RibbonGraph& g, const std::set<int>& rho_lines,
                      Layout* layout) {
  ParametricMatrices bl = build_matrices(g);
  const int L = bl.L, n = bl.n;
  const int nv = L + 2;  // t1..tL, s, rho
  const int rho = L + 1;
  const int dim = 2 * L + n - 1;
  layout->L = L;
  layout->dim = dim;
  layout->vertex_of_column = bl.vertex_of_column;
  auto rp = [&](int urow) { return rho_lines.count(urow + 1) ? 1 : 0; };
  Poly s = Poly::variable(nv, L);
  PolyMat m(dim, std::vector<Poly>(dim, Poly::constant(nv, 0)));
  auto mono = [&](int tvar, int rho_pow) {
    Poly p = Poly::variable(nv, tvar);
    if (rho_pow) p = p * Poly::variable(nv, rho, rho_pow);
    return p;
  };
  for (int a = 0; a < L; ++a) {
    Poly ta = Poly::variable(nv, a);
    for (int b = 0; b < L; ++b) {
      if (bl.E[a][b])
        m[a][b] += s.scaled(bl.E[a][b]) * mono(a, rp(a) + rp(b));
      if (bl.E[a][L + b])
        m[a][L + b] += s.scaled(bl.E[a][L + b]) * mono(a, rp(a));
      if (bl.E[L + a][b]) {
        Poly e = s.scaled(bl.E[L + a][b]);
        if (rp(b)) e = e * Poly::variable(nv, rho);
        m[L + a][b] += e;
      }
      if (bl.E[L + a][L + b]) m[L + a][L + b] += s.scaled(bl.E[L + a][L + b]);
    }
    for (int c = 0; c < n - 1; ++c) {
      if (bl.Cu[a][c]) {
        m[a][2 * L + c] += mono(a, rp(a)).scaled(bl.Cu[a][c]);
        Poly e = Poly::constant(nv, -bl.Cu[a][c]);
        if (rp(a)) e = e * Poly::variable(nv, rho);
        m[2 * L + c][a] += e;
      }
      if (bl.Cv[a][c]) {
        m[L + a][2 * L + c] += Poly::constant(nv, bl.Cv[a][c]);
        m[2 * L + c][L + a] += Poly::constant(nv, -bl.Cv[a][c]);
      }
    }
    m[a][a] += Poly::constant(nv, 1);
    Poly vdiag = ta;
    if (rho_lines.count(a + 1)) vdiag = vdiag * Poly::variable(nv, rho, 2);
    m[L + a][L + a] += vdiag;
  }
  return m;
}

}  // namespace

InverseBlockReport check_inverse_block(const RibbonGraph& g,
                                       const std::vector<int>& S_lines) {
  validate(g);
  const int L = g.line_count();
  std::set<int> sset(S_lines.begin(), S_lines.end());
  if (sset.empty()) throw GraphError("subgraph line set is empty");
  for (int l : sset)
    if (l < 1 || l > L) throw GraphError("subgraph line id out of range");
  if (sset.size() == static_cast<size_t>(L))
    throw GraphError("subgraph must be proper (some line must remain)");
  if (!lines_connected(g, S_lines))
    throw GraphError("subgraph lines are not connected");

  auto ends = line_ends(g);
  std::set<int> svert;
  for (int l : sset) {
    svert.insert(ends.at({l, true}).first);
    svert.insert(ends.at({l, false}).first);
  }
  for (int v : svert) {
    if (v == g.root)
      throw GraphError("subgraph must not contain the root vertex");
    for (const Corner& c : g.vertices[v])
      if (c.kind == Corner::Ext)
        throw GraphError(
            "subgraph is not completely internal: vertex " + std::to_string(v) +
            " carries an external leg of the host");
  }
  if (!primitive_shape(topology(subgraph_of(g, S_lines).graph)))
    throw GraphError(
        "inverse-block check requires a planar one-boundary subgraph with 2 "
        "or 4 legs");

  // Quotient first: it rechecks shape and yields the index correspondences.
  QuotientResult q = quotient(g, S_lines);

  Layout host, quo;
  PolyMat pg = scaled_matrix(g, sset, &host);
  PolyMat pq = scaled_matrix(q.graph, {}, &quo);

  // Block labels and index pairs, host vs quotient.
  int v_low = *svert.begin();
  std::vector<std::string> labels;
  std::vector<int> hidx, qidx;
  for (int l = 1; l <= L; ++l) {
    if (sset.count(l)) continue;
    int lq = q.line_map.at(l);
    labels.push_back("u" + std::to_string(l));
    hidx.push_back(l - 1);
    qidx.push_back(lq - 1);
    labels.push_back("v" + std::to_string(l));
    hidx.push_back(L + l - 1);
    qidx.push_back(quo.L + lq - 1);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (v == g.root || svert.count(v)) continue;
    labels.push_back("p" + std::to_string(v));
    hidx.push_back(host.p_index(v));
    qidx.push_back(quo.p_index(q.vertex_map.at(v)));
  }
  labels.push_back("p*");
  hidx.push_back(host.p_index(v_low));
  qidx.push_back(quo.p_index(q.vertex_map.at(v_low)));

  std::vector<int> hblock = hidx, qblock = qidx;
  std::sort(hblock.begin(), hblock.end());
  std::sort(qblock.begin(), qblock.end());
  BlockInverse big = block_inverse(pg, hblock);
  BlockInverse biq = block_inverse(pq, qblock);
  auto hpos = [&](int i) {
    return std::find(hblock.begin(), hblock.end(), i) - hblock.begin();
  };
  auto qpos = [&](int i) {
    return std::find(qblock.begin(), qblock.end(), i) - qblock.begin();
  };

  InverseBlockReport rep;
  rep.block_size = static_cast<int>(labels.size());
  rep.labels = labels;
  const int rho_var = L + 1;
  long nu = big.den.min_exponent(rho_var);
  rep.rho_valuation = nu;
  Poly den0 = big.den.coeff_of(rho_var, static_cast<int>(nu));

  // Quotient entries lifted into the host's variable scheme.
  const int host_nv = L + 2;
  std::vector<int> lift_q(quo.L + 2, -1);
  for (const auto& [parent, child] : q.line_map) lift_q[child - 1] = parent - 1;
  lift_q[quo.L] = L;          // s
  lift_q[quo.L + 1] = L + 1;  // rho (unused by quotient entries)
  Poly qden = biq.den.lift(lift_q, host_nv);

  rep.ok = true;
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = 0; j < labels.size(); ++j) {
      const Poly& numg = big.num[hpos(hidx[i])][hpos(hidx[j])];
      Poly numq = biq.num[qpos(qidx[i])][qpos(qidx[j])].lift(lift_q, host_nv);
      std::string where = labels[i] + "," + labels[j];
      if (numg.is_zero()) {
        if (!numq.is_zero()) {
          rep.ok = false;
          rep.mismatches.push_back(where + ": differs (host entry is zero)");
        }
        continue;
      }
      long a = numg.min_exponent(rho_var);
      if (a < nu) {
        rep.ok = false;
        rep.mismatches.push_back(where + ": diverges as rho -> 0");
        continue;
      }
      if (a > nu) {
        if (!numq.is_zero()) {
          rep.ok = false;
          rep.mismatches.push_back(where + ": differs (host limit is zero)");
        }
        continue;
      }
      Poly n0 = numg.coeff_of(rho_var, static_cast<int>(a));
      // n0/den0 must equal numq/qden as rational functions.
      if (!(n0 * qden == numq * den0)) {
        rep.ok = false;
        rep.mismatches.push_back(where + ": differs");
      }
    }
  }
  return rep;
}

}  // namespace ncpoly
