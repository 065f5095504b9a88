// Taylor truncation, forest enumeration, subtraction blueprint.
#include "ncpoly/renormalization.hpp"

#include <algorithm>
#include <set>

#include "ncpoly/factorization.hpp"
#include "ncpoly/parametric.hpp"

namespace ncpoly {

long rat_ceil(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

long rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q.get_si();
}

Poly taylor_apply(int n, const Rat& nu, const Poly& series, int rho_var,
                  int known_order) {
  long keep = n - rat_ceil(nu);
  if (keep < 0) return Poly::constant(series.nvars(), 0);
  if (keep > known_order)
    throw std::domain_error("taylor_apply: series order insufficient");
  Poly out = Poly::constant(series.nvars(), 0);
  for (const auto& [e, c] : series.terms())
    if (e[rho_var] <= keep) out.add_term(e, c);
  return out;
}

namespace {

// Connected line subsets, smallest first; shared by the enumerations here.
std::vector<std::vector<int>> connected_subsets(const RibbonGraph& g) {
  const int L = g.line_count();
  int guard = resolve_max_lines();
  if (L > guard)
    throw GraphError("graph has " + std::to_string(L) +
                     " lines; limit is " + std::to_string(guard) +
                     " (set NCPOLY_MAX_L to raise)");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << L); ++mask) {
    std::vector<int> lines;
    for (int l = 0; l < L; ++l)
      if (mask >> l & 1) lines.push_back(l + 1);
    if (lines_connected(g, lines)) out.push_back(std::move(lines));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

std::vector<std::vector<int>> primitive_subgraphs(const RibbonGraph& g) {
  validate(g);
  std::vector<std::vector<int>> out;
  for (auto& lines : connected_subsets(g)) {
    Subgraph sub = subgraph_of(g, lines);
    Topology t = topology(sub.graph);
    long loops = t.L - t.n + 1;
    if (primitive_shape(t) && loops >= 1) out.push_back(std::move(lines));
  }
  return out;
}

std::vector<ForestTerm> forests(const RibbonGraph& g) {
  auto prim = primitive_subgraphs(g);
  const int m = static_cast<int>(prim.size());
  std::vector<std::set<int>> sets;
  sets.reserve(m);
  for (const auto& p : prim) sets.emplace_back(p.begin(), p.end());
  auto compatible = [&](int a, int b) {
    const auto& A = sets[a];
    const auto& B = sets[b];
    size_t common = 0;
    for (int x : A) common += B.count(x);
    if (common == 0) return true;                    // disjoint
    return common == A.size() || common == B.size();  // nested
  };
  std::vector<ForestTerm> out;
  if (m > 30) throw GraphError("too many primitive subgraphs to enumerate");
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> members;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j : members)
        if (!compatible(i, j)) {
          ok = false;
          break;
        }
      if (ok) members.push_back(i);
    }
    if (!ok) continue;
    ForestTerm t;
    t.sign = members.size() % 2 ? -1 : 1;
    t.members = std::move(members);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const ForestTerm& a, const ForestTerm& b) {
    return a.members.size() != b.members.size()
               ? a.members.size() < b.members.size()
               : a.members < b.members;
  });
  return out;
}

CountertermData subtraction_operator(const RibbonGraph& g,
                                     const std::vector<int>& S_lines) {
  Subgraph sub = subgraph_of(g, S_lines);
  Topology t = topology(sub.graph);
  long loops = t.L - t.n + 1;
  if (!primitive_shape(t) || loops < 1)
    throw GraphError(
        "subtraction requires a planar one-boundary subgraph with 2 or 4 legs "
        "and at least one loop");
  FactorizationReport fr = check_factorization(g, S_lines);
  if (!fr.ok)
    throw GraphError("leading factorization does not hold for this subgraph");
  QuotientResult q = quotient(g, S_lines);
  CountertermData ct;
  ct.lines = S_lines;
  std::sort(ct.lines.begin(), ct.lines.end());
  ct.sub_leading = fr.sub_leading;
  ct.sub_line_map = sub.line_map;
  ct.quotient_graph = q.graph;
  ct.quotient_line_map = q.line_map;
  ct.two_L = 2L * t.L;
  ct.loops = loops;
  ct.two_point = t.N == 2;
  ct.poles.push_back(Rat(ct.two_L) / loops);
  if (ct.two_point) ct.poles.push_back(Rat(ct.two_L + 2) / loops);
  return ct;
}

SubtractionBlueprint renormalized_blueprint(const RibbonGraph& g) {
  SubtractionBlueprint bp;
  for (const auto& lines : primitive_subgraphs(g))
    bp.subgraphs.push_back(subtraction_operator(g, lines));
  bp.terms = forests(g);
  return bp;
}

bool tau_active(const CountertermData& ct, const Rat& D) {
  return tau_kept_orders(ct, D) >= 0;
}

long tau_kept_orders(const CountertermData& ct, const Rat& D) {
  // Order -2L acting on rho^(-D*loops) * (regular part):
  // kept = -2L - ceil(-D*loops) = -2L + floor(D*loops).
  return -ct.two_L + rat_floor(D * Rat(ct.loops));
}

}  // namespace ncpoly
