// Leading-block factorization check under shrinking of a subgraph.
#include "ncpoly/factorization.hpp"

#include <algorithm>
#include <set>

#include "ncpoly/parametric.hpp"

namespace ncpoly {

FactorizationReport check_factorization(const RibbonGraph& g,
                                        const std::vector<int>& S_lines) {
  validate(g);
  const int L = g.line_count();
  if (S_lines.empty()) throw GraphError("subgraph line set is empty");
  std::set<int> sset(S_lines.begin(), S_lines.end());
  for (int l : sset)
    if (l < 1 || l > L) throw GraphError("subgraph line id out of range");
  if (!lines_connected(g, S_lines))
    throw GraphError("subgraph lines are not connected");

  Subgraph sub = subgraph_of(g, S_lines);
  if (!primitive_shape(topology(sub.graph)))
    throw GraphError(
        "factorization requires a planar one-boundary subgraph with 2 or 4 legs");

  FactorizationReport rep;
  rep.host_lines = L;
  rep.sub_lines = sub.graph.line_count();

  // Host side: leading block under the rho grading of the S lines.
  Poly hu_g = hu_det(g);
  Leading lead_g = leading_terms(hu_g, std::vector<int>(sset.begin(), sset.end()));
  rep.rho_exponent = lead_g.rho_exponent;
  rep.lead_host = lead_g.part;

  // Subgraph side: its own leading block is the minimal-total-degree part,
  // i.e. the grading with every line of the standalone subgraph scaled.
  Poly hu_s = hu_det(sub.graph);
  std::vector<int> all_sub(rep.sub_lines);
  for (int i = 0; i < rep.sub_lines; ++i) all_sub[i] = i + 1;
  rep.sub_leading = leading_terms(hu_s, all_sub).part;

  QuotientResult q = quotient(g, S_lines);
  rep.quotient_lines = q.graph.line_count();
  rep.quotient_hu = hu_det(q.graph);

  // Lift both factors into the host's variable slots (t's by the inverse
  // line maps, s onto s).
  const int host_nv = L + 1;
  std::vector<int> lift_sub(rep.sub_lines + 1, -1);
  for (const auto& [parent, child] : sub.line_map) lift_sub[child - 1] = parent - 1;
  lift_sub[rep.sub_lines] = L;
  std::vector<int> lift_q(rep.quotient_lines + 1, -1);
  for (const auto& [parent, child] : q.line_map) lift_q[child - 1] = parent - 1;
  lift_q[rep.quotient_lines] = L;

  rep.product = rep.sub_leading.lift(lift_sub, host_nv) *
                rep.quotient_hu.lift(lift_q, host_nv);
  rep.difference = rep.lead_host - rep.product;
  rep.ok = rep.difference.is_zero();
  return rep;
}

}  // namespace ncpoly
