// Scaling degrees, case-table bounds, poles, analyticity strip.
#include "ncpoly/power_counting.hpp"

#include <algorithm>

#include "ncpoly/parametric.hpp"

namespace ncpoly {

long b_prime(const Poly& hu, const std::vector<int>& S_lines) {
  std::vector<int> vars;
  vars.reserve(S_lines.size());
  for (int l : S_lines) {
    if (l < 1 || l > hu.nvars() - 1)
      throw std::domain_error("b_prime: line id out of range");
    vars.push_back(l - 1);
  }
  return hu.min_degree_in(vars);
}

DivergenceReport classify(const RibbonGraph& g) {
  validate(g);
  const int L = g.line_count();
  int guard = resolve_max_lines();
  if (L > guard)
    throw GraphError("graph has " + std::to_string(L) +
                     " lines; limit is " + std::to_string(guard) +
                     " (set NCPOLY_MAX_L to raise)");
  DivergenceReport rep;
  rep.hu = hu_det(g);
  for (unsigned mask = 1; mask < (1u << L); ++mask) {
    std::vector<int> lines;
    for (int l = 0; l < L; ++l)
      if (mask >> l & 1) lines.push_back(l + 1);
    if (!lines_connected(g, lines)) continue;
    SubgraphClass sc;
    sc.lines = lines;
    Subgraph sub = subgraph_of(g, lines);
    sc.topo = topology(sub.graph);
    FaceSet fs = trace_faces(sub.graph);
    for (const auto& face : fs.faces) {
      bool any_stub = false, any_true_leg = false;
      for (const Dart& d : face) {
        if (!d.is_virtual()) continue;
        if (sub.severed_exts.count(d.pos))
          any_stub = true;
        else
          any_true_leg = true;
      }
      if (any_stub && !any_true_leg) ++sc.stub_only_broken;
      if (any_true_leg && !any_stub) ++sc.true_only_broken;
      if (any_stub && any_true_leg) ++sc.mixed_broken;
    }
    sc.bprime = b_prime(rep.hu, lines);
    long Ls = sc.topo.L, ns = sc.topo.n;
    if (sc.topo.g > 0) {
      sc.bound = Ls - (ns - 1) - 2 * sc.topo.g;
    } else if (sc.topo.B > 1) {
      sc.bound = Ls - ns;
    } else {
      sc.bound = Ls - (ns - 1);
      sc.equality_case = true;
    }
    sc.bound_ok = sc.equality_case ? sc.bprime == sc.bound
                                   : sc.bprime <= sc.bound;
    long loops = Ls - ns + 1;
    sc.primitive = primitive_shape(sc.topo) && loops >= 1;
    if (sc.primitive) {
      sc.poles.push_back(Rat(2 * Ls) / loops);
      if (sc.topo.N == 2) sc.poles.push_back(Rat(2 * Ls + 2) / loops);
    }
    rep.subgraphs.push_back(std::move(sc));
  }
  std::sort(rep.subgraphs.begin(), rep.subgraphs.end(),
            [](const SubgraphClass& a, const SubgraphClass& b) {
              return a.lines.size() != b.lines.size()
                         ? a.lines.size() < b.lines.size()
                         : a.lines < b.lines;
            });
  return rep;
}

std::vector<PoleEntry> poles(const RibbonGraph& g) {
  std::vector<PoleEntry> out;
  for (const auto& sc : classify(g).subgraphs)
    for (const Rat& p : sc.poles) out.push_back({p, sc.lines});
  std::sort(out.begin(), out.end(), [](const PoleEntry& a, const PoleEntry& b) {
    return a.location != b.location ? a.location < b.location
                                    : a.lines < b.lines;
  });
  return out;
}

std::vector<Rat> pole_locations(const RibbonGraph& g) {
  std::vector<Rat> out;
  for (const auto& e : poles(g))
    if (out.empty() || out.back() != e.location) out.push_back(e.location);
  return out;
}

AnalyticityStrip analyticity_strip(const RibbonGraph& g) {
  AnalyticityStrip strip;
  for (const auto& sc : classify(g).subgraphs) {
    if (sc.bprime <= 0) continue;
    Rat bound = Rat(2 * sc.topo.L) / sc.bprime;
    if (!strip.extended || bound < *strip.extended) strip.extended = bound;
  }
  return strip;
}

}  // namespace ncpoly
