// Divergence bookkeeping: per-subgraph scaling degree read off the first
// polynomial, the three-case topological bound, dimensional-regularization
// pole locations, and the analyticity strip of the regularized amplitude.
#pragma once

#include <optional>
#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/poly.hpp"

namespace ncpoly {

// Minimal total degree of hu in the t variables of the given lines.
long b_prime(const Poly& hu, const std::vector<int>& S_lines);

// One connected line subset with its standalone shape, scaling degree and
// the case-table bound: genus > 0 -> L-(n-1)-2g; planar multi-boundary ->
// L-n; planar one-boundary -> L-(n-1) with equality required.
struct SubgraphClass {
  std::vector<int> lines;
  Topology topo;           // of the standalone subgraph
  long bprime = 0;
  long bound = 0;
  bool equality_case = false;  // planar one-boundary
  bool bound_ok = false;       // == when equality_case, <= otherwise
  bool primitive = false;      // primitive shape with >= 1 loop
  std::vector<Rat> poles;      // nonempty iff primitive
  // Broken standalone faces by what breaks them: only severed-line stubs,
  // only true legs inherited from the host, or a mix of the two.
  int stub_only_broken = 0;
  int true_only_broken = 0;
  int mixed_broken = 0;
};

struct DivergenceReport {
  Poly hu;  // host polynomial the degrees were read from
  std::vector<SubgraphClass> subgraphs;
};

// Classifies every connected line subset. Guarded by resolve_max_lines().
DivergenceReport classify(const RibbonGraph& g);

// All pole locations with the subgraphs responsible: (location, lines).
struct PoleEntry {
  Rat location;
  std::vector<int> lines;
};
std::vector<PoleEntry> poles(const RibbonGraph& g);
// Sorted unique pole locations.
std::vector<Rat> pole_locations(const RibbonGraph& g);

// The amplitude converges for 0 < D < 2 always; when some subgraph diverges
// the strip extends exactly to the smallest 2L(S)/b'(S) over subgraphs with
// b' > 0 (empty when nothing diverges).
struct AnalyticityStrip {
  Rat always_hi = 2;
  std::optional<Rat> extended;
};
AnalyticityStrip analyticity_strip(const RibbonGraph& g);

}  // namespace ncpoly
