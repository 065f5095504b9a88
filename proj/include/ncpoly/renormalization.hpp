// Generalized Taylor truncation, primitive-subgraph forests, and the signed
// subtraction blueprint consumed by the numeric integrator.
#pragma once

#include <map>
#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/poly.hpp"

namespace ncpoly {

// Smallest integer >= r / largest integer <= r.
long rat_ceil(const Rat& r);
long rat_floor(const Rat& r);

// Truncation part of the generalized operator of order n acting on
// rho^nu * g: returns T^(n - ceil(nu))[g], i.e. g truncated to rho order
// n - ceil(nu), or zero when that order is negative. The rho^nu prefactor
// stays with the caller (nu need not be an integer). known_order is the
// order up to which `series` is trusted; asking beyond it throws.
Poly taylor_apply(int n, const Rat& nu, const Poly& series, int rho_var,
                  int known_order);

// Counterterm data for one shrinkable divergent subgraph S: the leading
// block of S's own polynomial, the shrunken host, and the exact pole
// bookkeeping. Denominators in D are 2L - D*loops and, for two-point S,
// additionally 2L + 2 - D*loops; the two-point flag also marks the
// (untracked) quadratic mass-type term.
struct CountertermData {
  std::vector<int> lines;                // host line ids of S
  Poly sub_leading;                      // standalone S variables
  std::map<int, int> sub_line_map;       // host line id -> standalone id
  RibbonGraph quotient_graph;
  std::map<int, int> quotient_line_map;  // host line id -> quotient id
  long two_L = 0;                        // 2 * L(S)
  long loops = 0;                        // L(S) - n(S) + 1
  bool two_point = false;
  std::vector<Rat> poles;                // 2L/loops (+ (2L+2)/loops if 2-pt)
};

// One signed term of the subtraction sum; members index the blueprint's
// subgraph list. The empty term is the identity with sign +1.
struct ForestTerm {
  std::vector<int> members;
  int sign = 1;
};

struct SubtractionBlueprint {
  std::vector<CountertermData> subgraphs;
  std::vector<ForestTerm> terms;
};

// Line sets of all connected subgraphs with primitive shape and at least one
// loop, ordered by size then lexicographically.
std::vector<std::vector<int>> primitive_subgraphs(const RibbonGraph& g);

// All pairwise nested-or-disjoint subsets of the primitive list (as index
// sets into primitive_subgraphs(g)), including the empty one; signs
// alternate with the member count.
std::vector<ForestTerm> forests(const RibbonGraph& g);

CountertermData subtraction_operator(const RibbonGraph& g,
                                     const std::vector<int>& S_lines);

SubtractionBlueprint renormalized_blueprint(const RibbonGraph& g);

// Whether the order -2L truncation keeps anything at dimension D, and how
// many rho orders beyond the leading one it keeps.
bool tau_active(const CountertermData& ct, const Rat& D);
long tau_kept_orders(const CountertermData& ct, const Rat& D);

}  // namespace ncpoly
