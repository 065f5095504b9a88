// Tree-line contraction (vertex gluing that respects cyclic order), rosettes,
// crossing analysis on the rosette word, and the line-subset conditions
// (admissible / pseudo-admissible) used by the coefficient theorems.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "ncpoly/graph.hpp"

namespace ncpoly {

struct ContractResult {
  RibbonGraph graph;
  std::map<int, int> line_map;  // old id -> new id (contracted line absent)
};

// Contracts internal line `line`, merging its endpoints into `keep_vertex`.
// The far vertex's word (minus the consumed corner) is spliced in place of
// the near corner, starting at the far corner's cyclic successor. Line ids
// are renumbered to stay consecutive. Self-loops cannot be contracted.
ContractResult filk_contract_to(const RibbonGraph& g, int line,
                                int keep_vertex);

// Contraction toward the root: `tree_line` must have one endpoint on the
// current root vertex, which absorbs the other endpoint.
ContractResult filk_contract(const RibbonGraph& g, int tree_line);

struct Rosette {
  RibbonGraph graph;            // single vertex holding all loop lines
  std::map<int, int> line_map;  // original line id -> rosette line id
  std::map<int, int> orig_of;   // rosette line id -> original line id
  // Corner positions (target, source) of each rosette line in the word.
  std::map<int, std::pair<int, int>> positions;
  // Pairs of original line ids whose corner intervals interleave.
  std::set<std::pair<int, int>> crossing_pairs;
};

// Iterated contraction of a spanning tree toward the root. Processing order
// is by increasing distance from the root; `order` (original tree line ids)
// overrides it for order-independence tests, as long as every step touches
// the current merged vertex.
Rosette rosette(const RibbonGraph& g, const std::vector<int>& tree_lines);
Rosette rosette(const RibbonGraph& g, const std::vector<int>& tree_lines,
                const std::vector<int>& order);

// Crossing pairs where one line's target corner immediately follows the
// other line's source corner in the rosette word (original line ids).
std::set<std::pair<int, int>> nice_crossings(const Rosette& r);
// Loop lines participating in at least one such pair (original line ids).
std::set<int> genus_lines(const Rosette& r);

// J contains a set of lines connecting all faces (a tree in the face/vertex
// dual) while its complement connects all vertices.
bool admissible(const RibbonGraph& g, const std::set<int>& J);

// The complement of J is exactly a spanning tree plus the single line l2,
// with neither l_tilde nor l2 in the tree.
bool pseudo_admissible(const RibbonGraph& g, const std::set<int>& J,
                       int l_tilde, int l2);

// All spanning trees as line-id sets (exhaustive; intended for small L).
std::vector<std::set<int>> all_spanning_trees(const RibbonGraph& g);

// Whether the line set forms a spanning tree of the whole graph.
bool is_spanning_tree(const RibbonGraph& g, const std::set<int>& t);

}  // namespace ncpoly
