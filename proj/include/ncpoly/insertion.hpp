// Grafting a standalone piece into a host graph: splicing a two-leg piece
// into the middle of a host line, or substituting a four-leg piece for a
// four-corner host vertex. Used to mass-produce (graph, subgraph) test pairs.
#pragma once

#include <vector>

#include "ncpoly/graph.hpp"

namespace ncpoly {

struct Insertion {
  RibbonGraph graph;
  std::vector<int> sub_lines;  // line ids of the grafted piece, sorted
};

// Splice `piece` (exactly one "+" external stub and one "-" stub) into host
// line `line_id`: the host line's target corner is fed by a new line from the
// piece's "-" stub, and the host line's source corner feeds a new line into
// the piece's "+" stub. The grafted piece is completely internal (no external
// legs, root outside).
Insertion insert_line(const RibbonGraph& host, int line_id,
                      const RibbonGraph& piece);

// Replace four-corner host vertex `vertex` (not the root) by `piece` (four
// external stubs). Stub k of the piece's cyclic boundary order, rotated by
// the even amount `rot`, takes over host corner k's attachment; corner signs
// must line up or a GraphError is thrown.
Insertion insert_vertex(const RibbonGraph& host, int vertex,
                        const RibbonGraph& piece, int rot);

}  // namespace ncpoly
