// Exact comparison of the host matrix-inverse block outside a shrinking
// internal subgraph against the inverse of the shrunken graph's matrix.
#pragma once

#include <string>
#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/poly.hpp"

namespace ncpoly {

// The subgraph's lines are rescaled t -> rho^2 t and the singular 1/t rows
// are conjugated by rho so every entry stays polynomial. The block kept for
// comparison: u and v rows of lines outside S, momentum columns of vertices
// outside S, and the momentum column of the shrunken vertex (labelled "p*",
// matched to the lowest vertex of S on the host side). Each host entry must
// have a finite rho->0 limit equal, as a rational function, to the
// corresponding entry of the shrunken graph's inverse.
struct InverseBlockReport {
  bool ok = false;
  long rho_valuation = 0;  // rho order of the host denominator
  int block_size = 0;
  std::vector<std::string> labels;       // row/column labels of the block
  std::vector<std::string> mismatches;   // "row,col: diverges|differs"
};

InverseBlockReport check_inverse_block(const RibbonGraph& g,
                                       const std::vector<int>& S_lines);

}  // namespace ncpoly
