// First Symanzik polynomial of a ribbon graph via two independent routes:
// a polynomial determinant and a Pfaffian minor expansion, plus the exact
// determinant identity relating the dimension-D block matrix to the base one.
#pragma once

#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/matrix.hpp"
#include "ncpoly/poly.hpp"

namespace ncpoly {

// Integer building blocks of the quadratic form. E is 2L x 2L antisymmetric
// (u rows/cols first, then v); Cu/Cv are L x (n-1), one column per non-root
// vertex in increasing vertex order (vertex_of_column records the ids).
struct ParametricMatrices {
  int L = 0;
  int n = 0;
  std::vector<std::vector<int>> E;
  std::vector<std::vector<int>> Cu;
  std::vector<std::vector<int>> Cv;
  std::vector<int> vertex_of_column;
};

ParametricMatrices build_matrices(const RibbonGraph& g);

// The (2L+n-1)-square polynomial matrix over t1..tL, s whose determinant is
// the first polynomial: u rows are cleared of 1/t by a t-row-scaling that is
// already folded into the determinant identity.
PolyMat hu_matrix(const RibbonGraph& g);

// Exact polynomial, variables t1..tL then s.
Poly hu_det(const RibbonGraph& g);

// Same polynomial from the Pfaffian-squared expansion over row/column
// deletions. Throws std::logic_error if any surviving minor would demand a
// negative s exponent (internal consistency guard).
Poly hu_pfaffian_sum(const RibbonGraph& g);

// Leading block under t_l -> rho^2 t_l for l in S: returns the rho exponent
// (twice the minimal total S-degree) and the part realizing it.
struct Leading {
  long rho_exponent = 0;
  Poly part;
};
Leading leading_terms(const Poly& hu, const std::vector<int>& S_lines);

// Exact check, at a rational sample point, that the determinant of the
// D-fold expansion A (x) I_D - B (x) sigma equals det(A + B)^D, where sigma
// is the block diagonal of D/2 copies of the symmetric involution
// [[0,1],[1,0]] (eigenvalues +1/-1). D must be even and every t nonzero.
struct DetQReport {
  bool ok = false;
  Rat det_q;
  Rat det_m;
  int dim_q = 0;
};
DetQReport check_detq(const RibbonGraph& g, int D, const std::vector<Rat>& t_values,
                      const Rat& s_value);

}  // namespace ncpoly
