// Exact leading-order factorization of the first polynomial when a
// primitive-shaped connected subgraph is scaled toward zero size.
#pragma once

#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/poly.hpp"

namespace ncpoly {

// Grading: t_l -> rho^2 t_l for l in S. The leading block of the host
// polynomial must equal (leading block of the standalone subgraph rooted at
// its lowest vertex) times (polynomial of the shrunken graph), both lifted
// back to the host's variables.
struct FactorizationReport {
  bool ok = false;
  long rho_exponent = 0;  // rho power carried by the host's leading block
  Poly lead_host;         // host variables
  Poly product;           // lifted subgraph-leading times lifted quotient
  Poly difference;        // lead_host - product; zero iff ok
  Poly sub_leading;       // standalone subgraph variables
  Poly quotient_hu;       // quotient variables
  int host_lines = 0;
  int sub_lines = 0;
  int quotient_lines = 0;
};

FactorizationReport check_factorization(const RibbonGraph& g,
                                        const std::vector<int>& S_lines);

}  // namespace ncpoly
