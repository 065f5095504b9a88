// Deterministic numerical integration of parametric integrands on (0,1)^L:
// plain amplitudes inside the convergence region, pole-residue ladders, and
// the signed subtracted sum that stays finite at the pole.
#pragma once

#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/poly.hpp"
#include "ncpoly/renormalization.hpp"

namespace ncpoly {

// One multiplicative factor: a positive polynomial raised to -D/2. axis[v]
// maps the polynomial's variable v to a t axis (0-based), or -1 for the
// fixed s value.
struct IntegrandFactor {
  Poly poly;
  std::vector<int> axis;
};

// Signed sum of factor products, integrated against the common measure
// prod_l (1 - t_l^2)^(D/2 - 1) over the open unit cube. kappa applies the
// per-axis substitution t = u^kappa so that weak endpoint singularities
// (integrability margin gamma in the scaling degree) turn into meshes the
// graded rule resolves: the resolved scale gains a factor kappa, chosen as
// ~4/gamma by the builders.
struct IntegrandSpec {
  int L = 0;
  Rat dim;  // exact D; exponents use its double image
  double s_value = 1.0;
  int kappa = 1;
  struct Term {
    int sign = 1;
    std::vector<IntegrandFactor> factors;
  };
  std::vector<Term> terms;
};

struct IntegrationResult {
  double value = 0;
  double abs_err = 0;
  long cells = 0;
  int floor_level = 0;  // mesh grading depth of the accepted sweep
};

// Unsubtracted integrand of a graph at dimension D and fixed s.
IntegrandSpec plain_spec(const RibbonGraph& g, const Rat& D, double s_value);

// Signed identity-plus-counterterms integrand; forests whose members are
// all active and pairwise disjoint are supported (active nesting is not).
IntegrandSpec renormalized_spec(const RibbonGraph& g, const Rat& D,
                                double s_value);

// Graded-dyadic deterministic quadrature: geometric subdivision toward both
// endpoints with a per-cell tensor Gauss rule; the grading depth is escalated
// until two successive sweeps agree within rel_tol. Throws when the cell
// budget is exhausted first.
IntegrationResult integrate(const IntegrandSpec& spec, double rel_tol,
                            int extra_floor = 0);

// Plain amplitude with the convergence gate: refuses any D at or beyond a
// divergent subgraph's 2L/b' threshold.
IntegrationResult integrate_graph(const RibbonGraph& g, const Rat& D,
                                  double s_value, double rel_tol);

// Subtracted amplitude, valid through D = 4 for subgraphs whose kept
// truncation order is at most the leading one.
IntegrationResult integrate_renormalized(const RibbonGraph& g, const Rat& D,
                                         double s_value, double rel_tol,
                                         int extra_floor = 0);

// Integrates at each sample (all strictly below the pole, increasing),
// checks monotone growth, and fits value * (pole - D) to a constant.
struct ResidueFit {
  double residue = 0;
  double drift = 0;  // max relative deviation from the fitted constant
  std::vector<double> values;
};
ResidueFit fit_residue(const RibbonGraph& g, const Rat& pole,
                       const std::vector<Rat>& samples, double rel_tol);

}  // namespace ncpoly
