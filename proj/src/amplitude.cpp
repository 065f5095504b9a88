// Deterministic graded-mesh quadrature and the subtracted-sum assembly.
#include "ncpoly/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "ncpoly/parametric.hpp"
#include "ncpoly/power_counting.hpp"

namespace ncpoly {

namespace {

// 4-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[4] = {-0.8611363115940526, -0.3399810435848563,
                              0.3399810435848563, 0.8611363115940526};
constexpr double kWeights[4] = {0.3478548451374538, 0.6521451548625461,
                                0.6521451548625461, 0.3478548451374538};

// Graded boundaries: 0, 2^-m, ..., 1/2, ..., 1-2^-m, 1 (2m intervals).
std::vector<double> graded_boundaries(int m) {
  std::vector<double> b;
  b.push_back(0.0);
  for (int k = m; k >= 1; --k) b.push_back(std::ldexp(1.0, -k));
  for (int k = 2; k <= m; ++k) b.push_back(1.0 - std::ldexp(1.0, -k));
  b.push_back(1.0);
  return b;
}

double eval_point(const IntegrandSpec& spec, const std::vector<double>& t,
                  double dim) {
  double total = 0.0;
  std::vector<double> point;
  for (const auto& term : spec.terms) {
    double prod = term.sign;
    for (const auto& f : term.factors) {
      point.assign(f.axis.size(), 0.0);
      for (size_t v = 0; v < f.axis.size(); ++v)
        point[v] = f.axis[v] < 0 ? spec.s_value : t[f.axis[v]];
      double base = f.poly.eval_double(point);
      prod *= std::pow(base, -dim / 2.0);
    }
    total += prod;
  }
  double measure = 1.0;
  for (int l = 0; l < spec.L; ++l)
    measure *= std::pow(1.0 - t[l] * t[l], dim / 2.0 - 1.0);
  return total * measure;
}

// One full sweep at grading depth m; deterministic cell order, compensated
// summation. Cells live in u-space; the integrand is evaluated at t = u^kappa
// with the jacobian kappa * u^(kappa-1) folded into the weight.
double sweep(const IntegrandSpec& spec, int m, long* cells_out) {
  const int L = spec.L;
  const int kap = std::max(1, spec.kappa);
  const double dim = mpq_get_d(spec.dim.get_mpq_t());
  std::vector<double> b = graded_boundaries(m);
  const int nint = static_cast<int>(b.size()) - 1;
  std::vector<int> idx(L, 0);
  std::vector<double> t(L);
  double sum = 0.0, comp = 0.0;
  long cells = 0;
  bool done = false;
  while (!done) {
    // Tensor Gauss rule over this cell.
    double cell = 0.0;
    std::vector<int> gi(L, 0);
    bool gdone = false;
    while (!gdone) {
      double w = 1.0;
      for (int a = 0; a < L; ++a) {
        double lo = b[idx[a]], hi = b[idx[a] + 1];
        double half = 0.5 * (hi - lo);
        double u = 0.5 * (lo + hi) + half * kNodes[gi[a]];
        t[a] = kap == 1 ? u : std::pow(u, kap);
        w *= half * kWeights[gi[a]];
        if (kap > 1) w *= kap * std::pow(u, kap - 1);
      }
      if (w != 0.0) cell += w * eval_point(spec, t, dim);
      for (int a = 0;; ++a) {
        if (a == L) {
          gdone = true;
          break;
        }
        if (++gi[a] < 4) break;
        gi[a] = 0;
      }
    }
    double y = cell - comp;
    double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    ++cells;
    for (int a = 0;; ++a) {
      if (a == L) {
        done = true;
        break;
      }
      if (++idx[a] < nint) break;
      idx[a] = 0;
    }
  }
  if (cells_out) *cells_out = cells;
  return sum;
}

// Largest grading depth whose sweep stays within the evaluation budget.
int max_depth(int L) {
  const double budget = 3.0e7;  // Gauss-point evaluations per sweep
  int m = 1;
  while (std::pow(8.0 * (m + 1), L) <= budget) ++m;
  return m;
}

}  // namespace

IntegrationResult integrate(const IntegrandSpec& spec, double rel_tol,
                            int extra_floor) {
  if (spec.L < 1) throw std::domain_error("integrand has no axes");
  if (rel_tol <= 0) throw std::domain_error("rel_tol must be positive");
  const int cap = max_depth(spec.L);
  int m = std::min(6, cap - 1);
  if (m < 1) m = 1;
  m += extra_floor;
  long cells = 0;
  double prev = sweep(spec, m, &cells);
  long total_cells = cells;
  while (true) {
    int next = m + 1;
    if (next > cap + extra_floor)
      throw std::runtime_error(
          "integration tolerance unreachable within the cell budget");
    double cur = sweep(spec, next, &cells);
    total_cells += cells;
    double err = std::fabs(cur - prev);
    if (err <= rel_tol * std::max(std::fabs(cur), 1e-300)) {
      IntegrationResult res;
      res.value = cur;
      res.abs_err = err;
      res.cells = total_cells;
      res.floor_level = next;
      return res;
    }
    prev = cur;
    m = next;
  }
}

IntegrandSpec plain_spec(const RibbonGraph& g, const Rat& D, double s_value) {
  validate(g);
  IntegrandSpec spec;
  spec.L = g.line_count();
  spec.dim = D;
  spec.s_value = s_value;
  IntegrandSpec::Term t;
  t.sign = 1;
  IntegrandFactor f;
  f.poly = hu_det(g);
  f.axis.resize(spec.L + 1);
  for (int l = 0; l < spec.L; ++l) f.axis[l] = l;
  f.axis[spec.L] = -1;
  t.factors.push_back(std::move(f));
  spec.terms.push_back(std::move(t));
  return spec;
}

namespace {

void check_plain_gate(const RibbonGraph& g, const Rat& D) {
  if (D <= 0) throw std::domain_error("dimension must be positive");
  for (const auto& sc : classify(g).subgraphs) {
    if (sc.bprime <= 0) continue;
    Rat threshold = Rat(2 * sc.topo.L) / sc.bprime;
    if (D >= threshold)
      throw std::domain_error(
          "dimension " + rat_str(D) + " is not below the divergence "
          "threshold " + rat_str(threshold) + " of a subgraph; supply "
          "subtraction terms");
  }
}

// Substitution exponent from the smallest integrability gap (in the scaling
// degree): gap >= 4 needs none; below that, ~4/gap levels the tail.
int kappa_for(double min_gap) {
  if (min_gap >= 4.0 || min_gap <= 0.0) return 1;
  double k = std::ceil(4.0 / min_gap);
  return static_cast<int>(std::min(k, 128.0));
}

}  // namespace

IntegrationResult integrate_graph(const RibbonGraph& g, const Rat& D,
                                  double s_value, double rel_tol) {
  check_plain_gate(g, D);
  IntegrandSpec spec = plain_spec(g, D, s_value);
  double gap = 4.0;
  for (const auto& sc : classify(g).subgraphs) {
    if (sc.bprime <= 0) continue;
    Rat gr = Rat(2 * sc.topo.L) - D * Rat(sc.bprime);
    gap = std::min(gap, mpq_get_d(gr.get_mpq_t()));
  }
  spec.kappa = kappa_for(gap);
  return integrate(spec, rel_tol);
}

IntegrandSpec renormalized_spec(const RibbonGraph& g, const Rat& D,
                                double s_value) {
  validate(g);
  if (D <= 0) throw std::domain_error("dimension must be positive");
  if (D > 4)
    throw std::domain_error("subtracted integrand is built for D <= 4");
  SubtractionBlueprint bp = renormalized_blueprint(g);

  // Unsubtractable divergences (wrong shape for shrinking) still gate D.
  std::set<std::vector<int>> prim;
  for (const auto& ct : bp.subgraphs) prim.insert(ct.lines);
  for (const auto& sc : classify(g).subgraphs) {
    if (sc.bprime <= 0 || prim.count(sc.lines)) continue;
    Rat threshold = Rat(2 * sc.topo.L) / sc.bprime;
    if (D >= threshold)
      throw std::domain_error(
          "a divergent subgraph has no shrinkable shape; no counterterm "
          "covers dimension " + rat_str(D));
  }

  IntegrandSpec spec;
  spec.L = g.line_count();
  spec.dim = D;
  spec.s_value = s_value;
  const int host_nv = spec.L + 1;

  // Substitution exponent: subtracted subgraphs are softened by two scaling
  // orders; everything else keeps its plain gap.
  {
    std::map<std::vector<int>, const CountertermData*> by_lines;
    for (const auto& ct : bp.subgraphs) by_lines[ct.lines] = &ct;
    double gap = 4.0;
    for (const auto& sc : classify(g).subgraphs) {
      if (sc.bprime <= 0) continue;
      auto it = by_lines.find(sc.lines);
      Rat gr = Rat(2 * sc.topo.L) - D * Rat(sc.bprime);
      if (it != by_lines.end() && tau_active(*it->second, D))
        gr += 2;
      if (gr <= 0)
        throw std::domain_error(
            "subtracted integrand still diverges at dimension " + rat_str(D));
      gap = std::min(gap, mpq_get_d(gr.get_mpq_t()));
    }
    spec.kappa = kappa_for(gap);
  }

  for (const auto& term : bp.terms) {
    // A single vanishing truncation kills the whole product.
    bool dead = false;
    for (int mi : term.members)
      if (!tau_active(bp.subgraphs[mi], D)) {
        dead = true;
        break;
      }
    if (dead && !term.members.empty()) continue;
    IntegrandSpec::Term out;
    out.sign = term.sign;
    if (term.members.empty()) {
      IntegrandFactor f;
      f.poly = hu_det(g);
      f.axis.resize(host_nv);
      for (int l = 0; l < spec.L; ++l) f.axis[l] = l;
      f.axis[spec.L] = -1;
      out.factors.push_back(std::move(f));
      spec.terms.push_back(std::move(out));
      continue;
    }
    // Active members must keep only the leading truncation order (the
    // subleading operator slot carries no computable integrand) and must
    // not nest.
    for (int mi : term.members) {
      long kept = tau_kept_orders(bp.subgraphs[mi], D);
      if (kept > 1)
        throw std::domain_error(
            "counterterm beyond leading truncation order is not evaluable");
    }
    for (size_t a = 0; a < term.members.size(); ++a)
      for (size_t b = a + 1; b < term.members.size(); ++b) {
        const auto& A = bp.subgraphs[term.members[a]].lines;
        const auto& B = bp.subgraphs[term.members[b]].lines;
        for (int x : A)
          if (std::find(B.begin(), B.end(), x) != B.end())
            throw std::domain_error(
                "nested active counterterms are not evaluable numerically");
      }
    // Product of per-member leading factors, then the iterated quotient.
    RibbonGraph cur = g;
    std::map<int, int> host_of;  // current line id -> host line id
    for (int l = 1; l <= spec.L; ++l) host_of[l] = l;
    for (int mi : term.members) {
      const CountertermData& ct = bp.subgraphs[mi];
      IntegrandFactor f;
      f.poly = ct.sub_leading;
      f.axis.assign(f.poly.nvars(), -1);
      for (const auto& [host, child] : ct.sub_line_map)
        f.axis[child - 1] = host - 1;
      out.factors.push_back(std::move(f));
      // Shrink this member inside the running quotient.
      std::map<int, int> cur_of_host;
      for (const auto& [c, h] : host_of) cur_of_host[h] = c;
      std::vector<int> img;
      for (int l : ct.lines) img.push_back(cur_of_host.at(l));
      QuotientResult q = quotient(cur, img);
      std::map<int, int> next_of;
      for (const auto& [c, h] : host_of) {
        auto it = q.line_map.find(c);
        if (it != q.line_map.end()) next_of[it->second] = h;
      }
      host_of = std::move(next_of);
      cur = std::move(q.graph);
    }
    if (cur.line_count() > 0 || cur.n() > 1 || !cur.vertices[0].empty()) {
      IntegrandFactor f;
      f.poly = hu_det(cur);
      f.axis.assign(f.poly.nvars(), -1);
      for (const auto& [c, h] : host_of) f.axis[c - 1] = h - 1;
      out.factors.push_back(std::move(f));
    }
    spec.terms.push_back(std::move(out));
  }
  return spec;
}

IntegrationResult integrate_renormalized(const RibbonGraph& g, const Rat& D,
                                         double s_value, double rel_tol,
                                         int extra_floor) {
  return integrate(renormalized_spec(g, D, s_value), rel_tol, extra_floor);
}

ResidueFit fit_residue(const RibbonGraph& g, const Rat& pole,
                       const std::vector<Rat>& samples, double rel_tol) {
  std::vector<Rat> known = pole_locations(g);
  if (std::find(known.begin(), known.end(), pole) == known.end())
    throw std::domain_error("no divergent subgraph produces a pole at " +
                            rat_str(pole));
  if (samples.size() < 2)
    throw std::domain_error("need at least two samples");
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i] >= pole)
      throw std::domain_error("samples must stay below the pole");
    if (i && samples[i] <= samples[i - 1])
      throw std::domain_error("samples must increase toward the pole");
  }
  ResidueFit fit;
  for (const Rat& d : samples)
    fit.values.push_back(integrate_graph(g, d, 1.0, rel_tol).value);
  for (size_t i = 1; i < fit.values.size(); ++i)
    if (fit.values[i] <= fit.values[i - 1])
      throw std::runtime_error(
          "values do not blow up monotonically; wrong pole location?");
  double dpole = mpq_get_d(pole.get_mpq_t());
  std::vector<double> prods;
  for (size_t i = 0; i < samples.size(); ++i)
    prods.push_back(fit.values[i] *
                    (dpole - mpq_get_d(samples[i].get_mpq_t())));
  double mean = 0;
  for (double p : prods) mean += p;
  mean /= prods.size();
  fit.residue = mean;
  for (double p : prods)
    fit.drift = std::max(fit.drift, std::fabs(p - mean) / std::fabs(mean));
  return fit;
}

}  // namespace ncpoly
