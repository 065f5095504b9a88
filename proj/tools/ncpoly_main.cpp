// ncpoly: JSON command-line front end over the ribbon-graph engine.
// Exit codes: 0 success, 1 internal failure, 2 rejected input/precondition.
#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ncpoly/amplitude.hpp"
#include "ncpoly/corpus.hpp"
#include "ncpoly/factorization.hpp"
#include "ncpoly/graph.hpp"
#include "ncpoly/graph_json.hpp"
#include "ncpoly/inverse_block.hpp"
#include "ncpoly/parametric.hpp"
#include "ncpoly/poly.hpp"
#include "ncpoly/power_counting.hpp"
#include "ncpoly/renormalization.hpp"

namespace {

using nlohmann::json;
using namespace ncpoly;

// Rationals are always serialized with an explicit denominator.
std::string rat_pq(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json rat_list(const std::vector<Rat>& rs) {
  json a = json::array();
  for (const Rat& r : rs) a.push_back(rat_pq(r));
  return a;
}

// "p/q", integer, or plain decimal ("3.95") -> exact rational.
Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string t = text;
  auto bad = [&] {
    throw std::invalid_argument("cannot parse rational: " + text);
  };
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '.' &&
        c != '-' && c != '+')
      bad();
  if (t.find('.') != std::string::npos) {
    if (t.find('/') != std::string::npos) bad();
    size_t dot = t.find('.');
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") bad();
    try {
      Rat r(digits);
      for (size_t i = 0; i < frac_len; ++i) r /= 10;
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      bad();
    }
  }
  try {
    Rat r(t);
    if (r.get_den() == 0) bad();
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    bad();
  }
  return 0;  // unreachable
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) throw std::invalid_argument("empty id in list");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else {
      throw std::invalid_argument("line list must be comma-separated ids");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty line list");
  return out;
}

struct Common {
  std::string graph_path;
  int root = -1;  // -1: keep the file's root
  bool pretty = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_root = true) {
  cmd->add_option("graph", c.graph_path, "input graph JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  if (with_root)
    cmd->add_option("--root", c.root, "re-root the graph at this vertex");
  cmd->add_flag("--pretty", c.pretty, "indent the JSON output");
}

RibbonGraph load_common(const Common& c) {
  RibbonGraph g = load_graph_file(c.graph_path);
  if (c.root >= 0) {
    g.root = c.root;
    validate(g);
  }
  return g;
}

void emit(const json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

std::vector<int> all_lines(const RibbonGraph& g) {
  std::vector<int> out(g.line_count());
  for (int l = 1; l <= g.line_count(); ++l) out[l - 1] = l;
  return out;
}

json topology_json(const Topology& t) {
  return {{"n", t.n}, {"L", t.L}, {"N", t.N},
          {"F", t.F}, {"g", t.g}, {"B", t.B}};
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact parametric polynomials, divergence analysis and numeric "
      "amplitudes of oriented four-valent ribbon graphs"};
  app.require_subcommand(1);

  // --- topology ---
  Common c_topo;
  CLI::App* topo = app.add_subcommand("topology", "vertex/line/face counts");
  add_common(topo, c_topo);

  // --- hu ---
  Common c_hu;
  std::string method = "det";
  CLI::App* hu = app.add_subcommand("hu", "first parametric polynomial");
  add_common(hu, c_hu);
  hu->add_option("--method", method, "det or pfaffian")
      ->check(CLI::IsMember({"det", "pfaffian"}));

  // --- leading ---
  Common c_lead;
  std::string lead_sub;
  CLI::App* lead =
      app.add_subcommand("leading", "leading block under subgraph rescaling");
  add_common(lead, c_lead);
  lead->add_option("--subgraph", lead_sub, "comma-separated line ids")
      ->required();

  // --- factorize ---
  Common c_fact;
  std::string fact_sub;
  CLI::App* fact = app.add_subcommand(
      "factorize", "leading block versus subgraph-times-quotient product");
  add_common(fact, c_fact);
  fact->add_option("--subgraph", fact_sub, "comma-separated line ids")
      ->required();

  // --- inverse-block ---
  Common c_inv;
  std::string inv_sub;
  CLI::App* inv = app.add_subcommand(
      "inverse-block",
      "matrix-inverse block limit versus the shrunken graph's block");
  add_common(inv, c_inv);
  inv->add_option("--subgraph", inv_sub, "comma-separated line ids")
      ->required();

  // --- divergences ---
  Common c_div;
  CLI::App* divc =
      app.add_subcommand("divergences", "per-subgraph scaling classification");
  add_common(divc, c_div);

  // --- poles ---
  Common c_pol;
  CLI::App* pol =
      app.add_subcommand("poles", "dimensional-regularization pole locations");
  add_common(pol, c_pol);

  // --- forests ---
  Common c_for;
  CLI::App* for_ = app.add_subcommand(
      "forests", "nested-or-disjoint families of shrinkable subgraphs");
  add_common(for_, c_for);

  // --- renorm-plan ---
  Common c_plan;
  CLI::App* plan = app.add_subcommand(
      "renorm-plan", "signed counterterm blueprint for the integrator");
  add_common(plan, c_plan);

  // --- integrate ---
  Common c_int;
  std::string dim_text;
  double rel_tol = 1e-3, s_value = 1.0;
  bool renormalized = false;
  int extra_floor = 0;
  CLI::App* integ =
      app.add_subcommand("integrate", "deterministic numeric amplitude");
  add_common(integ, c_int);
  integ->add_option("--dim", dim_text, "dimension D, rational or decimal")
      ->required();
  integ->add_option("--rel-tol", rel_tol, "relative tolerance (default 1e-3)");
  integ->add_option("--s", s_value, "fixed parameter value (default 1)");
  integ->add_flag("--renormalized", renormalized,
                  "integrate the subtracted sum");
  integ->add_option("--extra-floor", extra_floor,
                    "extra mesh grading depth (diagnostics)");

  // --- gen-corpus ---
  bool pretty_corpus = false;
  int max_lines = 4, count = 20;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::string out_dir;
  CLI::App* gen = app.add_subcommand(
      "gen-corpus", "deterministic graph corpus (exhaustive or seeded)");
  gen->add_option("--max-lines", max_lines, "line-count cap (default 4)");
  gen->add_option("--seed", seed, "random mode with this seed");
  gen->add_option("--count", count, "graphs to draw in random mode");
  gen->add_option("--out-dir", out_dir,
                  "write one graph file per entry instead of stdout");
  gen->add_flag("--pretty", pretty_corpus, "indent the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (topo->parsed()) {
    RibbonGraph g = load_common(c_topo);
    emit(topology_json(topology(g)), c_topo.pretty);
    return 0;
  }

  if (hu->parsed()) {
    RibbonGraph g = load_common(c_hu);
    Poly p = method == "det" ? hu_det(g) : hu_pfaffian_sum(g);
    auto names = t_s_names(g.line_count());
    Leading gl = leading_terms(p, all_lines(g));
    json j = {{"method", method},
              {"polynomial", p.str(names)},
              {"leading",
               {{"rho_exponent", gl.rho_exponent}, {"part", gl.part.str(names)}}}};
    emit(j, c_hu.pretty);
    return 0;
  }

  if (lead->parsed()) {
    RibbonGraph g = load_common(c_lead);
    std::vector<int> S = parse_id_list(lead_sub);
    Leading l = leading_terms(hu_det(g), S);
    json j = {{"subgraph", S},
              {"rho_exponent", l.rho_exponent},
              {"part", l.part.str(t_s_names(g.line_count()))}};
    emit(j, c_lead.pretty);
    return 0;
  }

  if (fact->parsed()) {
    RibbonGraph g = load_common(c_fact);
    std::vector<int> S = parse_id_list(fact_sub);
    FactorizationReport r = check_factorization(g, S);
    auto host_names = t_s_names(r.host_lines);
    json j = {{"factorizes", r.ok},
              {"subgraph", S},
              {"rho_exponent", r.rho_exponent},
              {"host_leading", r.lead_host.str(host_names)},
              {"subgraph_leading", r.sub_leading.str(t_s_names(r.sub_lines))},
              {"quotient_hu", r.quotient_hu.str(t_s_names(r.quotient_lines))},
              {"product", r.product.str(host_names)},
              {"difference", r.difference.str(host_names)}};
    emit(j, c_fact.pretty);
    return 0;
  }

  if (inv->parsed()) {
    RibbonGraph g = load_common(c_inv);
    std::vector<int> S = parse_id_list(inv_sub);
    InverseBlockReport r = check_inverse_block(g, S);
    json j = {{"holds", r.ok},
              {"subgraph", S},
              {"rho_valuation", r.rho_valuation},
              {"block_size", r.block_size},
              {"labels", r.labels},
              {"mismatches", r.mismatches}};
    emit(j, c_inv.pretty);
    return 0;
  }

  if (divc->parsed()) {
    RibbonGraph g = load_common(c_div);
    DivergenceReport r = classify(g);
    json subs = json::array();
    for (const SubgraphClass& s : r.subgraphs) {
      json e = topology_json(s.topo);
      e["lines"] = s.lines;
      e["b_prime"] = s.bprime;
      e["bound"] = s.bound;
      e["equality_case"] = s.equality_case;
      e["bound_ok"] = s.bound_ok;
      e["primitive"] = s.primitive;
      e["poles"] = rat_list(s.poles);
      e["stub_only_broken"] = s.stub_only_broken;
      e["true_only_broken"] = s.true_only_broken;
      e["mixed_broken"] = s.mixed_broken;
      subs.push_back(std::move(e));
    }
    AnalyticityStrip strip = analyticity_strip(g);
    json j = {{"subgraphs", subs},
              {"analyticity",
               {{"always_hi", rat_pq(strip.always_hi)},
                {"extended", strip.extended ? json(rat_pq(*strip.extended))
                                            : json(nullptr)}}}};
    emit(j, c_div.pretty);
    return 0;
  }

  if (pol->parsed()) {
    RibbonGraph g = load_common(c_pol);
    emit(json{{"poles", rat_list(pole_locations(g))}}, c_pol.pretty);
    return 0;
  }

  if (for_->parsed()) {
    RibbonGraph g = load_common(c_for);
    json prim = json::array();
    for (const auto& lines : primitive_subgraphs(g)) prim.push_back(lines);
    json terms = json::array();
    for (const ForestTerm& t : forests(g))
      terms.push_back({{"members", t.members}, {"sign", t.sign}});
    emit(json{{"primitives", prim}, {"forests", terms}}, c_for.pretty);
    return 0;
  }

  if (plan->parsed()) {
    RibbonGraph g = load_common(c_plan);
    SubtractionBlueprint bp = renormalized_blueprint(g);
    json subs = json::array();
    for (const CountertermData& ct : bp.subgraphs) {
      int ls = static_cast<int>(ct.lines.size());
      subs.push_back({{"lines", ct.lines},
                      {"two_L", ct.two_L},
                      {"loops", ct.loops},
                      {"two_point", ct.two_point},
                      {"poles", rat_list(ct.poles)},
                      {"leading", ct.sub_leading.str(t_s_names(ls))},
                      {"quotient", graph_to_json(ct.quotient_graph)}});
    }
    json terms = json::array();
    for (const ForestTerm& t : bp.terms)
      terms.push_back({{"members", t.members}, {"sign", t.sign}});
    emit(json{{"subgraphs", subs}, {"terms", terms}}, c_plan.pretty);
    return 0;
  }

  if (integ->parsed()) {
    RibbonGraph g = load_common(c_int);
    Rat D = parse_rat(dim_text);
    IntegrationResult r =
        renormalized
            ? integrate_renormalized(g, D, s_value, rel_tol, extra_floor)
            : integrate_graph(g, D, s_value, rel_tol);
    json j = {{"value", r.value},
              {"abs_err", r.abs_err},
              {"cells", r.cells},
              {"settings",
               {{"dim", rat_pq(D)},
                {"s", s_value},
                {"rel_tol", rel_tol},
                {"renormalized", renormalized},
                {"extra_floor", extra_floor},
                {"floor_level", r.floor_level}}}};
    emit(j, c_int.pretty);
    return 0;
  }

  if (gen->parsed()) {
    seeded = gen->count("--seed") > 0;
    std::vector<RibbonGraph> corpus =
        seeded ? corpus_random(count, max_lines, seed)
               : corpus_exhaustive(max_lines);
    if (!out_dir.empty()) {
      json files = json::array();
      for (size_t i = 0; i < corpus.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "corpus_%04zu.json", i);
        std::string path = out_dir + "/" + name;
        save_graph_file(corpus[i], path);
        files.push_back(path);
      }
      emit(json{{"count", corpus.size()}, {"files", files}}, pretty_corpus);
    } else {
      json graphs = json::array();
      for (const RibbonGraph& g : corpus) graphs.push_back(graph_to_json(g));
      emit(json{{"count", corpus.size()}, {"graphs", graphs}}, pretty_corpus);
    }
    return 0;
  }

  return 1;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
