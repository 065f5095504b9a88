// Ribbon-graph validation, face tracing, topology, and the graph surgeries
// (tree contraction is in filk.cpp; subgraph/quotient/difference here).
#include "ncpoly/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "ncpoly/filk.hpp"

namespace ncpoly {

int RibbonGraph::line_count() const {
  int m = 0;
  for (const auto& w : vertices)
    for (const auto& c : w)
      if (c.kind == Corner::Line) m = std::max(m, c.id);
  return m;
}

int RibbonGraph::ext_count() const {
  int n = 0;
  for (const auto& w : vertices)
    for (const auto& c : w)
      if (c.kind == Corner::Ext) ++n;
  return n;
}

void validate(const RibbonGraph& g) {
  if (g.vertices.empty()) throw GraphError("graph has no vertices");
  std::map<std::pair<int, bool>, std::pair<int, int>> ends;
  std::set<int> exts;
  for (int vi = 0; vi < g.n(); ++vi) {
    const auto& w = g.vertices[vi];
    if (w.empty() || w.size() % 2 != 0)
      throw GraphError("vertex " + std::to_string(vi) +
                       ": corner word length must be even and nonzero");
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const Corner& c = w[i];
      if (c.kind == Corner::Line) {
        if (c.id < 1) throw GraphError("line ids must be >= 1");
        // Orientability: target corners on "+" slots, source on "-".
        int want = c.is_src ? -1 : 1;
        if (slot_sign(i) != want)
          throw GraphError("vertex " + std::to_string(vi) + " position " +
                           std::to_string(i) + ": line " +
                           std::to_string(c.id) +
                           " end on a slot of the wrong sign (line would join "
                           "two corners of equal sign)");
        auto key = std::make_pair(c.id, c.is_src);
        if (ends.count(key))
          throw GraphError("line " + std::to_string(c.id) +
                           (c.is_src ? " source" : " target") +
                           " end appears twice");
        ends[key] = {vi, i};
      } else {
        if (c.id < 1) throw GraphError("external ids must be >= 1");
        if (!exts.insert(c.id).second)
          throw GraphError("external leg " + std::to_string(c.id) +
                           " appears twice");
      }
    }
  }
  const int L = g.line_count();
  for (int l = 1; l <= L; ++l) {
    if (!ends.count({l, true}) || !ends.count({l, false}))
      throw GraphError("line " + std::to_string(l) + " is missing an end");
  }
  if (!exts.empty()) {
    int expect = 1;
    for (int e : exts)
      if (e != expect++)
        throw GraphError("external ids are not consecutive from 1");
  }
  if (g.root < 0 || g.root >= g.n()) throw GraphError("root out of range");
  // Connectivity through internal lines.
  std::vector<std::set<int>> adj(g.n());
  for (int l = 1; l <= L; ++l) {
    int a = ends[{l, true}].first, b = ends[{l, false}].first;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> seen(g.n(), 0);
  std::deque<int> queue = {0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        queue.push_back(u);
      }
  }
  if (reached != g.n()) throw GraphError("graph is disconnected");
}

std::map<std::pair<int, bool>, std::pair<int, int>> line_ends(
    const RibbonGraph& g) {
  std::map<std::pair<int, bool>, std::pair<int, int>> ends;
  for (int vi = 0; vi < g.n(); ++vi) {
    const auto& w = g.vertices[vi];
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i].kind == Corner::Line) ends[{w[i].id, w[i].is_src}] = {vi, i};
  }
  return ends;
}

namespace {

// Virtual dart for external leg e.
Dart virt(int e) { return Dart{-1, e}; }

}  // namespace

FaceSet trace_faces(const RibbonGraph& g) {
  auto ends = line_ends(g);
  std::map<int, Dart> ext_home;  // ext id -> its real corner
  std::vector<Dart> all;
  for (int vi = 0; vi < g.n(); ++vi) {
    const auto& w = g.vertices[vi];
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      all.push_back({vi, i});
      if (w[i].kind == Corner::Ext) ext_home[w[i].id] = {vi, i};
    }
  }
  for (const auto& [e, d] : ext_home) all.push_back(virt(e));

  auto alpha = [&](const Dart& d) -> Dart {
    if (d.is_virtual()) return ext_home.at(d.pos);
    const Corner& c = g.vertices[d.vertex][d.pos];
    if (c.kind == Corner::Ext) return virt(c.id);
    auto [v, i] = ends.at({c.id, !c.is_src});
    return {v, i};
  };
  auto sigma = [&](const Dart& d) -> Dart {
    if (d.is_virtual()) return d;
    int len = static_cast<int>(g.vertices[d.vertex].size());
    return {d.vertex, (d.pos + 1) % len};
  };

  FaceSet out;
  std::set<Dart> seen;
  for (const Dart& d0 : all) {
    if (seen.count(d0)) continue;
    std::vector<Dart> face;
    bool broken = false;
    Dart d = d0;
    while (!seen.count(d)) {
      seen.insert(d);
      face.push_back(d);
      if (d.is_virtual()) broken = true;
      d = sigma(alpha(d));
    }
    int fi = static_cast<int>(out.faces.size());
    for (const Dart& fd : face)
      if (!fd.is_virtual()) out.face_of[fd] = fi;
    out.faces.push_back(std::move(face));
    if (broken) ++out.broken;
  }
  return out;
}

Topology topology(const RibbonGraph& g) {
  Topology t{};
  t.n = g.n();
  t.L = g.line_count();
  t.N = g.ext_count();
  FaceSet fs = trace_faces(g);
  t.F = static_cast<int>(fs.faces.size());
  t.B = fs.broken;
  int euler = t.n - t.L + t.F;
  if ((2 - euler) % 2 != 0 || 2 - euler < 0)
    throw GraphError("inconsistent Euler characteristic");
  t.g = (2 - euler) / 2;
  return t;
}

std::map<int, int> renumber_lines(RibbonGraph& g) {
  std::set<int> ids;
  for (const auto& w : g.vertices)
    for (const auto& c : w)
      if (c.kind == Corner::Line) ids.insert(c.id);
  std::map<int, int> lmap;
  int next = 1;
  for (int id : ids) lmap[id] = next++;
  for (auto& w : g.vertices)
    for (auto& c : w)
      if (c.kind == Corner::Line) c.id = lmap[c.id];
  return lmap;
}

void renumber_exts(RibbonGraph& g) {
  int next = 1;
  for (auto& w : g.vertices)
    for (auto& c : w)
      if (c.kind == Corner::Ext) c.id = next++;
}

std::pair<std::vector<int>, std::set<int>> spanning_tree_bfs(
    const RibbonGraph& g, const std::vector<int>& lines, int start) {
  auto ends = line_ends(g);
  std::map<int, std::vector<std::pair<int, int>>> inc;  // vertex -> (line, other)
  for (int l : lines) {
    int a = ends.at({l, true}).first, b = ends.at({l, false}).first;
    inc[a].push_back({l, b});
    inc[b].push_back({l, a});
  }
  std::set<int> seen = {start};
  std::vector<int> order;
  std::deque<int> queue = {start};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto it = inc.find(v);
    if (it == inc.end()) continue;
    auto edges = it->second;
    std::sort(edges.begin(), edges.end());
    for (auto [l, u] : edges) {
      if (!seen.count(u)) {
        seen.insert(u);
        order.push_back(l);
        queue.push_back(u);
      }
    }
  }
  return {order, seen};
}

Subgraph subgraph_of(const RibbonGraph& g, const std::vector<int>& lines) {
  if (lines.empty()) throw GraphError("empty line set");
  std::set<int> lset(lines.begin(), lines.end());
  auto ends = line_ends(g);
  std::set<int> vset;
  for (int l : lset) {
    if (!ends.count({l, true}))
      throw GraphError("line " + std::to_string(l) + " not in graph");
    vset.insert(ends.at({l, true}).first);
    vset.insert(ends.at({l, false}).first);
  }
  Subgraph out;
  out.parent_vertices.assign(vset.begin(), vset.end());
  std::vector<std::pair<int, int>> cut_positions;  // (local vertex, slot)
  for (int v : out.parent_vertices) {
    std::vector<Corner> w;
    for (const Corner& c : g.vertices[v]) {
      if (c.kind == Corner::Line && lset.count(c.id)) {
        w.push_back(c);
      } else {
        if (c.kind == Corner::Line)
          cut_positions.emplace_back(static_cast<int>(out.graph.vertices.size()),
                                     static_cast<int>(w.size()));
        w.push_back(Corner::ext(0));  // fresh stub, renumbered below
      }
    }
    out.graph.vertices.push_back(std::move(w));
  }
  out.graph.root = 0;
  renumber_exts(out.graph);
  out.line_map = renumber_lines(out.graph);
  for (auto [v, i] : cut_positions)
    out.severed_exts.insert(out.graph.vertices[v][i].id);
  return out;
}

bool lines_connected(const RibbonGraph& g, const std::vector<int>& lines) {
  if (lines.empty()) return false;
  auto ends = line_ends(g);
  std::map<int, std::vector<int>> inc;  // vertex -> neighbor vertices
  std::set<int> vset;
  for (int l : lines) {
    int a = ends.at({l, true}).first, b = ends.at({l, false}).first;
    inc[a].push_back(b);
    inc[b].push_back(a);
    vset.insert(a);
    vset.insert(b);
  }
  std::set<int> seen = {*vset.begin()};
  std::deque<int> queue = {*vset.begin()};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : inc[v])
      if (seen.insert(u).second) queue.push_back(u);
  }
  return seen == vset;
}

QuotientResult quotient(const RibbonGraph& g, const std::vector<int>& lines) {
  std::set<int> lset(lines.begin(), lines.end());
  auto ends = line_ends(g);
  std::set<int> vset;
  for (int l : lset) {
    vset.insert(ends.at({l, true}).first);
    vset.insert(ends.at({l, false}).first);
  }
  int sroot = *vset.begin();
  auto [tree, seen] = spanning_tree_bfs(g, lines, sroot);
  if (seen != vset) throw GraphError("subgraph not connected");
  {
    Topology st = topology(subgraph_of(g, lines).graph);
    if (!primitive_shape(st))
      throw GraphError(
          "quotient requires a planar one-boundary subgraph with 2 or 4 legs");
  }

  RibbonGraph cur = g;
  int merged = sroot;
  std::map<int, int> idmap;
  for (const auto& [key, pos] : ends) idmap[key.first] = key.first;
  std::vector<int> owner(g.n());
  for (int i = 0; i < g.n(); ++i) owner[i] = i;

  for (int tl : tree) {
    int cl = idmap.at(tl);
    auto e2 = line_ends(cur);
    int vt = e2.at({cl, false}).first;
    int vs = e2.at({cl, true}).first;
    int keep = (merged == vt || merged == vs) ? merged : std::min(vt, vs);
    int vo = (keep == vt) ? vs : vt;
    ContractResult step = filk_contract_to(cur, cl, keep);
    if (merged > vo) --merged;
    owner.erase(owner.begin() + vo);
    std::map<int, int> next_map;
    for (const auto& [orig, c] : idmap) {
      auto it = step.line_map.find(c);
      if (it != step.line_map.end()) next_map[orig] = it->second;
    }
    idmap = std::move(next_map);
    cur = std::move(step.graph);
  }

  // Erase the remaining internal (loop) corners of the shrunk part.
  std::set<int> drop;
  for (int l : lset) {
    auto it = idmap.find(l);
    if (it != idmap.end()) drop.insert(it->second);
  }
  std::vector<Corner> w;
  for (const Corner& c : cur.vertices[merged])
    if (!(c.kind == Corner::Line && drop.count(c.id))) w.push_back(c);
  if (w.size() % 2 != 0) throw GraphError("odd surviving corner word");
  if (w.empty()) throw GraphError("shrunk vertex has no corners left");

  // The surviving word must alternate; a rotation by one slot may be needed.
  auto alternates = [](const std::vector<Corner>& word) {
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
      if (word[i].kind != Corner::Line) continue;
      if (slot_sign(i) != (word[i].is_src ? -1 : 1)) return false;
    }
    return true;
  };
  std::vector<Corner> rotated = w;
  if (!alternates(rotated)) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (!alternates(rotated))
      throw GraphError("shrunk vertex word does not alternate");
  }

  QuotientResult out;
  cur.vertices[merged] = std::move(rotated);
  out.graph = std::move(cur);
  renumber_exts(out.graph);
  auto lmap = renumber_lines(out.graph);
  std::map<int, int> final_map;
  for (const auto& [orig, c] : idmap) {
    auto it = lmap.find(c);
    if (it != lmap.end()) final_map[orig] = it->second;
  }
  out.line_map = std::move(final_map);
  out.merged_vertex = merged;
  for (size_t i = 0; i < owner.size(); ++i) out.vertex_map[owner[i]] = i;
  validate(out.graph);
  return out;
}

DifferenceResult difference(const RibbonGraph& g,
                            const std::vector<int>& lines) {
  std::set<int> lset(lines.begin(), lines.end());
  auto ends = line_ends(g);
  std::set<int> vset;
  for (int l : lset) {
    vset.insert(ends.at({l, true}).first);
    vset.insert(ends.at({l, false}).first);
  }
  DifferenceResult out;
  std::map<int, int> vmap;
  for (int vi = 0; vi < g.n(); ++vi) {
    if (vset.count(vi)) continue;
    vmap[vi] = static_cast<int>(out.graph.vertices.size());
    std::vector<Corner> w;
    for (const Corner& c : g.vertices[vi]) {
      if (c.kind == Corner::Line) {
        if (lset.count(c.id))
          throw GraphError("subgraph line touches a kept vertex");
        int other = ends.at({c.id, !c.is_src}).first;
        w.push_back(vset.count(other) ? Corner::ext(0) : c);
      } else {
        w.push_back(Corner::ext(0));
      }
    }
    out.graph.vertices.push_back(std::move(w));
  }
  out.graph.root = vmap.count(g.root) ? vmap[g.root] : 0;
  renumber_exts(out.graph);
  out.line_map = renumber_lines(out.graph);
  if (out.graph.vertices.empty()) {
    out.disconnected = false;
    return out;
  }
  // Soft connectivity probe (disconnected results are reported, not errors).
  std::vector<int> kept_lines;
  for (const auto& [o, nw] : out.line_map) kept_lines.push_back(nw);
  if (kept_lines.empty()) {
    out.disconnected = out.graph.n() > 1;
  } else {
    auto e2 = line_ends(out.graph);
    std::set<int> touched;
    for (const auto& [key, pos] : e2) touched.insert(pos.first);
    out.disconnected = !lines_connected(out.graph, kept_lines) ||
                       static_cast<int>(touched.size()) < out.graph.n();
  }
  return out;
}

int CombMap::n_vertices() const {
  int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++count;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = sigma[x];
    }
  }
  return count;
}

int CombMap::n_faces() const {
  int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++count;
    int x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = sigma[alpha[x]];
    }
  }
  return count;
}

CombMap dual_map(const RibbonGraph& g) {
  FaceSet fs = trace_faces(g);
  auto ends = line_ends(g);
  const int L = g.line_count();
  // Dart numbering: 2*(line-1) for the target-end side, +1 for the source.
  auto dart_id = [&](const Corner& c) {
    return 2 * (c.id - 1) + (c.is_src ? 1 : 0);
  };
  CombMap m;
  m.sigma.assign(2 * L, -1);
  m.alpha.assign(2 * L, -1);
  for (int l = 1; l <= L; ++l) {
    m.alpha[2 * (l - 1)] = 2 * (l - 1) + 1;
    m.alpha[2 * (l - 1) + 1] = 2 * (l - 1);
  }
  for (const auto& face : fs.faces) {
    std::vector<int> cycle;
    for (const Dart& d : face) {
      if (d.is_virtual()) continue;
      const Corner& c = g.vertices[d.vertex][d.pos];
      if (c.kind == Corner::Line) cycle.push_back(dart_id(c));
    }
    for (size_t i = 0; i < cycle.size(); ++i)
      m.sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  for (int d = 0; d < 2 * L; ++d)
    if (m.sigma[d] < 0) throw GraphError("dual construction missed a dart");
  return m;
}

CombMap dual_map(const CombMap& m) {
  const int n = static_cast<int>(m.sigma.size());
  CombMap out;
  out.alpha = m.alpha;
  out.sigma.assign(n, -1);
  for (int d = 0; d < n; ++d) out.sigma[d] = m.sigma[m.alpha[d]];
  return out;
}

std::map<int, std::array<int, 2>> line_face_sides(const RibbonGraph& g) {
  FaceSet fs = trace_faces(g);
  auto ends = line_ends(g);
  std::map<int, std::array<int, 2>> out;
  for (int l = 1; l <= g.line_count(); ++l) {
    auto [vt, it] = ends.at({l, false});
    auto [vs, is] = ends.at({l, true});
    out[l] = {fs.face_of.at({vt, it}), fs.face_of.at({vs, is})};
  }
  return out;
}

bool primitive_shape(const Topology& t) {
  return t.g == 0 && t.B == 1 && (t.N == 2 || t.N == 4);
}

int resolve_max_lines() {
  const char* env = std::getenv("NCPOLY_MAX_L");
  if (!env || !*env) return 12;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 62)
    throw GraphError("NCPOLY_MAX_L must be an integer in 1..62");
  return static_cast<int>(v);
}

}  // namespace ncpoly
