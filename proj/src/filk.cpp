// Tree contraction splice, rosette assembly, crossings, and the admissible /
// pseudo-admissible line-subset predicates.
#include "ncpoly/filk.hpp"

#include <algorithm>
#include <numeric>

namespace ncpoly {

namespace {

// Union-find over 0..n-1.
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  // Returns false if already joined (cycle).
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
  int components() {
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
  }
};

}  // namespace

ContractResult filk_contract_to(const RibbonGraph& g, int line,
                                int keep_vertex) {
  auto ends = line_ends(g);
  if (!ends.count({line, true}))
    throw GraphError("line " + std::to_string(line) + " not in graph");
  auto [vt, it] = ends.at({line, false});
  auto [vs, is] = ends.at({line, true});
  if (vt == vs) throw GraphError("cannot contract a self-loop");
  if (keep_vertex != vt && keep_vertex != vs)
    throw GraphError("keep vertex is not an endpoint of the line");
  int vo = (keep_vertex == vt) ? vs : vt;
  int i = (keep_vertex == vt) ? it : is;
  int j = (keep_vertex == vt) ? is : it;
  const auto& wk = g.vertices[keep_vertex];
  const auto& wo = g.vertices[vo];

  // Splice: near word up to the consumed corner, then the far word starting
  // just after its consumed corner, then the rest of the near word.
  std::vector<Corner> merged;
  merged.insert(merged.end(), wk.begin(), wk.begin() + i);
  merged.insert(merged.end(), wo.begin() + j + 1, wo.end());
  merged.insert(merged.end(), wo.begin(), wo.begin() + j);
  merged.insert(merged.end(), wk.begin() + i + 1, wk.end());

  ContractResult out;
  for (int vi = 0; vi < g.n(); ++vi) {
    if (vi == vo) continue;
    out.graph.vertices.push_back(vi == keep_vertex ? merged : g.vertices[vi]);
  }
  int root = g.root;
  if (root == vo)
    out.graph.root = (keep_vertex < vo) ? keep_vertex : keep_vertex - 1;
  else
    out.graph.root = (root > vo) ? root - 1 : root;
  out.line_map = renumber_lines(out.graph);
  return out;
}

ContractResult filk_contract(const RibbonGraph& g, int tree_line) {
  auto ends = line_ends(g);
  if (!ends.count({tree_line, true}))
    throw GraphError("line " + std::to_string(tree_line) + " not in graph");
  int vt = ends.at({tree_line, false}).first;
  int vs = ends.at({tree_line, true}).first;
  if (vt == vs) throw GraphError("cannot contract a self-loop");
  if (vt != g.root && vs != g.root)
    throw GraphError("line " + std::to_string(tree_line) +
                     " has no endpoint on the root vertex");
  return filk_contract_to(g, tree_line, g.root);
}

bool is_spanning_tree(const RibbonGraph& g, const std::set<int>& t) {
  if (static_cast<int>(t.size()) != g.n() - 1) return false;
  auto ends = line_ends(g);
  UF uf(g.n());
  for (int l : t) {
    int a = ends.at({l, true}).first, b = ends.at({l, false}).first;
    if (!uf.join(a, b)) return false;  // cycle
  }
  return uf.components() == 1;
}

std::vector<std::set<int>> all_spanning_trees(const RibbonGraph& g) {
  const int L = g.line_count();
  const int need = g.n() - 1;
  std::vector<std::set<int>> out;
  std::vector<int> pick(need);
  // Enumerate combinations of `need` lines.
  std::vector<int> idx(need);
  std::iota(idx.begin(), idx.end(), 1);
  if (need == 0) {
    out.push_back({});
    return out;
  }
  if (need > L) return out;
  while (true) {
    std::set<int> cand(idx.begin(), idx.end());
    if (is_spanning_tree(g, cand)) out.push_back(cand);
    int k = need - 1;
    while (k >= 0 && idx[k] == L - (need - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int m = k + 1; m < need; ++m) idx[m] = idx[m - 1] + 1;
  }
  return out;
}

Rosette rosette(const RibbonGraph& g, const std::vector<int>& tree_lines) {
  // Default processing order: increasing BFS distance from the root.
  auto [order, seen] = spanning_tree_bfs(g, tree_lines, g.root);
  if (static_cast<int>(seen.size()) != g.n() ||
      static_cast<int>(order.size()) != g.n() - 1)
    throw GraphError("given lines do not span the graph from the root");
  std::set<int> given(tree_lines.begin(), tree_lines.end());
  std::set<int> used(order.begin(), order.end());
  if (given != used) throw GraphError("tree line set is not a tree");
  return rosette(g, tree_lines, order);
}

Rosette rosette(const RibbonGraph& g, const std::vector<int>& tree_lines,
                const std::vector<int>& order) {
  if (order.size() != tree_lines.size() ||
      std::set<int>(order.begin(), order.end()) !=
          std::set<int>(tree_lines.begin(), tree_lines.end()))
    throw GraphError("processing order must permute the tree lines");
  RibbonGraph cur = g;
  std::map<int, int> idmap;
  for (int l = 1; l <= g.line_count(); ++l) idmap[l] = l;
  for (int tl : order) {
    auto it = idmap.find(tl);
    if (it == idmap.end()) throw GraphError("tree line vanished");
    ContractResult step = filk_contract(cur, it->second);
    std::map<int, int> next_map;
    for (const auto& [orig, c] : idmap) {
      auto lm = step.line_map.find(c);
      if (lm != step.line_map.end()) next_map[orig] = lm->second;
    }
    idmap = std::move(next_map);
    cur = std::move(step.graph);
  }
  if (cur.n() != 1) throw GraphError("contraction did not reach one vertex");

  Rosette r;
  r.graph = std::move(cur);
  r.line_map = idmap;
  for (const auto& [orig, now] : idmap) r.orig_of[now] = orig;
  const auto& w = r.graph.vertices[0];
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (w[i].kind != Corner::Line) continue;
    auto& pos = r.positions[w[i].id];
    (w[i].is_src ? pos.second : pos.first) = i;
  }
  // Interleaving corner intervals on the cyclic word.
  std::vector<int> ids;
  for (const auto& [id, p] : r.positions) ids.push_back(id);
  for (size_t a = 0; a < ids.size(); ++a) {
    for (size_t b = a + 1; b < ids.size(); ++b) {
      auto [t1, s1] = r.positions[ids[a]];
      auto [t2, s2] = r.positions[ids[b]];
      int lo = std::min(t1, s1), hi = std::max(t1, s1);
      bool in1 = lo < std::min(t2, s2) && std::min(t2, s2) < hi;
      bool in2 = lo < std::max(t2, s2) && std::max(t2, s2) < hi;
      if (in1 != in2)
        r.crossing_pairs.insert(
            {std::min(r.orig_of[ids[a]], r.orig_of[ids[b]]),
             std::max(r.orig_of[ids[a]], r.orig_of[ids[b]])});
    }
  }
  return r;
}

std::set<std::pair<int, int>> nice_crossings(const Rosette& r) {
  std::set<std::pair<int, int>> out;
  const int len = static_cast<int>(r.graph.vertices[0].size());
  for (const auto& pr : r.crossing_pairs) {
    int ra = r.line_map.at(pr.first), rb = r.line_map.at(pr.second);
    auto [ta, sa] = r.positions.at(ra);
    auto [tb, sb] = r.positions.at(rb);
    // The end (target) of one is the cyclic successor of the start (source)
    // of the other.
    if (ta == (sb + 1) % len || tb == (sa + 1) % len) out.insert(pr);
  }
  return out;
}

std::set<int> genus_lines(const Rosette& r) {
  std::set<int> out;
  for (const auto& pr : nice_crossings(r)) {
    out.insert(pr.first);
    out.insert(pr.second);
  }
  return out;
}

bool admissible(const RibbonGraph& g, const std::set<int>& J) {
  const int L = g.line_count();
  auto ends = line_ends(g);
  // Complement must connect all vertices (contain a spanning tree).
  UF verts(g.n());
  for (int l = 1; l <= L; ++l) {
    if (J.count(l)) continue;
    verts.join(ends.at({l, true}).first, ends.at({l, false}).first);
  }
  if (verts.components() != 1) return false;
  // J must connect all faces through line sides (contain a dual tree).
  auto sides = line_face_sides(g);
  int F = topology(g).F;
  UF faces(F);
  for (int l : J) {
    auto it = sides.find(l);
    if (it == sides.end()) return false;
    faces.join(it->second[0], it->second[1]);
  }
  return faces.components() == 1;
}

bool pseudo_admissible(const RibbonGraph& g, const std::set<int>& J,
                       int l_tilde, int l2) {
  if (l_tilde == l2) throw GraphError("the two marked lines must differ");
  std::set<int> comp;
  for (int l = 1; l <= g.line_count(); ++l)
    if (!J.count(l)) comp.insert(l);
  if (!comp.count(l2)) return false;
  comp.erase(l2);
  if (comp.count(l_tilde)) return false;
  return is_spanning_tree(g, comp);
}

}  // namespace ncpoly
