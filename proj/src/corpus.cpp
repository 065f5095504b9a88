// Exhaustive and seeded-random corpora of four-valent ribbon graphs.
#include "ncpoly/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace ncpoly {

namespace {

// One canonical attempt: BFS from `start` whose word is rotated by `rot0`;
// vertices are labeled in discovery order and each discovered word is
// rotated (by an even amount) so its entry corner sits at position 0 or 1.
// Lines and legs are renumbered by first occurrence. Returns the serialized
// form of the relabeled graph.
std::string bfs_serialize(const RibbonGraph& g, int start, int rot0) {
  const int n = g.n();
  auto ends = line_ends(g);
  std::vector<int> label(n, -1), rot(n, 0);
  std::vector<int> order;
  label[start] = 0;
  rot[start] = rot0;
  order.push_back(start);
  std::map<int, int> line_new, ext_new;
  std::string out;
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    const auto& w = g.vertices[v];
    const int len = static_cast<int>(w.size());
    out += "|";
    for (int i = 0; i < len; ++i) {
      const Corner& c = w[(i + rot[v]) % len];
      if (c.kind == Corner::Ext) {
        auto [it, fresh] = ext_new.try_emplace(c.id, ext_new.size() + 1);
        out += "E" + std::to_string(it->second);
        continue;
      }
      auto [it, fresh] = line_new.try_emplace(c.id, line_new.size() + 1);
      out += (c.is_src ? "s" : "t") + std::to_string(it->second);
      // Discover the far endpoint.
      auto [ov, op] = ends.at({c.id, !c.is_src});
      if (label[ov] < 0) {
        label[ov] = static_cast<int>(order.size());
        const int olen = static_cast<int>(g.vertices[ov].size());
        // Rotate the far word so the entry corner lands at slot 0 or 1.
        int want = op % 2;
        rot[ov] = ((op - want) % olen + olen) % olen;
        order.push_back(ov);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) return {};  // disconnected
  return out;
}

}  // namespace

std::string canonical_key(const RibbonGraph& g) {
  std::string best;
  for (int v = 0; v < g.n(); ++v) {
    const int len = static_cast<int>(g.vertices[v].size());
    for (int r = 0; r < len; r += 2) {
      std::string s = bfs_serialize(g, v, r);
      if (!s.empty() && (best.empty() || s < best)) best = std::move(s);
    }
  }
  if (best.empty()) throw GraphError("canonical key of a disconnected graph");
  return best;
}

namespace {

struct Shape {
  std::vector<std::pair<int, int>> lines;  // (src vertex, tgt vertex)
  int n = 0;
};

// All connected directed multigraph shapes with L lines, each vertex with
// at most two source-ends and two target-ends, vertices first-touch ordered.
void enumerate_shapes(int L, std::vector<Shape>& out) {
  std::vector<std::pair<int, int>> lines;
  std::vector<int> src_cnt, tgt_cnt;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == L) {
      // Connectivity over the line set.
      int n = static_cast<int>(src_cnt.size());
      std::vector<int> uf(n);
      for (int i = 0; i < n; ++i) uf[i] = i;
      auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
      };
      for (auto [a, b] : lines) uf[find(a)] = find(b);
      int roots = 0;
      for (int i = 0; i < n; ++i) roots += find(i) == i;
      if (roots == 1) out.push_back({lines, n});
      return;
    }
    int used = static_cast<int>(src_cnt.size());
    for (int a = 0; a <= used; ++a) {
      if (a == used) {
        src_cnt.push_back(0);
        tgt_cnt.push_back(0);
      }
      if (src_cnt[a] < 2) {
        ++src_cnt[a];
        int used2 = static_cast<int>(src_cnt.size());
        for (int b = 0; b <= used2; ++b) {
          if (b == used2) {
            src_cnt.push_back(0);
            tgt_cnt.push_back(0);
          }
          if (tgt_cnt[b] < 2) {
            ++tgt_cnt[b];
            lines.emplace_back(a, b);
            self(self, k + 1);
            lines.pop_back();
            --tgt_cnt[b];
          }
          if (b == used2) {
            src_cnt.pop_back();
            tgt_cnt.pop_back();
          }
        }
        --src_cnt[a];
      }
      if (a == used) {
        src_cnt.pop_back();
        tgt_cnt.pop_back();
      }
    }
  };
  rec(rec, 0);
}

// Distribute each vertex's line-ends over its four slots (targets on 0/2,
// sources on 1/3), calling sink for every complete layout.
template <typename Sink>
void enumerate_layouts(const Shape& shape, Sink&& sink) {
  const int L = static_cast<int>(shape.lines.size());
  // Per vertex: target-ends and source-ends in line order.
  std::vector<std::vector<int>> tl(shape.n), sl(shape.n);
  for (int l = 0; l < L; ++l) {
    sl[shape.lines[l].first].push_back(l + 1);
    tl[shape.lines[l].second].push_back(l + 1);
  }
  for (int v = 0; v < shape.n; ++v)
    if (tl[v].size() > 2 || sl[v].size() > 2) return;
  // Option count per vertex: 2 when one end could sit in either slot or two
  // ends could swap, else 1.
  std::vector<int> opts(2 * shape.n, 1);
  for (int v = 0; v < shape.n; ++v) {
    opts[2 * v] = tl[v].empty() ? 1 : 2;
    opts[2 * v + 1] = sl[v].empty() ? 1 : 2;
  }
  std::vector<int> pick(2 * shape.n, 0);
  while (true) {
    RibbonGraph g;
    g.root = 0;
    int ext = 0;
    for (int v = 0; v < shape.n; ++v) {
      std::vector<Corner> w(4, Corner::ext(0));
      auto place = [&](const std::vector<int>& lids, int slot_a, int slot_b,
                       int choice, bool is_src) {
        if (lids.size() == 1) {
          w[choice == 0 ? slot_a : slot_b] = Corner::line(lids[0], is_src);
        } else if (lids.size() == 2) {
          w[slot_a] = Corner::line(lids[choice == 0 ? 0 : 1], is_src);
          w[slot_b] = Corner::line(lids[choice == 0 ? 1 : 0], is_src);
        }
      };
      place(tl[v], 0, 2, pick[2 * v], false);
      place(sl[v], 1, 3, pick[2 * v + 1], true);
      for (auto& c : w)
        if (c.kind == Corner::Ext && c.id == 0) c = Corner::ext(++ext);
      g.vertices.push_back(std::move(w));
    }
    renumber_exts(g);
    sink(g);
    int a = 0;
    for (;; ++a) {
      if (a == 2 * shape.n) return;
      if (++pick[a] < opts[a]) break;
      pick[a] = 0;
    }
  }
}

// The root's word is read linearly by the quadratic form, and an external
// leg is what anchors that reading; emit every graph rooted at the first
// vertex carrying one. Vacuum graphs stay rooted at vertex 0.
void root_at_external(RibbonGraph& g) {
  for (int v = 0; v < g.n(); ++v) {
    for (const Corner& c : g.vertices[v]) {
      if (c.kind == Corner::Ext) {
        g.root = v;
        return;
      }
    }
  }
  g.root = 0;
}

}  // namespace

std::vector<RibbonGraph> corpus_exhaustive(int max_lines) {
  if (max_lines < 1 || max_lines > 6)
    throw GraphError("exhaustive corpus supports 1..6 lines");
  std::vector<RibbonGraph> out;
  for (int L = 1; L <= max_lines; ++L) {
    std::vector<Shape> shapes;
    enumerate_shapes(L, shapes);
    std::map<std::string, RibbonGraph> reps;
    for (const Shape& sh : shapes) {
      enumerate_layouts(sh, [&](const RibbonGraph& g) {
        validate(g);
        reps.try_emplace(canonical_key(g), g);
      });
    }
    for (auto& [key, g] : reps) {
      root_at_external(g);
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<RibbonGraph> corpus_random(int count, int max_lines,
                                       std::uint64_t seed) {
  if (count < 0 || max_lines < 1) throw GraphError("bad corpus parameters");
  std::mt19937_64 rng(seed);
  std::vector<RibbonGraph> out;
  int safety = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++safety > 100000 + 1000 * count)
      throw GraphError("random corpus generation stalled");
    int L = 1 + static_cast<int>(rng() % max_lines);
    int n_lo = (L + 1) / 2, n_hi = L + 1;
    int n = n_lo + static_cast<int>(rng() % (n_hi - n_lo + 1));
    std::vector<int> src_cnt(n, 0), tgt_cnt(n, 0);
    std::vector<std::pair<int, int>> lines;
    bool ok = true;
    for (int l = 0; l < L && ok; ++l) {
      std::vector<int> scand, tcand;
      for (int v = 0; v < n; ++v) {
        if (src_cnt[v] < 2) scand.push_back(v);
        if (tgt_cnt[v] < 2) tcand.push_back(v);
      }
      if (scand.empty() || tcand.empty()) {
        ok = false;
        break;
      }
      int a = scand[rng() % scand.size()];
      int b = tcand[rng() % tcand.size()];
      ++src_cnt[a];
      ++tgt_cnt[b];
      lines.emplace_back(a, b);
    }
    if (!ok) continue;
    Shape sh{lines, n};
    // Random layout choice, then keep the graph if it is valid + connected.
    std::vector<RibbonGraph> candidates;
    enumerate_layouts(sh, [&](const RibbonGraph& g) {
      candidates.push_back(g);
    });
    if (candidates.empty()) continue;
    RibbonGraph g = candidates[rng() % candidates.size()];
    try {
      validate(g);
    } catch (const GraphError&) {
      continue;
    }
    root_at_external(g);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ncpoly
