// Line- and vertex-insertion constructions over ribbon graphs.
#include "ncpoly/insertion.hpp"

#include <algorithm>
#include <numeric>

namespace ncpoly {

namespace {

struct Stub {
  int vertex, pos, sign, ext_id;
};

std::vector<Stub> stub_corners(const RibbonGraph& g) {
  std::vector<Stub> out;
  for (int vi = 0; vi < g.n(); ++vi) {
    const auto& w = g.vertices[vi];
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i].kind == Corner::Ext)
        out.push_back({vi, i, slot_sign(i), w[i].id});
  }
  return out;
}

// Append the piece's vertices with line ids shifted past the host's.
void append_shifted(std::vector<std::vector<Corner>>& verts,
                    const RibbonGraph& piece, int shift) {
  for (const auto& w : piece.vertices) {
    std::vector<Corner> nw = w;
    for (auto& c : nw)
      if (c.kind == Corner::Line) c.id += shift;
    verts.push_back(std::move(nw));
  }
}

std::vector<int> mapped_piece_lines(const std::map<int, int>& lmap, int shift,
                                    int piece_lines) {
  std::vector<int> out;
  for (int l = 1; l <= piece_lines; ++l) out.push_back(lmap.at(l + shift));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Insertion insert_line(const RibbonGraph& host, int line_id,
                      const RibbonGraph& piece) {
  const int LH = host.line_count();
  if (line_id < 1 || line_id > LH) throw GraphError("no such host line");
  auto stubs = stub_corners(piece);
  const Stub* plus = nullptr;
  const Stub* minus = nullptr;
  for (const Stub& s : stubs) (s.sign > 0 ? plus : minus) = &s;
  if (stubs.size() != 2 || !plus || !minus)
    throw GraphError(
        "line insertion needs a piece with exactly one \"+\" and one \"-\" "
        "external stub");
  const int LS = piece.line_count();
  const int la = LH + LS + 1, lb = LH + LS + 2;
  const int nv0 = host.n();

  RibbonGraph g;
  g.root = host.root;
  g.vertices = host.vertices;
  append_shifted(g.vertices, piece, LH);
  // Reroute the severed host line's corners onto the two new lines.
  for (int vi = 0; vi < nv0; ++vi)
    for (auto& c : g.vertices[vi])
      if (c.kind == Corner::Line && c.id == line_id)
        c = c.is_src ? Corner::line(lb, true) : Corner::line(la, false);
  g.vertices[nv0 + minus->vertex][minus->pos] = Corner::line(la, true);
  g.vertices[nv0 + plus->vertex][plus->pos] = Corner::line(lb, false);

  auto lmap = renumber_lines(g);
  renumber_exts(g);
  validate(g);
  return {std::move(g), mapped_piece_lines(lmap, LH, LS)};
}

Insertion insert_vertex(const RibbonGraph& host, int vertex,
                        const RibbonGraph& piece, int rot) {
  if (vertex < 0 || vertex >= host.n()) throw GraphError("no such host vertex");
  if (vertex == host.root)
    throw GraphError("vertex insertion at the root is not supported");
  if (host.vertices[vertex].size() != 4)
    throw GraphError("vertex insertion requires a four-corner host vertex");
  const int LH = host.line_count();
  const int LS = piece.line_count();
  if (LS < 1) throw GraphError("piece has no internal lines");
  if (rot % 2 != 0) throw GraphError("stub rotation must be even");

  // Cyclic boundary order of the piece's stubs: shrink the whole piece to a
  // point and read the merged vertex's external ids.
  std::vector<int> all(LS);
  std::iota(all.begin(), all.end(), 1);
  QuotientResult q = quotient(piece, all);
  std::vector<int> order;
  for (const Corner& c : q.graph.vertices[q.merged_vertex])
    if (c.kind == Corner::Ext) order.push_back(c.id);
  if (order.size() != 4)
    throw GraphError("vertex insertion needs a piece with four external stubs");
  std::rotate(order.begin(), order.begin() + (rot % 4), order.end());

  std::map<int, Stub> by_ext;
  for (const Stub& s : stub_corners(piece)) by_ext[s.ext_id] = s;

  std::vector<std::vector<Corner>> newv;
  append_shifted(newv, piece, LH);
  for (int k = 0; k < 4; ++k) {
    const Corner& att = host.vertices[vertex][k];
    const Stub& s = by_ext.at(order[k]);
    if (s.sign != slot_sign(k))
      throw GraphError("stub signs do not match the host corner signs");
    newv[s.vertex][s.pos] = att;
  }

  RibbonGraph g;
  for (int vi = 0; vi < host.n(); ++vi)
    if (vi != vertex) g.vertices.push_back(host.vertices[vi]);
  for (auto& w : newv) g.vertices.push_back(std::move(w));
  g.root = host.root - (host.root > vertex ? 1 : 0);

  auto lmap = renumber_lines(g);
  renumber_exts(g);
  validate(g);
  return {std::move(g), mapped_piece_lines(lmap, LH, LS)};
}

}  // namespace ncpoly
