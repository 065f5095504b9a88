// Ribbon-graph data model: vertices as cyclic corner words, orientability
// validation, face tracing, topology (genus, broken faces), subgraph
// extraction, quotient and difference graphs, and the face/vertex dual.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncpoly {

// A corner is either an end of an internal line or an external leg.
// Line ids are 1-based and consecutive; external ids likewise.
struct Corner {
  enum Kind { Line, Ext };
  Kind kind;
  int id;        // line id or external id
  bool is_src;   // for Line: true at the "-" (source) end, false at "+" (target)

  static Corner line(int id, bool is_src) { return {Line, id, is_src}; }
  static Corner ext(int id) { return {Ext, id, false}; }
  bool operator==(const Corner& o) const {
    return kind == o.kind && id == o.id && (kind == Ext || is_src == o.is_src);
  }
};

// Sign of the corner slot at 0-based position i: "+" on even, "-" on odd.
inline int slot_sign(int i) { return (i % 2 == 0) ? 1 : -1; }

struct RibbonGraph {
  std::vector<std::vector<Corner>> vertices;  // cyclic corner words
  int root = 0;

  int n() const { return static_cast<int>(vertices.size()); }
  int line_count() const;
  int ext_count() const;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Topology {
  int n, L, N, F, g, B;
  bool operator==(const Topology& o) const {
    return n == o.n && L == o.L && N == o.N && F == o.F && g == o.g &&
           B == o.B;
  }
};

// A dart names one oriented corner-side: a real corner (vertex, position) or
// the virtual endpoint of external leg id (vertex = -1, position = ext id).
struct Dart {
  int vertex;
  int pos;
  bool is_virtual() const { return vertex < 0; }
  bool operator<(const Dart& o) const {
    return vertex != o.vertex ? vertex < o.vertex : pos < o.pos;
  }
  bool operator==(const Dart& o) const {
    return vertex == o.vertex && pos == o.pos;
  }
};

// Throws GraphError on the first violated structural invariant: even
// alternating corner words, orientable line ends (one "+", one "-"),
// both ends present per line, consecutive ids, valid root, connectivity.
void validate(const RibbonGraph& g);

// (line id, is_src) -> (vertex, position); every line has both ends.
std::map<std::pair<int, bool>, std::pair<int, int>> line_ends(
    const RibbonGraph& g);

// Boundary walks of the ribbon structure. External legs contribute a virtual
// dart; a face is broken when its walk visits one. Every dart lies on
// exactly one face.
struct FaceSet {
  std::vector<std::vector<Dart>> faces;
  int broken = 0;
  // face index containing each real corner dart
  std::map<Dart, int> face_of;
};
FaceSet trace_faces(const RibbonGraph& g);

Topology topology(const RibbonGraph& g);

// Renumbers line ids (order-preserving) to 1..L; returns old id -> new id.
std::map<int, int> renumber_lines(RibbonGraph& g);
// Renumbers external ids in vertex-word order to 1..N.
void renumber_exts(RibbonGraph& g);

// BFS spanning tree of the sub-multigraph spanned by `lines`, rooted at
// `start`: returns tree line ids in visit order plus the reached vertices.
std::pair<std::vector<int>, std::set<int>> spanning_tree_bfs(
    const RibbonGraph& g, const std::vector<int>& lines, int start);

// Standalone subgraph on a line subset: incident vertices keep their corner
// words, foreign attachments become fresh external stubs. Root: the lowest
// incident vertex. line_map: parent line id -> subgraph line id.
struct Subgraph {
  RibbonGraph graph;
  std::map<int, int> line_map;
  std::vector<int> parent_vertices;  // sorted parent vertex ids
  std::set<int> severed_exts;  // stub ids standing for cut parent lines
};
Subgraph subgraph_of(const RibbonGraph& g, const std::vector<int>& lines);

// Whether the line subset spans a connected sub-multigraph.
bool lines_connected(const RibbonGraph& g, const std::vector<int>& lines);

// Shrinks the connected subgraph on `lines` to one generalized vertex by
// contracting a spanning tree and erasing the remaining internal corners.
// Preconditions: the subgraph is connected and has primitive shape (planar,
// one boundary, 2 or 4 legs); the surviving corner word must alternate in
// sign (rotating by one slot if needed). Returns the graph, the
// parent->result line id map, and the parent->result vertex map (the shrunk
// part is represented by its lowest parent vertex id).
struct QuotientResult {
  RibbonGraph graph;
  std::map<int, int> line_map;
  std::map<int, int> vertex_map;
  int merged_vertex;  // vertex id of the new generalized vertex
};
QuotientResult quotient(const RibbonGraph& g, const std::vector<int>& lines);

// Erases the subgraph's vertices and lines; severed attachments of the rest
// become external stubs. The result may be disconnected (flagged).
struct DifferenceResult {
  RibbonGraph graph;
  std::map<int, int> line_map;
  bool disconnected = false;
};
DifferenceResult difference(const RibbonGraph& g,
                            const std::vector<int>& lines);

// Combinatorial map used for duals: a rotation system sigma (next dart
// around a vertex) plus the edge involution alpha. Faces are next = sigma
// after alpha orbits, matching the ribbon boundary walk.
struct CombMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  int n_vertices() const;
  int n_edges() const { return static_cast<int>(sigma.size()) / 2; }
  int n_faces() const;
};

// Dual map: vertices are the faces of g, one edge per internal line joining
// the faces on its two sides (external legs do not become dual edges).
CombMap dual_map(const RibbonGraph& g);
// Dual of a map (vertices <-> faces).
CombMap dual_map(const CombMap& m);

// Face ids on the two sides of each internal line (index = line id).
std::map<int, std::array<int, 2>> line_face_sides(const RibbonGraph& g);

// Shape of a subgraph whose shrinking to a point is meaningful here: planar,
// one boundary component, two or four external legs.
bool primitive_shape(const Topology& t);

// Size guard for the exponential enumerations (subgraph classification,
// Pfaffian minor sums): NCPOLY_MAX_L from the environment, default 12.
int resolve_max_lines();

}  // namespace ncpoly
