// Graph JSON round-trip with field-level diagnostics.
#include "ncpoly/graph_json.hpp"

#include <fstream>

using nlohmann::json;

namespace ncpoly {

json graph_to_json(const RibbonGraph& g) {
  json verts = json::array();
  for (const auto& w : g.vertices) {
    json word = json::array();
    for (const Corner& c : w) {
      if (c.kind == Corner::Line)
        word.push_back({{"line", c.id}, {"end", c.is_src ? "src" : "tgt"}});
      else
        word.push_back({{"ext", c.id}});
    }
    verts.push_back(std::move(word));
  }
  return json{{"vertices", std::move(verts)}, {"root", g.root}};
}

RibbonGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw GraphError("top level must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw GraphError("missing or non-array 'vertices'");
  RibbonGraph g;
  int vi = 0;
  for (const auto& word : j["vertices"]) {
    if (!word.is_array())
      throw GraphError("vertex " + std::to_string(vi) + " must be an array");
    std::vector<Corner> w;
    int ci = 0;
    for (const auto& c : word) {
      std::string at = "vertex " + std::to_string(vi) + " corner " +
                       std::to_string(ci) + ": ";
      if (!c.is_object()) throw GraphError(at + "must be an object");
      if (c.contains("line")) {
        if (!c["line"].is_number_integer())
          throw GraphError(at + "'line' must be an integer");
        if (!c.contains("end") || !c["end"].is_string())
          throw GraphError(at + "line corner needs 'end': \"src\"|\"tgt\"");
        std::string end = c["end"];
        if (end != "src" && end != "tgt")
          throw GraphError(at + "'end' must be \"src\" or \"tgt\"");
        w.push_back(Corner::line(c["line"].get<int>(), end == "src"));
      } else if (c.contains("ext")) {
        if (!c["ext"].is_number_integer())
          throw GraphError(at + "'ext' must be an integer");
        w.push_back(Corner::ext(c["ext"].get<int>()));
      } else {
        throw GraphError(at + "need either 'line' or 'ext'");
      }
      ++ci;
    }
    g.vertices.push_back(std::move(w));
    ++vi;
  }
  g.root = 0;
  if (j.contains("root")) {
    if (!j["root"].is_number_integer())
      throw GraphError("'root' must be an integer");
    g.root = j["root"].get<int>();
  }
  return g;
}

RibbonGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw GraphError("JSON parse error in " + path + ": " + e.what());
  }
  RibbonGraph g = graph_from_json(j);
  validate(g);
  return g;
}

void save_graph_file(const RibbonGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write graph file: " + path);
  out << graph_to_json(g).dump(2) << "\n";
}

}  // namespace ncpoly
