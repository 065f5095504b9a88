// JSON (de)serialization of ribbon graphs:
//   {"vertices": [[{"line": 1, "end": "tgt"}, {"ext": 1}, ...], ...],
//    "root": 0}
#pragma once

#include <json.hpp>

#include <string>

#include "ncpoly/graph.hpp"

namespace ncpoly {

nlohmann::json graph_to_json(const RibbonGraph& g);

// Throws GraphError with a field diagnostic on schema violations.
RibbonGraph graph_from_json(const nlohmann::json& j);

// Reads, parses, and validates a graph file.
RibbonGraph load_graph_file(const std::string& path);

void save_graph_file(const RibbonGraph& g, const std::string& path);

}  // namespace ncpoly
