#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "shiftlab/algebraic.hpp"
#include "shiftlab/combinatorial.hpp"
#include "shiftlab/graph.hpp"

namespace shiftlab {

// Graph:   {"n": <int>, "edges": [[i, j], ...]}   1-indexed, i < j.
// Profile: [m_{<=1}, ..., m_{<=n-1}]
// Trace:   {"steps": [[i, j], ...], "result": <graph>}  (+ "peels" when present)

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const MProfile& p);
nlohmann::json to_json(const RankProfile& p);
nlohmann::json to_json(const ShiftTrace& t);

/// Throws InputError on schema violations or graph invariant violations.
Graph graph_from_json(const nlohmann::json& j);
/// Parses text; malformed JSON is reported as InputError.
Graph parse_graph(const std::string& text);
Graph parse_graph_file(const std::filesystem::path& path);

/// Vertices 1..n and undirected edges, in a `graph G { ... }` block.
std::string to_dot(const Graph& g, const std::string& name = "G");

/// Compact one-line edge listing such as "{1,2} {1,3}".
std::string edge_list_string(const Graph& g);

}  // namespace shiftlab
