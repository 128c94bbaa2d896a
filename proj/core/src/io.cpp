#include "shiftlab/io.hpp"

#include <fstream>
#include <sstream>

#include "shiftlab/errors.hpp"

namespace shiftlab {

using nlohmann::json;

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

json to_json(const MProfile& p) { return json(p.cumulative()); }

json to_json(const RankProfile& p) { return json(p.values); }

json to_json(const ShiftTrace& t) {
  json steps = json::array();
  for (const ShiftStep& s : t.steps) steps.push_back({s.i, s.j});
  json out{{"steps", std::move(steps)}, {"result", to_json(t.result)}};
  if (!t.peels.empty()) {
    json peels = json::array();
    for (const Peel& p : t.peels) peels.push_back({p.vertex, p.degree});
    out["peels"] = std::move(peels);
  }
  return out;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw InputError("graph JSON needs an integer field \"n\"");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw InputError("graph JSON needs an array field \"edges\"");
  }
  std::vector<std::pair<int, int>> pairs;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("each edge must be a pair of integers, got " + e.dump());
    }
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j["n"].get<int>(), pairs);
}

Graph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("malformed JSON: ") + err.what());
  }
  return graph_from_json(j);
}

Graph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 1; v <= g.n(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ' ';
    out << '{' << e.u << ',' << e.v << '}';
    first = false;
  }
  return out.str();
}

}  // namespace shiftlab
