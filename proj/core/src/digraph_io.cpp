#include "algconn/digraph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace algconn {

std::string to_json(const DiGraph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["arcs"] = nlohmann::json::array();
  for (const auto& [t, h] : g.arcs()) j["arcs"].push_back({t, h});
  return j.dump();
}

static DiGraph from_parsed(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("arcs"))
    throw GraphError("graph JSON must have \"n\" and \"arcs\" fields");
  int n = j.at("n").get<int>();
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2)
      throw GraphError("each arc must be a [tail, head] pair");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return DiGraph(n, std::move(arcs));
}

DiGraph graph_from_json(const std::string& text) {
  return from_parsed(nlohmann::json::parse(text));
}

DiGraph graph_from_stream(std::istream& in) {
  nlohmann::json j;
  in >> j;
  return from_parsed(j);
}

DiGraph load_graph(const std::string& path) {
  if (path == "-") return graph_from_stream(std::cin);
  std::ifstream f(path);
  if (!f) throw GraphError("cannot open graph file: " + path);
  return graph_from_stream(f);
}

std::string to_dot(const DiGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 1; v <= g.order(); ++v) out << "  \"" << v << "\";\n";
  for (const auto& [t, h] : g.arcs())
    out << "  \"" << t << "\" -> \"" << h << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace algconn
