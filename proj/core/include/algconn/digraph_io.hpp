#pragma once

#include <iosfwd>
#include <string>

#include "algconn/digraph.hpp"

namespace algconn {

/// {"n": <int>, "arcs": [[tail, head], ...]} with 1-indexed vertices,
/// arcs in canonical (tail, head) order.
std::string to_json(const DiGraph& g);
DiGraph graph_from_json(const std::string& text);
DiGraph graph_from_stream(std::istream& in);
DiGraph load_graph(const std::string& path);  // "-" reads stdin

/// digraph with vertex labels "1".."n", one edge line per arc.
std::string to_dot(const DiGraph& g);

}  // namespace algconn
