#pragma once

#include "specsat/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace specsat {

// graph6: one graph per line, single-byte order field, so n <= 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// {"n": int, "edges": [[u, v], ...]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Reads either format; JSON files hold one graph, graph6 files one per line.
std::vector<Graph> load_graphs(const std::string& path);
std::vector<Graph> parse_graph6_lines(const std::string& text);

} // namespace specsat
