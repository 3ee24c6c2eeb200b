#include "specsat/graph_io.hpp"

#include "specsat/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace specsat {

namespace {
constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'
constexpr int kG6MaxOrder = 62;
} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    if (n > kG6MaxOrder)
        throw CapExceeded("graph6 with a single-byte order field caps at 62 vertices");
    std::string out(1, static_cast<char>(n + kG6Lo));
    int bits = 0;
    int byte = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            byte = (byte << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(byte + kG6Lo));
                bits = 0;
                byte = 0;
            }
        }
    }
    if (bits) out.push_back(static_cast<char>((byte << (6 - bits)) + kG6Lo));
    return out;
}

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("empty graph6 line");
    size_t pos = 0;
    int c = static_cast<unsigned char>(line[pos]);
    if (c < kG6Lo || c > kG6Hi) throw ParseError("bad graph6 byte at position 0");
    if (c == kG6Hi)
        throw ParseError("multi-byte graph6 order fields (n > 62) are not supported");
    int n = c - kG6Lo;
    ++pos;
    Graph g(n);
    int bits = 0;
    int byte = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                if (pos >= line.size()) throw ParseError("graph6 line truncated");
                byte = static_cast<unsigned char>(line[pos++]) - kG6Lo;
                if (byte < 0 || byte > 63) throw ParseError("bad graph6 byte");
                bits = 6;
            }
            if ((byte >> (bits - 1)) & 1) g = g.add_edge(u, v);
            --bits;
        }
    }
    return g;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON parse failure: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("graph JSON edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j["n"].get<int>(), edges);
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

std::vector<Graph> load_graphs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return {graph_from_json(text)};
    return parse_graph6_lines(text);
}

} // namespace specsat
