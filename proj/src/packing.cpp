#include "specsat/packing.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace specsat {

namespace {

struct Candidate {
    PathQuad path;
    VertexMask mask;
};

// All P4 subgraphs, normalised a < d, sorted by tuple. Disjoint paths have
// distinct first vertices, so packings are searched with strictly increasing
// path starts.
std::vector<Candidate> all_p4(const Graph& g) {
    std::vector<Candidate> out;
    const int n = g.n();
    for (int b = 0; b < n; ++b) {
        for (VertexMask mc = g.neighbors(b); mc; mc &= mc - 1) {
            int c = std::countr_zero(mc);
            VertexMask ma = g.neighbors(b) & ~(VertexMask{1} << c);
            for (; ma; ma &= ma - 1) {
                int a = std::countr_zero(ma);
                VertexMask md = g.neighbors(c) & ~(VertexMask{1} << b) & ~(VertexMask{1} << a);
                for (; md; md &= md - 1) {
                    int d = std::countr_zero(md);
                    if (a >= d) continue; // reversal is the same path
                    VertexMask mask = (VertexMask{1} << a) | (VertexMask{1} << b) |
                                      (VertexMask{1} << c) | (VertexMask{1} << d);
                    out.push_back({{a, b, c, d}, mask});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Candidate& x, const Candidate& y) { return x.path < y.path; });
    return out;
}

bool extend(const std::vector<Candidate>& cands, size_t from, VertexMask used, int free_vertices,
            int need, std::vector<PathQuad>& chosen) {
    if (need == 0) return true;
    if (free_vertices < 4 * need) return false;
    for (size_t i = from; i < cands.size(); ++i) {
        if (cands[i].mask & used) continue;
        chosen.push_back(cands[i].path);
        if (extend(cands, i + 1, used | cands[i].mask, free_vertices - 4, need - 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<PathPacking> find_p4_packing(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    std::vector<Candidate> cands = all_p4(g);
    std::vector<PathQuad> chosen;
    if (!extend(cands, 0, 0, g.n(), t, chosen)) return std::nullopt;
    return PathPacking{std::move(chosen)};
}

bool packing_valid(const Graph& g, const PathPacking& p, int t) {
    if (static_cast<int>(p.paths.size()) != t) return false;
    VertexMask used = 0;
    for (const PathQuad& q : p.paths) {
        for (int v : q) {
            if (v < 0 || v >= g.n()) return false;
            VertexMask bit = VertexMask{1} << v;
            if (used & bit) return false;
            used |= bit;
        }
        if (!g.adjacent(q[0], q[1]) || !g.adjacent(q[1], q[2]) || !g.adjacent(q[2], q[3]))
            return false;
    }
    return true;
}

SaturationCertificate is_saturated(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    SaturationCertificate cert;
    cert.t = t;
    cert.free = !find_p4_packing(g, t).has_value();
    if (!cert.free) return cert;
    for (auto [u, v] : g.non_edges()) {
        std::optional<PathPacking> w = find_p4_packing(g.add_edge(u, v), t);
        if (!w) {
            cert.failing_non_edge = {u, v};
            return cert;
        }
        bool uses_uv = false;
        for (const PathQuad& q : w->paths)
            for (int i = 0; i < 3; ++i)
                if ((q[i] == u && q[i + 1] == v) || (q[i] == v && q[i + 1] == u)) uses_uv = true;
        if (!uses_uv)
            throw std::logic_error("packing of G+uv avoids uv although G is free"); // impossible
        cert.witnesses.emplace_back(std::make_pair(u, v), std::move(*w));
    }
    cert.saturated = true;
    return cert;
}

std::string certificate_to_json(const SaturationCertificate& c) {
    nlohmann::ordered_json j;
    j["t"] = c.t;
    j["free"] = c.free;
    j["saturated"] = c.saturated;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [edge, packing] : c.witnesses) {
        nlohmann::ordered_json paths = nlohmann::ordered_json::array();
        for (const PathQuad& q : packing.paths) paths.push_back({q[0], q[1], q[2], q[3]});
        w[std::to_string(edge.first) + "-" + std::to_string(edge.second)] = std::move(paths);
    }
    j["witnesses"] = std::move(w);
    if (c.failing_non_edge)
        j["failing_non_edge"] =
            std::to_string(c.failing_non_edge->first) + "-" + std::to_string(c.failing_non_edge->second);
    return j.dump();
}

namespace {

std::string vertex_list(std::initializer_list<int> vs) {
    std::string out;
    for (int v : vs) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

} // namespace

std::vector<LemmaCheck> check_structural_lemmas(const Graph& g, int t, bool saturation_verified) {
    if (t < 2) throw std::invalid_argument("the structural lemmas assume t >= 2");
    if (!saturation_verified)
        throw std::invalid_argument("saturation must be verified before running the lemma checks");
    const int n = g.n();
    const bool connected = g.is_connected();
    std::vector<LemmaCheck> out;

    LemmaCheck deg2_triangle{"degree-2 vertices lie in a triangle"};
    for (int w = 0; w < n; ++w) {
        if (g.degree(w) != 2) continue;
        std::vector<int> nb = mask_vertices(g.neighbors(w));
        if (!g.adjacent(nb[0], nb[1]))
            deg2_triangle.violations.push_back("vertex " + std::to_string(w));
    }
    out.push_back(std::move(deg2_triangle));

    LemmaCheck not_tree{"the graph is not a tree"};
    if (g.is_tree()) not_tree.violations.push_back("graph is a tree");
    out.push_back(std::move(not_tree));

    LemmaCheck leaf_supports{"supports of distinct leaves are nonadjacent"};
    leaf_supports.applicable = connected;
    if (connected) {
        for (int u = 0; u < n; ++u) {
            if (g.degree(u) != 1) continue;
            for (int w = u + 1; w < n; ++w) {
                if (g.degree(w) != 1 || g.adjacent(u, w)) continue;
                int u1 = std::countr_zero(g.neighbors(u));
                int w1 = std::countr_zero(g.neighbors(w));
                if (u1 != w1 && g.adjacent(u1, w1))
                    leaf_supports.violations.push_back("leaves " + vertex_list({u, w}));
            }
        }
    }
    out.push_back(std::move(leaf_supports));

    LemmaCheck no_deg2_deg3_edge{"no edge joins a degree-2 and a degree-3 vertex"};
    no_deg2_deg3_edge.applicable = connected;
    if (connected) {
        for (auto [u, w] : g.edges()) {
            int du = g.degree(u), dw = g.degree(w);
            if ((du == 2 && dw == 3) || (du == 3 && dw == 2))
                no_deg2_deg3_edge.violations.push_back("edge " + vertex_list({u, w}));
        }
    }
    out.push_back(std::move(no_deg2_deg3_edge));

    LemmaCheck branch_rule{"degree-3 neighbour next to a leaf closes a heavy triangle"};
    branch_rule.applicable = connected;
    if (connected) {
        for (int u = 0; u < n; ++u) {
            if (g.degree(u) < 3) continue;
            bool has_leaf_nbr = false;
            for (VertexMask m = g.neighbors(u); m; m &= m - 1)
                if (g.degree(std::countr_zero(m)) == 1) has_leaf_nbr = true;
            if (!has_leaf_nbr) continue;
            for (VertexMask m = g.neighbors(u); m; m &= m - 1) {
                int u1 = std::countr_zero(m);
                if (g.degree(u1) != 3) continue;
                std::vector<int> rest = mask_vertices(g.neighbors(u1) & ~(VertexMask{1} << u));
                if (rest.size() != 2) continue;
                if (!g.adjacent(rest[0], rest[1]) || g.degree(rest[0]) < 3 || g.degree(rest[1]) < 3)
                    branch_rule.violations.push_back("vertices " + vertex_list({u, u1}));
            }
        }
    }
    out.push_back(std::move(branch_rule));

    return out;
}

} // namespace specsat
