#include "specsat/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace specsat {

std::vector<int> refined_colors(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, 0);
    int classes = n > 0 ? 1 : 0;
    while (true) {
        // signature = (own colour, neighbour count per colour)
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].assign(classes + 1, 0);
            sig[v][0] = color[v];
            for (VertexMask m = g.neighbors(v); m; m &= m - 1)
                ++sig[v][1 + color[std::countr_zero(m)]];
        }
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = rank[sig[v]];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed || next == classes) break;
        classes = next;
    }
    return color;
}

namespace {

// Backtracking state for the maximal-code search. Positions are filled in
// colour-class order; within the run the best known column prefix prunes
// every branch that falls lexicographically below it.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells; // vertices grouped by colour, ascending colour
    std::vector<int> cell_for_pos;       // which cell feeds each position
    std::vector<int> perm;               // perm[pos] = vertex
    std::vector<VertexMask> cols;        // current column words
    std::vector<VertexMask> best_cols;
    std::vector<int> best_perm;
    int best_len = 0;
    VertexMask used = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {
        std::vector<int> color = refined_colors(g);
        int classes = 0;
        for (int c : color) classes = std::max(classes, c + 1);
        cells.resize(classes);
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (size_t i = 0; i < cells[c].size(); ++i) cell_for_pos.push_back(c);
        perm.assign(n, -1);
        cols.assign(n, 0);
        best_cols.assign(n, 0);
        best_perm.assign(n, -1);
    }

    void run() {
        if (n == 0) return;
        descend(0);
    }

    void descend(int pos) {
        if (pos == n) {
            best_perm = perm;
            return;
        }
        for (int v : cells[cell_for_pos[pos]]) {
            VertexMask bit = VertexMask{1} << v;
            if (used & bit) continue;
            VertexMask col = 0;
            for (int q = 0; q < pos; ++q)
                if (g.adjacent(v, perm[q])) col |= VertexMask{1} << q;
            if (pos < best_len) {
                if (col < best_cols[pos]) continue;
                if (col > best_cols[pos]) {
                    best_cols[pos] = col;
                    best_len = pos + 1;
                }
            } else {
                best_cols[pos] = col;
                best_len = pos + 1;
            }
            perm[pos] = v;
            cols[pos] = col;
            used |= bit;
            descend(pos + 1);
            used &= ~bit;
            perm[pos] = -1;
        }
    }
};

std::string pack_code(int n, const std::vector<VertexMask>& cols) {
    std::string code(1, static_cast<char>(n));
    int bits = 0;
    unsigned char byte = 0;
    for (int p = 1; p < n; ++p) {
        for (int q = 0; q < p; ++q) {
            byte = static_cast<unsigned char>((byte << 1) | ((cols[p] >> q) & 1));
            if (++bits == 8) {
                code.push_back(static_cast<char>(byte));
                bits = 0;
                byte = 0;
            }
        }
    }
    if (bits) code.push_back(static_cast<char>(byte << (8 - bits)));
    return code;
}

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    CanonSearch search(g);
    search.run();
    CanonicalLabeling out;
    out.form.code = pack_code(g.n(), search.best_cols);
    out.order = search.best_perm;
    return out;
}

CanonicalForm canonical(const Graph& g) {
    return canonical_labeling(g).form;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    return canonical(g).code == canonical(h).code;
}

} // namespace specsat
