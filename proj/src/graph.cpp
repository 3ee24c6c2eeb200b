#include "specsat/graph.hpp"

#include "specsat/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace specsat {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw CapExceeded("graph order must be in [0, 64], got " + std::to_string(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        link(u, v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
}

void Graph::link(int u, int v) {
    adj_[u] |= VertexMask{1} << v;
    adj_[v] |= VertexMask{1} << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexMask row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexMask row : adj_) d = std::max(d, std::popcount(row));
    return d;
}

VertexMask Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexMask Graph::second_neighbors(int v) const {
    check_vertex(v);
    VertexMask reach = 0;
    for (VertexMask m = adj_[v]; m; m &= m - 1)
        reach |= adj_[std::countr_zero(m)];
    return reach & ~adj_[v] & ~(VertexMask{1} << v);
}

VertexMask Graph::vertex_mask() const {
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (VertexMask m = adj_[u] >> u >> 1; m; m &= m - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(m));
    return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!((adj_[u] >> v) & 1)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = std::popcount(adj_[v]);
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("cannot add loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    Graph out = *this;
    out.link(u, v);
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    if (!adjacent(u, v))
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    Graph out = *this;
    out.adj_[u] &= ~(VertexMask{1} << v);
    out.adj_[v] &= ~(VertexMask{1} << u);
    return out;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    return induced(vertex_mask() & ~(VertexMask{1} << v));
}

Graph Graph::with_vertex(VertexMask nbrs) const {
    if (n_ + 1 > kMaxVertices) throw CapExceeded("vertex cap exceeded");
    if (nbrs & ~vertex_mask()) throw std::invalid_argument("neighbour mask out of range");
    Graph out(n_ + 1);
    for (int v = 0; v < n_; ++v) out.adj_[v] = adj_[v];
    for (VertexMask m = nbrs; m; m &= m - 1) out.link(std::countr_zero(m), n_);
    return out;
}

Graph Graph::induced(VertexMask keep) const {
    keep &= vertex_mask();
    std::vector<int> old_of = mask_vertices(keep);
    Graph out(static_cast<int>(old_of.size()));
    for (size_t i = 0; i < old_of.size(); ++i)
        for (size_t j = i + 1; j < old_of.size(); ++j)
            if ((adj_[old_of[i]] >> old_of[j]) & 1) out.link(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
    if (n_ + other.n_ > kMaxVertices)
        throw CapExceeded("disjoint union exceeds the 64-vertex cap");
    Graph out(n_ + other.n_);
    for (int v = 0; v < n_; ++v) out.adj_[v] = adj_[v];
    for (int v = 0; v < other.n_; ++v) out.adj_[n_ + v] = other.adj_[v] << n_;
    return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size does not match graph order");
    Graph out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(perm[i], perm[j])) out.link(i, j);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    VertexMask seen = 1, frontier = 1;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vertex_mask();
}

bool Graph::is_tree() const {
    return n_ >= 1 && is_connected() && edge_count() == n_ - 1;
}

Graph Graph::complete(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.link(u, v);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.link(0, v);
    return g;
}

Graph Graph::path(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.link(v, v + 1);
    return g;
}

Graph Graph::cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(k);
    g.link(k - 1, 0);
    return g;
}

int edges_within(const Graph& g, VertexMask m) {
    int twice = 0;
    for (VertexMask s = m; s; s &= s - 1)
        twice += std::popcount(g.neighbors(std::countr_zero(s)) & m);
    return twice / 2;
}

int edges_between(const Graph& g, VertexMask a, VertexMask b) {
    int count = 0;
    for (VertexMask s = a; s; s &= s - 1)
        count += std::popcount(g.neighbors(std::countr_zero(s)) & b);
    return count;
}

std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

NeighborhoodDecomposition decompose(const Graph& g, int v) {
    NeighborhoodDecomposition d;
    d.root = v;
    d.a = g.neighbors(v);
    d.b = g.second_neighbors(v);
    d.c = g.vertex_mask() & ~d.a & ~d.b & ~(VertexMask{1} << v);
    d.e_a = edges_within(g, d.a);
    d.e_ab = edges_between(g, d.a, d.b);
    d.e_b = edges_within(g, d.b);
    d.e_bc = edges_between(g, d.b, d.c);
    return d;
}

std::vector<ComponentSplit> components(const Graph& g) {
    std::vector<ComponentSplit> out;
    VertexMask left = g.vertex_mask();
    while (left) {
        int start = std::countr_zero(left);
        VertexMask comp = VertexMask{1} << start, frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back({g.induced(comp), mask_vertices(comp)});
        left &= ~comp;
    }
    return out;
}

} // namespace specsat
