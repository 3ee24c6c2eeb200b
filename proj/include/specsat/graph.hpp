#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specsat {

using VertexMask = std::uint64_t;

// Undirected simple graph with one adjacency bit-row per vertex.
// Hard cap of 64 vertices; everything in this toolkit lives well below it.
// Graphs are values: operations that change a graph return a new one.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;
    VertexMask neighbors(int v) const;      // N(v)
    VertexMask second_neighbors(int v) const; // N2(v), distance exactly two
    VertexMask vertex_mask() const;         // all vertices

    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::pair<int, int>> non_edges() const;
    std::vector<int> degree_sequence() const; // ascending

    Graph add_edge(int u, int v) const;     // throws if loop or already present
    Graph without_edge(int u, int v) const; // throws if absent
    Graph delete_vertex(int v) const;       // remaining vertices keep their order
    Graph with_vertex(VertexMask nbrs) const; // append vertex n adjacent to nbrs
    Graph induced(VertexMask keep) const;
    Graph disjoint_union(const Graph& other) const;
    Graph relabeled(const std::vector<int>& perm) const; // perm[new] = old

    bool is_connected() const;
    bool is_tree() const;

    static Graph complete(int k);
    static Graph star(int leaves);          // K_{1,leaves}, center = 0
    static Graph path(int k);               // P_k, vertices 0-1-...-k-1
    static Graph cycle(int k);

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;
    void link(int u, int v);

    int n_ = 0;
    std::vector<VertexMask> adj_;
};

// Edge counts inside/between vertex sets (masks must be subsets of V).
int edges_within(const Graph& g, VertexMask m);
int edges_between(const Graph& g, VertexMask a, VertexMask b); // a, b disjoint

std::vector<int> mask_vertices(VertexMask m);

// A = N(root), B = N2(root), C = the rest; the four edge counts the
// degree-three analysis consumes.
struct NeighborhoodDecomposition {
    int root = 0;
    VertexMask a = 0, b = 0, c = 0;
    int e_a = 0;   // edges inside A
    int e_ab = 0;  // edges between A and B
    int e_b = 0;   // edges inside B
    int e_bc = 0;  // edges between B and C
};

NeighborhoodDecomposition decompose(const Graph& g, int v);

struct ComponentSplit {
    Graph graph;
    std::vector<int> vertices; // vertices[i] = original label of vertex i
};

std::vector<ComponentSplit> components(const Graph& g);

} // namespace specsat
