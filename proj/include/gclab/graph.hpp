#ifndef GCLAB_GRAPH_HPP
#define GCLAB_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace gclab {

/// Vertex subset of a graph on at most 64 vertices, one bit per vertex index.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr bool has_vertex(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr VertexSet full_set(int n) {
    return n == 0 ? VertexSet{0} : ~VertexSet{0} >> (kMaxVertices - n);
}
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

/// Range adaptor over the vertices of a VertexSet, ascending.
class VertexRange {
public:
    class iterator {
    public:
        explicit iterator(VertexSet s) : s_(s) {}
        int operator*() const { return std::countr_zero(s_); }
        iterator& operator++() { s_ &= s_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return s_ != o.s_; }
    private:
        VertexSet s_;
    };
    explicit VertexRange(VertexSet s) : s_(s) {}
    iterator begin() const { return iterator(s_); }
    iterator end() const { return iterator(0); }
private:
    VertexSet s_;
};
inline VertexRange elements(VertexSet s) { return VertexRange(s); }

/// Simple undirected graph, immutable after construction.  Adjacency is kept
/// as one 64-bit neighbor set per vertex, so every set operation used by the
/// searches (neighborhood intersections, degree counts, subset masks) is a
/// couple of machine instructions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return full_set(n_); }

    /// Neighborhood N(v); throws std::out_of_range for an invalid vertex.
    VertexSet neighborhood(int v) const;
    int degree(int v) const { return set_size(neighborhood(v)); }
    bool adjacent(int u, int v) const;

    std::size_t edge_count() const;
    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Subgraph induced by `keep`, vertices relabelled 0..k-1 in ascending
    /// original order.
    Graph induced(VertexSet keep) const;
    Graph complement() const;
    Graph without_vertex(int v) const;
    /// New graph with one extra vertex (index n) adjacent to `nbrs`.
    Graph with_vertex(VertexSet nbrs) const;
    /// Relabelled copy: vertex `position_to_vertex[i]` becomes vertex i.
    Graph permuted(const std::vector<int>& position_to_vertex) const;

    bool operator==(const Graph&) const = default;

    static Graph edgeless(int n) { return Graph(n); }
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph petersen();

private:
    void check_vertex(int v) const;
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Union of the neighborhoods of all vertices in `s` (may overlap `s`).
VertexSet neighbors_of_set(const Graph& g, VertexSet s);

/// True iff `s` is nonempty and induces a connected subgraph of `g`.
bool induces_connected(const Graph& g, VertexSet s);

}  // namespace gclab

#endif
