#include "gclab/graph.hpp"

#include <stdexcept>
#include <string>

namespace gclab {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    if (n > kMaxVertices)
        throw std::length_error("graph capacity is " + std::to_string(kMaxVertices) + " vertices");
    n_ = n;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        add_edge_unchecked(u, v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

VertexSet Graph::neighborhood(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return has_vertex(adj_[u], v);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(set_size(adj_[v]));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v : elements(adj_[u] & ~full_set(u + 1))) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    if (keep & ~vertices()) throw std::out_of_range("induced: vertex set outside graph range");
    Graph h(set_size(keep));
    std::vector<int> old_of;
    old_of.reserve(h.n_);
    for (int v : elements(keep)) old_of.push_back(v);
    for (int i = 0; i < h.n_; ++i)
        for (int j = i + 1; j < h.n_; ++j)
            if (has_vertex(adj_[old_of[i]], old_of[j])) h.add_edge_unchecked(i, j);
    return h;
}

Graph Graph::complement() const {
    Graph h(n_);
    for (int v = 0; v < n_; ++v) h.adj_[v] = ~adj_[v] & vertices() & ~vertex_bit(v);
    return h;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    return induced(vertices() & ~vertex_bit(v));
}

Graph Graph::with_vertex(VertexSet nbrs) const {
    if (nbrs & ~vertices()) throw std::out_of_range("with_vertex: neighbor set outside graph range");
    Graph h(n_ + 1);
    h.adj_ = adj_;
    h.adj_[n_] = nbrs;
    for (int v : elements(nbrs)) h.adj_[v] |= vertex_bit(n_);
    return h;
}

Graph Graph::permuted(const std::vector<int>& position_to_vertex) const {
    if (static_cast<int>(position_to_vertex.size()) != n_)
        throw std::invalid_argument("permuted: labeling size mismatch");
    for (int v : position_to_vertex) check_vertex(v);
    Graph h(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_vertex(adj_[position_to_vertex[i]], position_to_vertex[j]))
                h.add_edge_unchecked(i, j);
    return h;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge_unchecked(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge_unchecked(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge_unchecked(i, i + 5);                // spokes
        g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

VertexSet neighbors_of_set(const Graph& g, VertexSet s) {
    VertexSet out = 0;
    for (int v : elements(s)) out |= g.neighborhood(v);
    return out;
}

bool induces_connected(const Graph& g, VertexSet s) {
    if (s == 0) return false;
    VertexSet reached = vertex_bit(lowest_vertex(s));
    for (;;) {
        VertexSet grown = reached | (neighbors_of_set(g, reached) & s);
        if (grown == reached) break;
        reached = grown;
    }
    return reached == s;
}

}  // namespace gclab
