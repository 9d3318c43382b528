#ifndef GCLAB_CONTAINMENT_HPP
#define GCLAB_CONTAINMENT_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

/// The five containment orderings.
enum class OrderKind {
    Subgraph,             // injective map, edges to edges
    TopologicalSubgraph,  // some subdivision is a subgraph
    Minor,                // disjoint connected branch sets, edges between them
    Induced,              // injective map, edges to edges and non-edges to non-edges
    TopologicalInduced,   // some subdivision is an induced subgraph
};

std::string_view order_kind_name(OrderKind kind);  // sub, top, minor, ind, topind
std::optional<OrderKind> order_kind_from_name(std::string_view name);

/// Embedding evidence, checkable by verify_witness.
///  - vertex_map: pattern vertex -> host vertex (all kinds except Minor)
///  - routes: one host path per pattern edge, aligned with pattern.edge_list(),
///    including both endpoints (topological kinds only)
///  - branch_sets: one host vertex set per pattern vertex (Minor only)
struct Witness {
    OrderKind kind = OrderKind::Subgraph;
    std::vector<int> vertex_map;
    std::vector<std::vector<int>> routes;
    std::vector<VertexSet> branch_sets;
};

/// Decides pattern <= host in the given ordering; returns a verified witness
/// on success.  Exact backtracking search, intended for desk-scale inputs
/// (hosts up to ~12 vertices); exponential in the worst case.
std::optional<Witness> contains(const Graph& host, const Graph& pattern, OrderKind kind);

/// Structural check of a witness against its kind's invariants.  Returns
/// false on any malformed or invalid embedding, never throws.
bool verify_witness(const Graph& host, const Graph& pattern, const Witness& w);

/// Kuratowski exclusion: planar iff neither K5 nor K3,3 is a topological
/// subgraph.
bool is_planar(const Graph& g);

/// Chartrand-Harary exclusion: outerplanar iff neither K4 nor K2,3 is a
/// topological subgraph.
bool is_outerplanar(const Graph& g);

}  // namespace gclab

#endif
