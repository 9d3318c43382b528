#ifndef GCLAB_CANONICAL_HPP
#define GCLAB_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

/// Total-order key for an isomorphism class: the graph6 string of the
/// canonical form.  Equal codes iff isomorphic graphs.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonResult {
    Graph form;                  // canonically relabelled copy
    std::vector<int> labeling;   // original vertex -> canonical position
    CanonicalCode code;          // to_graph6(form)
};

/// Canonical labeling by partition refinement and individualization:
/// refine the degree partition to equitability, branch on the first largest
/// cell, and keep the lexicographically least adjacency encoding over the
/// explored leaves, pruning branches with discovered automorphisms.
CanonResult canonicalize(const Graph& g);

CanonicalCode canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace gclab

#endif
