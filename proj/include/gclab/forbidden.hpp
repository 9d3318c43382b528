#ifndef GCLAB_FORBIDDEN_HPP
#define GCLAB_FORBIDDEN_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gclab/graph.hpp"

#include <nlohmann/json_fwd.hpp>

namespace gclab {

/// A named membership predicate, expected to be closed under induced
/// subgraphs.  The engine verifies the closure on the swept range before
/// trusting it.
struct ClassSpec {
    std::string name;
    std::function<bool(const Graph&)> member;
    bool claimed_hereditary = true;
};

struct ForbiddenEntry {
    int n = 0;
    std::string graph6;  // canonical form
};

/// Minimal non-members by order, plus the count sequence phi[i] = number of
/// minimal non-members on i+1 vertices.
struct ForbiddenReport {
    std::string class_name;
    int max_n = 0;
    std::vector<ForbiddenEntry> forbidden;  // sorted by (n, graph6)
    std::vector<std::size_t> phi;           // size max_n, for n = 1..max_n
};

/// Raised when a ClassSpec claimed hereditary is caught violating closure:
/// `graph6` is a member whose vertex `vertex` deletion (`sub_graph6`) is not.
class NonHereditaryError : public std::runtime_error {
public:
    NonHereditaryError(std::string g6, int vertex, std::string sub);
    std::string graph6;
    int vertex;
    std::string sub_graph6;
};

/// One canonical representative per isomorphism class on n vertices, sorted
/// by canonical code.  Generation is by canonical augmentation: a child built
/// from a canonical parent survives iff deleting the vertex in the canonical
/// last position recovers that parent, so no global dedup table is needed.
/// Capacity: n <= 10.
std::vector<Graph> enumerate_graphs(int n, unsigned threads = 1);

struct HereditaryCounterexample {
    Graph member;
    int removed_vertex = 0;
};

/// Checks closure under single-vertex deletion for every graph of order
/// <= max_n; returns the first violation in (order, code, vertex) order.
std::optional<HereditaryCounterexample> verify_hereditary(const ClassSpec& spec, int max_n,
                                                          unsigned threads = 1);

/// Full engine run: verifies hereditarity level by level (throwing
/// NonHereditaryError on a violation), collects the minimal non-members, and
/// re-checks soundness of the result: on the swept range a graph is a member
/// iff it contains no report entry as an induced subgraph.
ForbiddenReport minimal_forbidden(const ClassSpec& spec, int max_n, unsigned threads = 1);

std::vector<std::size_t> phi_sequence(const ClassSpec& spec, int max_n, unsigned threads = 1);

nlohmann::ordered_json report_to_json(const ForbiddenReport& report);

}  // namespace gclab

#endif
