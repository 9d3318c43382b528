#ifndef GCLAB_RECOGNIZERS_HPP
#define GCLAB_RECOGNIZERS_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gclab/containment.hpp"
#include "gclab/graph.hpp"

namespace gclab {

enum class GraphClass {
    Forest,
    Chordal,
    Bipartite,
    CoBipartite,
    Threshold,
    MockThreshold,
    Berge,
    Perfect,
    EvenHoleFree,
};

inline constexpr std::array<GraphClass, 9> kAllClasses = {
    GraphClass::Forest,     GraphClass::Chordal,       GraphClass::Bipartite,
    GraphClass::CoBipartite, GraphClass::Threshold,    GraphClass::MockThreshold,
    GraphClass::Berge,      GraphClass::Perfect,       GraphClass::EvenHoleFree,
};

std::string_view class_name(GraphClass c);
std::optional<GraphClass> class_from_name(std::string_view name);

enum class HoleParity { Any, Odd, Even };

/// Induced cycle of length >= max(4, min_len) with the requested parity, as a
/// vertex sequence in cycle order, or nullopt.  Throws std::invalid_argument
/// for min_len < 4.
std::optional<std::vector<int>> find_hole(const Graph& g, HoleParity parity, int min_len);

/// find_hole on the complement, with the same vertex labels.
std::optional<std::vector<int>> find_antihole(const Graph& g, HoleParity parity, int min_len);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/// Prefix conditions on a vertex ordering (v1..vn), where d_i is the degree
/// of v_i inside {v1..vi} and N_i its neighborhood there:
///   Forest:              d_i <= 1
///   Chordal:             N_i is a clique
///   Threshold:           d_i = 0 or d_i = i-1
///   MockThreshold:       d_i <= 1 or d_i >= i-2
///   ChordalNeighborhood: N_i induces a chordal graph
enum class OrderingRule { Forest, Chordal, Threshold, MockThreshold, ChordalNeighborhood };

bool ordering_satisfies(const Graph& g, std::span<const int> order, OrderingRule rule);

// --------------------------------------------------------------- certificates

struct OrderingCert {
    std::vector<int> order;
};
struct ForbiddenWitnessCert {
    Graph pattern;
    Witness embed;  // induced embedding of pattern into the classified graph
};
struct BipartitionCert {
    VertexSet left = 0, right = 0;
};
struct CliquePairCert {
    VertexSet first = 0, second = 0;
};
using Certificate = std::variant<OrderingCert, ForbiddenWitnessCert, BipartitionCert, CliquePairCert>;

struct Classification {
    GraphClass graph_class = GraphClass::Forest;
    bool member = false;
    std::optional<Certificate> certificate;
};

/// Replays a certificate against the class's ordering rule or forbidden set.
/// False on anything malformed; never throws.
bool verify_certificate(const Graph& g, const Certificate& cert, GraphClass c);

// ---------------------------------------------------------------- recognizers

Classification recognize_forest(const Graph& g);
Classification recognize_chordal(const Graph& g);
Classification recognize_bipartite(const Graph& g);
Classification recognize_co_bipartite(const Graph& g);
Classification recognize_threshold(const Graph& g);

enum class MtMode { Greedy, Backtracking };
Classification recognize_mock_threshold(const Graph& g, MtMode mode = MtMode::Backtracking);

/// Chordality test alone (maximum cardinality search + prefix replay).
bool is_chordal(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);

/// chi = omega on every induced subgraph, swept over all vertex subsets
/// deduplicated by canonical code.  Capacity: order <= 16.
bool is_perfect(const Graph& g);

/// No odd hole and no odd antihole.
bool is_berge(const Graph& g);

/// Backtracking search for an ordering whose prefix neighborhoods induce
/// chordal graphs.  Guaranteed to succeed when g has no even hole; may also
/// succeed on graphs that have one.  Capacity: order <= 16.
std::optional<std::vector<int>> even_hole_free_ordering(const Graph& g);

/// Plain membership predicate for any class in the roster.
bool is_member(const Graph& g, GraphClass c);

/// Full classification with certificate where one is defined for the class.
Classification classify_as(const Graph& g, GraphClass c,
                           MtMode mt_mode = MtMode::Backtracking);

}  // namespace gclab

#endif
