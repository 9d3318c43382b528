#ifndef GCLAB_TEST_ORACLES_HPP
#define GCLAB_TEST_ORACLES_HPP

// Brute-force reference implementations, kept independent of the library's
// search code so disagreements point at real bugs.

#include <cstdint>
#include <string>
#include <vector>

#include "gclab/graph.hpp"
#include "gclab/recognizers.hpp"

namespace gclab::testing {

/// Isomorphism by trying all vertex permutations (order <= 8).
bool brute_isomorphic(const Graph& a, const Graph& b);

/// Least graph6 string over all relabelings (order <= 7).
std::string brute_min_code(const Graph& g);

/// All 2^C(n,2) labelled graphs on n vertices.
std::vector<Graph> all_labelled_graphs(int n);

/// Injective embedding search over all vertex injections.
bool oracle_subgraph(const Graph& host, const Graph& pattern, bool induced);

/// Subdivision enumeration (while it fits in the host) + oracle_subgraph.
bool oracle_topological(const Graph& host, const Graph& pattern, bool induced);

/// All assignments of host vertices to pattern branch sets or "unused".
bool oracle_minor(const Graph& host, const Graph& pattern);

/// Subset scan for an induced cycle of the requested parity and length.
bool oracle_has_hole(const Graph& g, HoleParity parity, int min_len);

int brute_clique(const Graph& g);
int brute_chromatic(const Graph& g);

/// Mock-threshold membership by dynamic programming over vertex subsets.
bool oracle_mock_threshold(const Graph& g);

/// Threshold membership via the forbidden triple: no induced P4, C4 or 2K2.
bool oracle_threshold(const Graph& g);

}  // namespace gclab::testing

#endif
