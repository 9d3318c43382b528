#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gclab/canonical.hpp"
#include "gclab/forbidden.hpp"
#include "gclab/recognizers.hpp"
#include "oracles.hpp"

using namespace gclab;
using namespace gclab::testing;

namespace {

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

std::vector<Graph> sweep(int max_n) {
    static std::vector<Graph> cache;
    static int cached_to = -1;
    if (cached_to < max_n) {
        cache.clear();
        for (int n = 0; n <= max_n; ++n)
            for (const Graph& g : enumerate_graphs(n)) cache.push_back(g);
        cached_to = max_n;
    }
    std::vector<Graph> out;
    for (const Graph& g : cache)
        if (g.order() <= max_n) out.push_back(g);
    return out;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    VertexSet s = 0;
    for (int v : cycle) s |= vertex_bit(v);
    if (set_size(s) != k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = j - i == 1 || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("find_hole") {
    auto c5_hole = find_hole(Graph::cycle(5), HoleParity::Odd, 4);
    REQUIRE(c5_hole);
    CHECK(c5_hole->size() == 5);
    CHECK(is_induced_cycle(Graph::cycle(5), *c5_hole));

    CHECK_FALSE(find_hole(Graph::cycle(6), HoleParity::Odd, 4));
    CHECK_FALSE(find_hole(Graph::complete(6), HoleParity::Any, 4));
    CHECK_FALSE(find_hole(Graph::path(6), HoleParity::Any, 4));
    CHECK(find_hole(Graph::cycle(6), HoleParity::Even, 4));
    CHECK_THROWS_AS(find_hole(Graph::cycle(5), HoleParity::Any, 3), std::invalid_argument);

    for (const Graph& g : sweep(7)) {
        for (auto parity : {HoleParity::Any, HoleParity::Odd, HoleParity::Even}) {
            const auto hole = find_hole(g, parity, 4);
            CHECK(hole.has_value() == oracle_has_hole(g, parity, 4));
            if (hole) {
                CHECK(is_induced_cycle(g, *hole));
                if (parity == HoleParity::Odd) CHECK(hole->size() % 2 == 1);
                if (parity == HoleParity::Even) CHECK(hole->size() % 2 == 0);
            }
        }
    }
}

TEST_CASE("find_antihole") {
    auto anti6 = find_antihole(Graph::cycle(6).complement(), HoleParity::Any, 5);
    REQUIRE(anti6);
    CHECK(anti6->size() == 6);
    // C5 is its own complement
    auto anti5 = find_antihole(Graph::cycle(5), HoleParity::Odd, 4);
    REQUIRE(anti5);
    CHECK(is_induced_cycle(Graph::cycle(5).complement(), *anti5));
    CHECK_FALSE(find_antihole(Graph::path(4), HoleParity::Any, 4));
}

TEST_CASE("recognize_forest") {
    auto p4 = recognize_forest(Graph::path(4));
    CHECK(p4.member);
    REQUIRE(p4.certificate);
    CHECK(verify_certificate(Graph::path(4), *p4.certificate, GraphClass::Forest));

    auto c3 = recognize_forest(Graph::cycle(3));
    CHECK_FALSE(c3.member);
    REQUIRE(c3.certificate);
    const auto& fw = std::get<ForbiddenWitnessCert>(*c3.certificate);
    CHECK(fw.pattern == Graph::cycle(3));
    CHECK(verify_certificate(Graph::cycle(3), *c3.certificate, GraphClass::Forest));

    CHECK(recognize_forest(Graph::edgeless(5)).member);
}

TEST_CASE("recognize_chordal") {
    auto c4 = recognize_chordal(Graph::cycle(4));
    CHECK_FALSE(c4.member);
    REQUIRE(c4.certificate);
    CHECK(verify_certificate(Graph::cycle(4), *c4.certificate, GraphClass::Chordal));

    const Graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    CHECK(recognize_chordal(tree).member);
    auto k5 = recognize_chordal(Graph::complete(5));
    CHECK(k5.member);
    CHECK(verify_certificate(Graph::complete(5), *k5.certificate, GraphClass::Chordal));
}

TEST_CASE("recognize_bipartite") {
    CHECK(recognize_bipartite(Graph::cycle(6)).member);
    auto c5 = recognize_bipartite(Graph::cycle(5));
    CHECK_FALSE(c5.member);
    CHECK(std::get<ForbiddenWitnessCert>(*c5.certificate).pattern == Graph::cycle(5));
    auto k3 = recognize_bipartite(Graph::complete(3));
    CHECK_FALSE(k3.member);
    CHECK(std::get<ForbiddenWitnessCert>(*k3.certificate).pattern == Graph::cycle(3));
}

TEST_CASE("recognize_co_bipartite") {
    CHECK(recognize_co_bipartite(Graph::complete(5)).member);
    CHECK(recognize_co_bipartite(Graph::cycle(6).complement()).member);
    auto triple = recognize_co_bipartite(Graph::edgeless(3));
    CHECK_FALSE(triple.member);
    REQUIRE(triple.certificate);
    CHECK(std::get<ForbiddenWitnessCert>(*triple.certificate).pattern == Graph::edgeless(3));
    CHECK(verify_certificate(Graph::edgeless(3), *triple.certificate, GraphClass::CoBipartite));
    // odd antihole witness
    auto anti = recognize_co_bipartite(Graph::cycle(7).complement());
    CHECK_FALSE(anti.member);
    CHECK(verify_certificate(Graph::cycle(7).complement(), *anti.certificate,
                             GraphClass::CoBipartite));
}

TEST_CASE("recognize_threshold") {
    auto p4 = recognize_threshold(Graph::path(4));
    CHECK_FALSE(p4.member);
    CHECK(is_isomorphic(std::get<ForbiddenWitnessCert>(*p4.certificate).pattern, Graph::path(4)));
    CHECK(verify_certificate(Graph::path(4), *p4.certificate, GraphClass::Threshold));

    auto star = recognize_threshold(Graph::complete_bipartite(1, 3));
    CHECK(star.member);
    CHECK(verify_certificate(Graph::complete_bipartite(1, 3), *star.certificate,
                             GraphClass::Threshold));

    auto c4 = recognize_threshold(Graph::cycle(4));
    CHECK_FALSE(c4.member);
    CHECK(is_isomorphic(std::get<ForbiddenWitnessCert>(*c4.certificate).pattern, Graph::cycle(4)));

    auto m2 = recognize_threshold(two_k2());
    CHECK_FALSE(m2.member);
    CHECK(verify_certificate(two_k2(), *m2.certificate, GraphClass::Threshold));
}

TEST_CASE("recognize_mock_threshold") {
    CHECK_FALSE(recognize_mock_threshold(Graph::cycle(5)).member);
    auto p4 = recognize_mock_threshold(Graph::path(4));
    CHECK(p4.member);
    CHECK(verify_certificate(Graph::path(4), *p4.certificate, GraphClass::MockThreshold));
    CHECK(recognize_mock_threshold(Graph::cycle(4)).member);
    CHECK(oracle_mock_threshold(Graph::cycle(4)));

    // a failed membership comes with a minimal forbidden induced witness
    auto c5 = recognize_mock_threshold(Graph::cycle(5));
    REQUIRE(c5.certificate);
    CHECK(verify_certificate(Graph::cycle(5), *c5.certificate, GraphClass::MockThreshold));

    const Graph wheel6 = Graph::cycle(5).with_vertex(full_set(5));  // apex over C5
    auto w = recognize_mock_threshold(wheel6);
    CHECK_FALSE(w.member);
    REQUIRE(w.certificate);
    const auto& fw = std::get<ForbiddenWitnessCert>(*w.certificate);
    CHECK(is_isomorphic(fw.pattern, Graph::cycle(5)));  // minimal witness inside the wheel
    CHECK(verify_certificate(wheel6, *w.certificate, GraphClass::MockThreshold));
}

TEST_CASE("mock threshold membership, closure, and mode agreement") {
    for (const Graph& g : sweep(7)) {
        const bool exact = recognize_mock_threshold(g, MtMode::Backtracking).member;
        CHECK(exact == oracle_mock_threshold(g));
        CHECK(exact == recognize_mock_threshold(g, MtMode::Greedy).member);
        CHECK(exact == is_member(g.complement(), GraphClass::MockThreshold));
        if (exact)
            for (int v = 0; v < g.order(); ++v)
                CHECK(is_member(g.without_vertex(v), GraphClass::MockThreshold));
    }
}

TEST_CASE("every threshold graph is mock threshold") {
    for (const Graph& g : sweep(7))
        if (is_member(g, GraphClass::Threshold)) {
            CHECK(is_member(g, GraphClass::MockThreshold));
            CHECK(is_member(g.complement(), GraphClass::Threshold));
        }
}

TEST_CASE("clique and chromatic numbers") {
    CHECK(clique_number(Graph::complete(4)) == 4);
    CHECK(chromatic_number(Graph::complete(4)) == 4);
    CHECK(clique_number(Graph::cycle(5)) == 2);
    CHECK(chromatic_number(Graph::cycle(5)) == 3);
    CHECK(clique_number(Graph::cycle(6)) == 2);
    CHECK(chromatic_number(Graph::cycle(6)) == 2);
    CHECK(chromatic_number(Graph()) == 0);
    CHECK(clique_number(Graph::petersen()) == 2);
    CHECK(chromatic_number(Graph::petersen()) == 3);

    for (const Graph& g : sweep(6)) {
        CHECK(clique_number(g) == brute_clique(g));
        const int chi = chromatic_number(g);
        CHECK(chi == brute_chromatic(g));
        CHECK(chi >= clique_number(g));
    }
}

TEST_CASE("perfection and Berge graphs") {
    CHECK_FALSE(is_perfect(Graph::cycle(5)));
    CHECK_FALSE(is_berge(Graph::cycle(5)));
    CHECK(is_berge(Graph::cycle(6)));
    CHECK_FALSE(is_berge(Graph::cycle(7).complement()));
    CHECK(is_perfect(Graph::complete(7)));
    for (int n = 2; n <= 8; ++n) CHECK(is_perfect(Graph::complete_bipartite(n / 2, n - n / 2)));

    for (const Graph& g : sweep(6)) CHECK(is_berge(g) == is_perfect(g));
}

TEST_CASE("even-hole-free orderings") {
    auto c5 = even_hole_free_ordering(Graph::cycle(5));
    REQUIRE(c5);
    CHECK(ordering_satisfies(Graph::cycle(5), *c5, OrderingRule::ChordalNeighborhood));
    // the ordering search is one-directional: C4 has an even hole yet reduces
    auto c4 = even_hole_free_ordering(Graph::cycle(4));
    REQUIRE(c4);
    CHECK(ordering_satisfies(Graph::cycle(4), *c4, OrderingRule::ChordalNeighborhood));
    CHECK(even_hole_free_ordering(Graph::complete(4)));

    for (const Graph& g : sweep(7)) {
        if (find_hole(g, HoleParity::Even, 4)) continue;
        const auto order = even_hole_free_ordering(g);
        REQUIRE(order);
        CHECK(ordering_satisfies(g, *order, OrderingRule::ChordalNeighborhood));
    }
}

TEST_CASE("verify_certificate") {
    const std::vector<int> ascending = {0, 1, 2, 3};
    CHECK(verify_certificate(Graph::path(4), OrderingCert{ascending}, GraphClass::Forest));
    CHECK_FALSE(verify_certificate(Graph::cycle(3), OrderingCert{{0, 1, 2}}, GraphClass::Forest));
    CHECK_FALSE(verify_certificate(Graph::path(4), OrderingCert{{0, 1, 2}}, GraphClass::Forest));
    CHECK_FALSE(verify_certificate(Graph::path(4), OrderingCert{{0, 0, 2, 3}}, GraphClass::Forest));

    Witness identity;
    identity.kind = OrderKind::Induced;
    identity.vertex_map = {0, 1, 2, 3};
    CHECK(verify_certificate(Graph::cycle(4), ForbiddenWitnessCert{Graph::cycle(4), identity},
                             GraphClass::Threshold));
    // a threshold pattern cannot witness non-thresholdness
    CHECK_FALSE(verify_certificate(Graph::complete(4),
                                   ForbiddenWitnessCert{Graph::complete(4), identity},
                                   GraphClass::Threshold));

    CHECK(verify_certificate(Graph::cycle(4), BipartitionCert{0b0101, 0b1010},
                             GraphClass::Bipartite));
    CHECK_FALSE(verify_certificate(Graph::cycle(4), BipartitionCert{0b0011, 0b1100},
                                   GraphClass::Bipartite));
    CHECK_FALSE(verify_certificate(Graph::cycle(4), BipartitionCert{0b0101, 0b0010},
                                   GraphClass::Bipartite));
}

TEST_CASE("forbidden-characterization equivalences on every small graph") {
    for (const Graph& g : sweep(6)) {
        const bool no_hole = !oracle_has_hole(g, HoleParity::Any, 4);
        const bool no_triangle = !find_triangle(g).has_value();
        CHECK(is_member(g, GraphClass::Forest) == (no_hole && no_triangle));
        CHECK(is_member(g, GraphClass::Chordal) == no_hole);
        const bool no_odd_hole = !oracle_has_hole(g, HoleParity::Odd, 4);
        CHECK(is_member(g, GraphClass::Bipartite) == (no_odd_hole && no_triangle));
        CHECK(is_member(g, GraphClass::Threshold) == oracle_threshold(g));
        CHECK(is_member(g, GraphClass::CoBipartite) ==
              is_member(g.complement(), GraphClass::Bipartite));
        CHECK(is_member(g, GraphClass::EvenHoleFree) ==
              !oracle_has_hole(g, HoleParity::Even, 4));
    }
}

TEST_CASE("degenerate inputs belong to every class") {
    for (const Graph& g : {Graph(), Graph(1)})
        for (GraphClass c : kAllClasses) {
            CHECK(is_member(g, c));
            const auto result = classify_as(g, c);
            CHECK(result.member);
            if (result.certificate) CHECK(verify_certificate(g, *result.certificate, c));
        }
}

TEST_CASE("classifications ship verifiable certificates") {
    for (const Graph& g : sweep(6)) {
        for (GraphClass c : kAllClasses) {
            const auto result = classify_as(g, c);
            CHECK(result.member == is_member(g, c));
            if (result.certificate) CHECK(verify_certificate(g, *result.certificate, c));
            // the six core recognizers always certify, as do the negative
            // verdicts of the hole-characterized classes
            switch (c) {
                case GraphClass::Forest:
                case GraphClass::Chordal:
                case GraphClass::Bipartite:
                case GraphClass::CoBipartite:
                case GraphClass::Threshold:
                case GraphClass::MockThreshold:
                    CHECK(result.certificate.has_value());
                    break;
                case GraphClass::Berge:
                case GraphClass::Perfect:
                    if (!result.member) CHECK(result.certificate.has_value());
                    break;
                case GraphClass::EvenHoleFree:
                    CHECK(result.certificate.has_value());
                    break;
            }
        }
    }
}
