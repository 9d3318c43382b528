#include "gclab/forbidden.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "gclab/canonical.hpp"
#include "gclab/containment.hpp"
#include "gclab/graph6.hpp"
#include "gclab/parallel.hpp"

namespace gclab {

NonHereditaryError::NonHereditaryError(std::string g6, int v, std::string sub)
    : std::runtime_error("class is not hereditary: " + g6 + " is a member but deleting vertex " +
                         std::to_string(v) + " leaves non-member " + sub),
      graph6(std::move(g6)),
      vertex(v),
      sub_graph6(std::move(sub)) {}

namespace {

struct Level {
    std::vector<Graph> graphs;        // canonical forms, sorted by code
    std::vector<std::string> codes;   // aligned with graphs
};

Level empty_level() {
    Level level;
    level.graphs.push_back(Graph());
    level.codes.push_back(to_graph6(Graph()));
    return level;
}

// All order-n classes from the order-(n-1) classes.  Every child of every
// parent is tested once per isomorphism type seen at that parent; it is kept
// iff deleting the vertex in the canonical last position recovers the parent.
// Distinct parents then cannot emit the same child class.
Level next_level(const Level& parents, int n, unsigned threads) {
    auto per_parent = parallel_map<std::vector<std::pair<std::string, Graph>>>(
        parents.graphs.size(), threads, [&](std::size_t pi) {
            std::vector<std::pair<std::string, Graph>> accepted;
            const Graph& parent = parents.graphs[pi];
            const std::string& parent_code = parents.codes[pi];
            std::unordered_set<std::string> seen;
            const VertexSet all_masks = full_set(n - 1);
            for (VertexSet nbrs = 0;; ++nbrs) {
                const Graph child = parent.with_vertex(nbrs);
                CanonResult canon = canonicalize(child);
                if (seen.insert(canon.code.bytes).second) {
                    int last = 0;
                    while (canon.labeling[last] != n - 1) ++last;
                    if (canonical_code(child.without_vertex(last)).bytes == parent_code)
                        accepted.emplace_back(std::move(canon.code.bytes), std::move(canon.form));
                }
                if (nbrs == all_masks) break;
            }
            return accepted;
        });

    std::vector<std::pair<std::string, Graph>> merged;
    for (auto& chunk : per_parent)
        for (auto& item : chunk) merged.push_back(std::move(item));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Level level;
    level.graphs.reserve(merged.size());
    level.codes.reserve(merged.size());
    for (auto& [code, graph] : merged) {
        if (!level.codes.empty() && level.codes.back() == code)
            throw std::logic_error("duplicate class escaped canonical augmentation");
        level.codes.push_back(std::move(code));
        level.graphs.push_back(std::move(graph));
    }
    return level;
}

void check_enumeration_range(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative order");
    if (n > 10) throw std::length_error("enumerate_graphs capacity is 10 vertices");
}

// Per-graph facts gathered in one parallel pass over a level.
struct GraphFacts {
    char member = 0;
    char minimal = 0;           // non-member with all deletions members
    int violation_vertex = -1;  // member with a non-member deletion
};

// Every isomorphism class of order <= max_n, with membership evaluated and
// single-vertex deletions resolved against the previous level.
struct SweptRange {
    std::vector<Level> levels;                  // 0..max_n
    std::vector<std::vector<GraphFacts>> facts; // aligned

    struct Violation {
        int level;
        std::size_t index;
        int vertex;
    };
    std::optional<Violation> violation;

    SweptRange(const ClassSpec& spec, int max_n, unsigned threads) {
        levels.resize(max_n + 1);
        facts.resize(max_n + 1);
        levels[0] = empty_level();
        facts[0].push_back(GraphFacts{spec.member(levels[0].graphs[0]) ? char(1) : char(0), 0, -1});
        std::unordered_map<std::string, char> prev_member{
            {levels[0].codes[0], facts[0][0].member}};
        for (int n = 1; n <= max_n; ++n) {
            levels[n] = next_level(levels[n - 1], n, threads);
            const Level& level = levels[n];
            facts[n] = parallel_map<GraphFacts>(level.graphs.size(), threads, [&](std::size_t i) {
                const Graph& g = level.graphs[i];
                GraphFacts out;
                out.member = spec.member(g) ? 1 : 0;
                bool deletions_member = true;
                for (int v = 0; v < g.order(); ++v) {
                    const auto it = prev_member.find(canonical_code(g.without_vertex(v)).bytes);
                    if (it == prev_member.end())
                        throw std::logic_error(
                            "deletion of an enumerated graph missing from previous level");
                    if (!it->second) {
                        deletions_member = false;
                        if (out.member && out.violation_vertex < 0) out.violation_vertex = v;
                    }
                }
                out.minimal = (!out.member && deletions_member) ? 1 : 0;
                return out;
            });
            std::unordered_map<std::string, char> cur_member;
            cur_member.reserve(level.graphs.size());
            for (std::size_t i = 0; i < level.graphs.size(); ++i) {
                if (!violation && facts[n][i].violation_vertex >= 0)
                    violation = Violation{n, i, facts[n][i].violation_vertex};
                cur_member.emplace(level.codes[i], facts[n][i].member);
            }
            prev_member = std::move(cur_member);
        }
    }

    const Violation* first_violation() const { return violation ? &*violation : nullptr; }
};

}  // namespace

std::vector<Graph> enumerate_graphs(int n, unsigned threads) {
    check_enumeration_range(n);
    Level level = empty_level();
    for (int k = 1; k <= n; ++k) level = next_level(level, k, threads);
    return std::move(level.graphs);
}

std::optional<HereditaryCounterexample> verify_hereditary(const ClassSpec& spec, int max_n,
                                                          unsigned threads) {
    if (max_n < 1) throw std::invalid_argument("verify_hereditary: max_n must be positive");
    if (max_n > 9) throw std::length_error("verify_hereditary capacity is 9 vertices");
    const SweptRange swept(spec, max_n, threads);
    if (const auto* v = swept.first_violation())
        return HereditaryCounterexample{swept.levels[v->level].graphs[v->index], v->vertex};
    return std::nullopt;
}

ForbiddenReport minimal_forbidden(const ClassSpec& spec, int max_n, unsigned threads) {
    if (max_n < 1) throw std::invalid_argument("minimal_forbidden: max_n must be positive");
    if (max_n > 9) throw std::length_error("minimal_forbidden capacity is 9 vertices");

    const SweptRange swept(spec, max_n, threads);

    // Hereditary closure is what makes deletion-minimality correct, so any
    // violation anywhere in the range aborts before a report is assembled.
    if (const auto* v = swept.first_violation()) {
        const Graph& g = swept.levels[v->level].graphs[v->index];
        throw NonHereditaryError(swept.levels[v->level].codes[v->index], v->vertex,
                                 to_graph6(canonical_form(g.without_vertex(v->vertex))));
    }

    ForbiddenReport report;
    report.class_name = spec.name;
    report.max_n = max_n;
    report.phi.assign(max_n, 0);
    std::vector<Graph> forbidden_graphs;
    for (int n = 1; n <= max_n; ++n) {
        const Level& level = swept.levels[n];
        for (std::size_t i = 0; i < level.graphs.size(); ++i) {
            if (!swept.facts[n][i].minimal) continue;
            report.forbidden.push_back(ForbiddenEntry{n, level.codes[i]});
            report.phi[n - 1] += 1;
            forbidden_graphs.push_back(level.graphs[i]);
        }

        // Soundness: membership must coincide with avoiding every minimal
        // non-member found so far (they all have order <= n).
        auto sound = parallel_map<char>(level.graphs.size(), threads, [&](std::size_t i) {
            bool hit = false;
            for (const Graph& f : forbidden_graphs) {
                if (contains(level.graphs[i], f, OrderKind::Induced)) {
                    hit = true;
                    break;
                }
            }
            return char(swept.facts[n][i].member == (hit ? 0 : 1));
        });
        for (std::size_t i = 0; i < sound.size(); ++i)
            if (!sound[i])
                throw std::logic_error("forbidden-set report is unsound for " + level.codes[i]);
    }
    return report;
}

std::vector<std::size_t> phi_sequence(const ClassSpec& spec, int max_n, unsigned threads) {
    return minimal_forbidden(spec, max_n, threads).phi;
}

nlohmann::ordered_json report_to_json(const ForbiddenReport& report) {
    nlohmann::ordered_json j;
    j["class"] = report.class_name;
    j["max_n"] = report.max_n;
    auto& list = j["forbidden"] = nlohmann::ordered_json::array();
    for (const auto& entry : report.forbidden)
        list.push_back(nlohmann::ordered_json{{"n", entry.n}, {"graph6", entry.graph6}});
    j["phi"] = report.phi;
    return j;
}

}  // namespace gclab
