#include "gclab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "gclab/graph6.hpp"

namespace gclab {

namespace {

using Partition = std::vector<std::vector<int>>;  // ordered list of cells

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonResult run() {
        Partition cells;
        if (n_ > 0) {
            std::vector<int> all(n_);
            std::iota(all.begin(), all.end(), 0);
            cells.push_back(std::move(all));
        }
        std::vector<int> prefix;
        descend(std::move(cells), prefix);

        CanonResult out;
        out.form = g_.permuted(best_perm_);
        out.code = CanonicalCode{best_code_};
        out.labeling.assign(n_, 0);
        for (int i = 0; i < n_; ++i) out.labeling[best_perm_[i]] = i;
        return out;
    }

private:
    VertexSet mask_of(const std::vector<int>& cell) const {
        VertexSet m = 0;
        for (int v : cell) m |= vertex_bit(v);
        return m;
    }

    // Equitable refinement: split cells by neighbor counts against each cell
    // until stable.  New subcells are ordered by ascending count, which keeps
    // the refinement equivariant under relabeling.
    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
                const VertexSet splitter = mask_of(cells[si]);
                for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                    auto& cell = cells[ci];
                    if (cell.size() < 2) continue;
                    std::vector<std::pair<int, int>> keyed;  // (count, vertex)
                    keyed.reserve(cell.size());
                    for (int v : cell)
                        keyed.emplace_back(set_size(g_.neighborhood(v) & splitter), v);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) continue;
                    Partition pieces;
                    int prev_count = keyed.front().first - 1;
                    for (auto& [cnt, v] : keyed) {
                        if (cnt != prev_count) {
                            pieces.emplace_back();
                            prev_count = cnt;
                        }
                        pieces.back().push_back(v);
                    }
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void descend(Partition cells, std::vector<int>& prefix) {
        refine(cells);

        std::size_t target = cells.size();
        std::size_t largest = 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > largest) {
                largest = cells[i].size();
                target = i;
            }
        }
        if (target == cells.size()) {  // discrete partition: a leaf
            std::vector<int> perm(cells.size());
            for (std::size_t i = 0; i < cells.size(); ++i) perm[i] = cells[i][0];
            handle_leaf(perm);
            return;
        }

        std::vector<int> tried;
        for (std::size_t idx = 0; idx < cells[target].size(); ++idx) {
            const int u = cells[target][idx];
            if (!tried.empty() && prunable(u, tried, prefix)) continue;
            Partition child = cells;
            std::vector<int> rest = child[target];
            rest.erase(std::find(rest.begin(), rest.end(), u));
            child[target] = {u};
            child.insert(child.begin() + target + 1, std::move(rest));
            prefix.push_back(u);
            descend(std::move(child), prefix);
            prefix.pop_back();
            tried.push_back(u);
        }
    }

    // u can be skipped if an automorphism fixing the individualized prefix
    // pointwise maps it into the orbit of an already-explored sibling.
    bool prunable(int u, const std::vector<int>& tried, const std::vector<int>& prefix) const {
        std::vector<int> root(n_);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& aut : automorphisms_) {
            bool fixes = true;
            for (int p : prefix)
                if (aut[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(aut[v]);
                if (a != b) root[a] = b;
            }
        }
        const int ur = find(u);
        for (int t : tried)
            if (find(t) == ur) return true;
        return false;
    }

    void handle_leaf(const std::vector<int>& perm) {
        std::string code = to_graph6(g_.permuted(perm));
        if (!have_leaf_) {
            have_leaf_ = true;
            first_perm_ = perm;
            first_code_ = code;
            best_perm_ = perm;
            best_code_ = std::move(code);
            return;
        }
        if (code == first_code_) record_automorphism(first_perm_, perm);
        if (code < best_code_) {
            best_perm_ = perm;
            best_code_ = std::move(code);
        } else if (code == best_code_) {
            record_automorphism(best_perm_, perm);
        }
    }

    void record_automorphism(const std::vector<int>& pa, const std::vector<int>& pb) {
        std::vector<int> sigma(n_);
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            sigma[pa[i]] = pb[i];
            if (pa[i] != pb[i]) identity = false;
        }
        if (!identity) automorphisms_.push_back(std::move(sigma));
    }

    const Graph& g_;
    int n_;
    bool have_leaf_ = false;
    std::vector<int> first_perm_, best_perm_;
    std::string first_code_, best_code_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonResult canonicalize(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalCode canonical_code(const Graph& g) { return canonicalize(g).code; }

Graph canonical_form(const Graph& g) { return canonicalize(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace gclab
