#include "gclab/containment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gclab {

namespace {

// Pattern vertices by descending degree (tie: ascending index), so the most
// constrained assignments happen first.
std::vector<int> pattern_order(const Graph& p) {
    std::vector<int> order(p.order());
    for (int v = 0; v < p.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.degree(a) > p.degree(b); });
    return order;
}

// Swapping a and b (fixing everything else) is a pattern automorphism iff
// their neighborhoods agree off {a, b}.  Runs of such vertices in the search
// order are interchangeable, so their images can be forced ascending.
std::vector<char> interchangeable_with_previous(const Graph& p, const std::vector<int>& order) {
    std::vector<char> out(order.size(), 0);
    for (std::size_t k = 1; k < order.size(); ++k) {
        const int a = order[k - 1], b = order[k];
        out[k] = (p.neighborhood(a) & ~vertex_bit(b)) == (p.neighborhood(b) & ~vertex_bit(a));
    }
    return out;
}

// Host candidates by descending degree (tie: ascending index).
std::vector<int> host_order(const Graph& h) {
    std::vector<int> order(h.order());
    for (int v = 0; v < h.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    return order;
}

// ---------------------------------------------------------------- subgraph

class EmbedSearch {
public:
    EmbedSearch(const Graph& host, const Graph& pattern, bool induced)
        : host_(host),
          pattern_(pattern),
          induced_(induced),
          porder_(pattern_order(pattern)),
          horder_(host_order(host)),
          swap_prev_(interchangeable_with_previous(pattern, porder_)),
          map_(pattern.order(), -1) {}

    std::optional<std::vector<int>> run() {
        if (pattern_.order() > host_.order()) return std::nullopt;
        if (place(0)) return map_;
        return std::nullopt;
    }

private:
    bool place(std::size_t k) {
        if (k == porder_.size()) return true;
        const int p = porder_[k];
        for (int u : horder_) {
            if (has_vertex(used_, u)) continue;
            if (host_.degree(u) < pattern_.degree(p)) continue;
            if (swap_prev_[k] && u < map_[porder_[k - 1]]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int q = porder_[j];
                if (pattern_.adjacent(p, q)) {
                    ok = host_.adjacent(u, map_[q]);
                } else if (induced_) {
                    ok = !host_.adjacent(u, map_[q]);
                }
            }
            if (!ok) continue;
            map_[p] = u;
            used_ |= vertex_bit(u);
            if (place(k + 1)) return true;
            used_ &= ~vertex_bit(u);
            map_[p] = -1;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    bool induced_;
    std::vector<int> porder_, horder_;
    std::vector<char> swap_prev_;
    std::vector<int> map_;
    VertexSet used_ = 0;
};

// ------------------------------------------------------------- topological

class TopologicalSearch {
public:
    TopologicalSearch(const Graph& host, const Graph& pattern, bool induced)
        : host_(host),
          pattern_(pattern),
          induced_(induced),
          porder_(pattern_order(pattern)),
          horder_(host_order(host)),
          swap_prev_(interchangeable_with_previous(pattern, porder_)),
          pedges_(pattern.edge_list()),
          map_(pattern.order(), -1),
          routes_(pedges_.size()) {}

    std::optional<Witness> run() {
        if (pattern_.order() > host_.order()) return std::nullopt;
        if (place_branch(0)) return std::move(result_);
        return std::nullopt;
    }

private:
    bool place_branch(std::size_t k) {
        if (k == porder_.size()) return route_edge(0);
        const int p = porder_[k];
        for (int u : horder_) {
            if (has_vertex(used_, u)) continue;
            if (host_.degree(u) < pattern_.degree(p)) continue;
            if (swap_prev_[k] && u < map_[porder_[k - 1]]) continue;
            bool ok = true;
            if (induced_) {
                // A subdivision never joins branch vertices of a non-edge, so
                // their images must already be non-adjacent in the host.
                for (std::size_t j = 0; j < k && ok; ++j) {
                    const int q = porder_[j];
                    if (!pattern_.adjacent(p, q)) ok = !host_.adjacent(u, map_[q]);
                }
            }
            if (!ok) continue;
            map_[p] = u;
            used_ |= vertex_bit(u);
            if (place_branch(k + 1)) return true;
            used_ &= ~vertex_bit(u);
            map_[p] = -1;
        }
        return false;
    }

    bool route_edge(std::size_t e) {
        if (e == pedges_.size()) {
            Witness w;
            w.kind = induced_ ? OrderKind::TopologicalInduced : OrderKind::TopologicalSubgraph;
            w.vertex_map = map_;
            w.routes = routes_;
            result_ = std::move(w);
            return true;
        }
        std::vector<int> path = {map_[pedges_[e].first]};
        return extend(e, path, vertex_bit(path[0]));
    }

    // The target must stay reachable from `from` through unused vertices,
    // or the current route can never close.
    bool reachable(int from, int target, VertexSet blocked) const {
        const VertexSet allowed = (host_.vertices() & ~blocked) | vertex_bit(target);
        VertexSet reached = vertex_bit(from);
        for (;;) {
            if (has_vertex(reached, target)) return true;
            VertexSet grown = reached;
            for (int v : elements(reached)) grown |= host_.neighborhood(v) & allowed;
            if (grown == reached) return false;
            reached = grown;
        }
    }

    bool extend(std::size_t e, std::vector<int>& path, VertexSet path_set) {
        const int target = map_[pedges_[e].second];
        const int last = path.back();

        if (has_vertex(host_.neighborhood(last), target)) {
            // Close the route here.
            VertexSet interior = path_set & ~vertex_bit(path.front());
            routes_[e] = path;
            routes_[e].push_back(target);
            used_ |= interior;
            if (route_edge(e + 1)) return true;
            used_ &= ~interior;
            routes_[e].clear();
            // Extending past a vertex adjacent to the target would leave a
            // chord in an induced subdivision.
            if (induced_) return false;
        }

        VertexSet candidates = host_.neighborhood(last) & ~used_ & ~path_set;
        for (int w : elements(candidates)) {
            if (induced_) {
                const VertexSet conflicts =
                    host_.neighborhood(w) & ((used_ | path_set) & ~vertex_bit(last));
                if (conflicts != 0 && conflicts != vertex_bit(target)) continue;
            }
            if (!reachable(w, target, used_ | path_set | vertex_bit(w))) continue;
            path.push_back(w);
            if (extend(e, path, path_set | vertex_bit(w))) return true;
            path.pop_back();
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    bool induced_;
    std::vector<int> porder_, horder_;
    std::vector<char> swap_prev_;
    std::vector<std::pair<int, int>> pedges_;
    std::vector<int> map_;
    std::vector<std::vector<int>> routes_;
    VertexSet used_ = 0;
    std::optional<Witness> result_;
};

// ------------------------------------------------------------------- minor

class MinorSearch {
public:
    MinorSearch(const Graph& host, const Graph& pattern)
        : host_(host),
          pattern_(pattern),
          porder_(pattern_order(pattern)),
          swap_prev_(interchangeable_with_previous(pattern, porder_)),
          branch_(pattern.order(), 0) {}

    std::optional<Witness> run() {
        if (pattern_.order() > host_.order()) return std::nullopt;
        if (assign(0)) {
            Witness w;
            w.kind = OrderKind::Minor;
            w.branch_sets = branch_;
            return w;
        }
        return std::nullopt;
    }

private:
    bool assign(std::size_t k) {
        if (k == porder_.size()) return true;
        VertexSet free = host_.vertices() & ~used_;
        const int remaining = static_cast<int>(porder_.size() - k);
        if (set_size(free) < remaining) return false;
        // a branch set's lowest vertex is its seed, so interchangeable pattern
        // vertices can be forced to take seeds in ascending order
        if (swap_prev_[k]) free &= ~full_set(lowest_vertex(branch_[porder_[k - 1]]) + 1);
        for (int seed : elements(free)) {
            // Connected sets are enumerated once each, from their lowest vertex.
            if (grow(k, vertex_bit(seed), free & ~full_set(seed + 1), host_.neighborhood(seed)))
                return true;
        }
        return false;
    }

    // s: connected candidate branch set for porder_[k]; allowed: vertices that
    // may still join s; s_nbrs: union of host neighborhoods over s.
    bool grow(std::size_t k, VertexSet s, VertexSet allowed, VertexSet s_nbrs) {
        if (commit(k, s, s_nbrs)) return true;
        const int free_left =
            set_size(host_.vertices() & ~used_ & ~s);
        if (free_left < static_cast<int>(porder_.size() - k)) return false;  // no room to grow
        VertexSet frontier = s_nbrs & allowed & ~s;
        for (int v : elements(frontier)) {
            allowed &= ~vertex_bit(v);
            if (grow(k, s | vertex_bit(v), allowed, s_nbrs | host_.neighborhood(v))) return true;
        }
        return false;
    }

    bool commit(std::size_t k, VertexSet s, VertexSet s_nbrs) {
        const int p = porder_[k];
        int unassigned_neighbors = 0;
        for (std::size_t j = 0; j < porder_.size(); ++j) {
            const int q = porder_[j];
            if (!pattern_.adjacent(p, q)) continue;
            if (j < k) {
                if ((s_nbrs & branch_[q]) == 0) return false;
            } else if (j > k) {
                ++unassigned_neighbors;
            }
        }
        const VertexSet free_after = host_.vertices() & ~used_ & ~s;
        if (set_size(free_after) < static_cast<int>(porder_.size() - k - 1)) return false;
        if (set_size(s_nbrs & free_after) < unassigned_neighbors) return false;
        branch_[p] = s;
        used_ |= s;
        if (assign(k + 1)) return true;
        used_ &= ~s;
        branch_[p] = 0;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<int> porder_;
    std::vector<char> swap_prev_;
    std::vector<VertexSet> branch_;
    VertexSet used_ = 0;
};

}  // namespace

std::string_view order_kind_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::Subgraph: return "sub";
        case OrderKind::TopologicalSubgraph: return "top";
        case OrderKind::Minor: return "minor";
        case OrderKind::Induced: return "ind";
        case OrderKind::TopologicalInduced: return "topind";
    }
    return "?";
}

std::optional<OrderKind> order_kind_from_name(std::string_view name) {
    if (name == "sub") return OrderKind::Subgraph;
    if (name == "top") return OrderKind::TopologicalSubgraph;
    if (name == "minor") return OrderKind::Minor;
    if (name == "ind") return OrderKind::Induced;
    if (name == "topind") return OrderKind::TopologicalInduced;
    return std::nullopt;
}

std::optional<Witness> contains(const Graph& host, const Graph& pattern, OrderKind kind) {
    std::optional<Witness> w;
    switch (kind) {
        case OrderKind::Subgraph:
        case OrderKind::Induced: {
            auto map = EmbedSearch(host, pattern, kind == OrderKind::Induced).run();
            if (map) {
                w.emplace();
                w->kind = kind;
                w->vertex_map = std::move(*map);
            }
            break;
        }
        case OrderKind::TopologicalSubgraph:
        case OrderKind::TopologicalInduced:
            w = TopologicalSearch(host, pattern, kind == OrderKind::TopologicalInduced).run();
            break;
        case OrderKind::Minor:
            w = MinorSearch(host, pattern).run();
            break;
    }
    if (w && !verify_witness(host, pattern, *w))
        throw std::logic_error("containment search produced an invalid witness");
    return w;
}

namespace {

bool check_vertex_map(const Graph& host, const Graph& pattern, const std::vector<int>& map,
                      bool require_edges, bool require_nonedges) {
    if (static_cast<int>(map.size()) != pattern.order()) return false;
    VertexSet seen = 0;
    for (int u : map) {
        if (u < 0 || u >= host.order()) return false;
        if (has_vertex(seen, u)) return false;  // not injective
        seen |= vertex_bit(u);
    }
    for (int a = 0; a < pattern.order(); ++a) {
        for (int b = a + 1; b < pattern.order(); ++b) {
            if (pattern.adjacent(a, b)) {
                if (require_edges && !host.adjacent(map[a], map[b])) return false;
            } else {
                if (require_nonedges && host.adjacent(map[a], map[b])) return false;
            }
        }
    }
    return true;
}

bool check_routes(const Graph& host, const Graph& pattern, const Witness& w,
                  VertexSet& all_vertices, std::set<std::pair<int, int>>& subdivision_edges) {
    const auto pedges = pattern.edge_list();
    if (w.routes.size() != pedges.size()) return false;
    VertexSet branch_images = 0;
    for (int u : w.vertex_map) branch_images |= vertex_bit(u);
    VertexSet interiors = 0;
    all_vertices = branch_images;
    for (std::size_t e = 0; e < pedges.size(); ++e) {
        const auto& route = w.routes[e];
        if (route.size() < 2) return false;
        const int fa = w.vertex_map[pedges[e].first];
        const int fb = w.vertex_map[pedges[e].second];
        const bool forward = route.front() == fa && route.back() == fb;
        const bool backward = route.front() == fb && route.back() == fa;
        if (!forward && !backward) return false;
        VertexSet route_set = 0;
        for (std::size_t i = 0; i < route.size(); ++i) {
            const int v = route[i];
            if (v < 0 || v >= host.order()) return false;
            if (has_vertex(route_set, v)) return false;  // repeated vertex
            route_set |= vertex_bit(v);
            if (i > 0) {
                if (!host.adjacent(route[i - 1], v)) return false;
                subdivision_edges.insert({std::min(route[i - 1], v), std::max(route[i - 1], v)});
            }
        }
        const VertexSet inner = route_set & ~vertex_bit(route.front()) & ~vertex_bit(route.back());
        if (inner & branch_images) return false;   // interior hits a branch vertex
        if (inner & interiors) return false;       // routes share an interior
        interiors |= inner;
        all_vertices |= route_set;
    }
    return true;
}

}  // namespace

bool verify_witness(const Graph& host, const Graph& pattern, const Witness& w) {
    switch (w.kind) {
        case OrderKind::Subgraph:
            return check_vertex_map(host, pattern, w.vertex_map, true, false);
        case OrderKind::Induced:
            return check_vertex_map(host, pattern, w.vertex_map, true, true);
        case OrderKind::TopologicalSubgraph:
        case OrderKind::TopologicalInduced: {
            if (!check_vertex_map(host, pattern, w.vertex_map, false,
                                  w.kind == OrderKind::TopologicalInduced))
                return false;
            VertexSet all = 0;
            std::set<std::pair<int, int>> sub_edges;
            if (!check_routes(host, pattern, w, all, sub_edges)) return false;
            if (w.kind == OrderKind::TopologicalInduced) {
                // The embedded subdivision must be induced: no host edge inside
                // its vertex set beyond the route edges.
                for (int a : elements(all))
                    for (int b : elements(all & host.neighborhood(a) & ~full_set(a + 1)))
                        if (!sub_edges.count({a, b})) return false;
            }
            return true;
        }
        case OrderKind::Minor: {
            if (static_cast<int>(w.branch_sets.size()) != pattern.order()) return false;
            VertexSet used = 0;
            for (VertexSet s : w.branch_sets) {
                if (s == 0) return false;
                if (s & ~host.vertices()) return false;
                if (s & used) return false;  // branch sets overlap
                used |= s;
                if (!induces_connected(host, s)) return false;
            }
            for (auto [a, b] : pattern.edge_list())
                if ((neighbors_of_set(host, w.branch_sets[a]) & w.branch_sets[b]) == 0)
                    return false;
            return true;
        }
    }
    return false;
}

bool is_planar(const Graph& g) {
    static const Graph k5 = Graph::complete(5);
    static const Graph k33 = Graph::complete_bipartite(3, 3);
    return !contains(g, k5, OrderKind::TopologicalSubgraph) &&
           !contains(g, k33, OrderKind::TopologicalSubgraph);
}

bool is_outerplanar(const Graph& g) {
    static const Graph k4 = Graph::complete(4);
    static const Graph k23 = Graph::complete_bipartite(2, 3);
    return !contains(g, k4, OrderKind::TopologicalSubgraph) &&
           !contains(g, k23, OrderKind::TopologicalSubgraph);
}

}  // namespace gclab
