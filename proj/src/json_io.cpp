#include "gclab/json_io.hpp"

#include <nlohmann/json.hpp>

#include "gclab/graph6.hpp"

namespace gclab {

namespace {

nlohmann::ordered_json vertex_set_to_json(VertexSet s) {
    auto arr = nlohmann::ordered_json::array();
    for (int v : elements(s)) arr.push_back(v);
    return arr;
}

VertexSet vertex_set_from_json(const nlohmann::json& arr) {
    VertexSet s = 0;
    for (const auto& v : arr) s |= vertex_bit(v.get<int>());
    return s;
}

}  // namespace

nlohmann::ordered_json witness_to_json(const Witness& w, const Graph& pattern) {
    nlohmann::ordered_json j;
    j["kind"] = order_kind_name(w.kind);
    switch (w.kind) {
        case OrderKind::Subgraph:
        case OrderKind::Induced:
            j["vertex_map"] = w.vertex_map;
            break;
        case OrderKind::TopologicalSubgraph:
        case OrderKind::TopologicalInduced: {
            j["vertex_map"] = w.vertex_map;
            const auto pedges = pattern.edge_list();
            auto routes = nlohmann::ordered_json::array();
            for (std::size_t e = 0; e < w.routes.size(); ++e) {
                nlohmann::ordered_json r;
                if (e < pedges.size())
                    r["edge"] = nlohmann::ordered_json::array({pedges[e].first, pedges[e].second});
                r["path"] = w.routes[e];
                routes.push_back(std::move(r));
            }
            j["routes"] = std::move(routes);
            break;
        }
        case OrderKind::Minor: {
            auto sets = nlohmann::ordered_json::array();
            for (VertexSet s : w.branch_sets) sets.push_back(vertex_set_to_json(s));
            j["branch_sets"] = std::move(sets);
            break;
        }
    }
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    Witness w;
    const auto kind = order_kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown witness kind");
    w.kind = *kind;
    if (j.contains("vertex_map")) w.vertex_map = j["vertex_map"].get<std::vector<int>>();
    if (j.contains("routes"))
        for (const auto& route : j["routes"])
            w.routes.push_back(route.at("path").get<std::vector<int>>());
    if (j.contains("branch_sets"))
        for (const auto& s : j["branch_sets"]) w.branch_sets.push_back(vertex_set_from_json(s));
    return w;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    if (const auto* ord = std::get_if<OrderingCert>(&cert)) {
        j["type"] = "ordering";
        j["order"] = ord->order;
    } else if (const auto* fw = std::get_if<ForbiddenWitnessCert>(&cert)) {
        j["type"] = "forbidden_witness";
        j["pattern"] = to_graph6(fw->pattern);
        j["witness"] = witness_to_json(fw->embed, fw->pattern);
    } else if (const auto* bp = std::get_if<BipartitionCert>(&cert)) {
        j["type"] = "bipartition";
        j["parts"] = nlohmann::ordered_json::array(
            {vertex_set_to_json(bp->left), vertex_set_to_json(bp->right)});
    } else if (const auto* cp = std::get_if<CliquePairCert>(&cert)) {
        j["type"] = "clique_pair";
        j["parts"] = nlohmann::ordered_json::array(
            {vertex_set_to_json(cp->first), vertex_set_to_json(cp->second)});
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "ordering") return OrderingCert{j.at("order").get<std::vector<int>>()};
    if (type == "forbidden_witness") {
        ForbiddenWitnessCert cert;
        cert.pattern = parse_graph6(j.at("pattern").get<std::string>());
        cert.embed = witness_from_json(j.at("witness"));
        return cert;
    }
    if (type == "bipartition") {
        const auto& parts = j.at("parts");
        return BipartitionCert{vertex_set_from_json(parts.at(0)), vertex_set_from_json(parts.at(1))};
    }
    if (type == "clique_pair") {
        const auto& parts = j.at("parts");
        return CliquePairCert{vertex_set_from_json(parts.at(0)), vertex_set_from_json(parts.at(1))};
    }
    throw std::invalid_argument("unknown certificate type");
}

}  // namespace gclab
