#include "satkit/json_out.hpp"

namespace satkit {

std::string edge_key(const Edge& e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.order()}, {"edges", edges}};
}

json embedding_json(const Embedding& e) { return json(e.map); }

json verdict_json(const SaturationVerdict& v) {
    json out{{"h_free", v.is_h_free}, {"saturated", v.saturated}};
    if (v.violating_embedding)
        out["violating_embedding"] = embedding_json(*v.violating_embedding);
    if (v.missing) out["missing"] = edge_key(*v.missing);
    if (v.saturated) {
        json certs = json::object();
        for (const auto& [edge, emb] : v.certificates)
            certs[edge_key(edge)] = embedding_json(emb);
        out["certificates"] = certs;
    }
    return out;
}

json weight_report_json(const WeightReport& r) {
    json weights = json::object();
    for (const auto& [edge, w] : r.edge_weights) weights[edge_key(edge)] = w;
    json out{{"edge_weights", weights}};
    if (r.graph_weight)
        out["graph_weight"] = *r.graph_weight;
    else
        out["graph_weight"] = "inf";
    out["min_edge"] = r.min_edge ? json(edge_key(*r.min_edge)) : json(nullptr);
    return out;
}

json lower_bound_json(const LowerBound& b) {
    return json{{"slope", to_string(b.slope)}, {"constant", to_string(b.constant)}};
}

json automaton_state_json(const AutomatonState& s) {
    json out{{"k", s.k}};
    out["wt"] = s.wt ? json(*s.wt) : json("inf");
    out["has_isolated"] = s.has_isolated;
    out["satlim"] = s.satlim ? json(to_string(*s.satlim)) : json("inf");
    return out;
}

json sat_result_json(const SatResult& r) {
    json out{{"h", graph_json(r.h)}, {"n", r.n}};
    out["value"] = r.value ? json(*r.value) : json("inf");
    if (r.witness) {
        json edges = json::array();
        for (auto [u, v] : r.witness->edges()) edges.push_back({u, v});
        out["witness_edges"] = edges;
    } else {
        out["witness_edges"] = nullptr;
    }
    return out;
}

json probe_json(const SharpnessProbe& p) {
    json points = json::array();
    for (auto [n, v] : p.points) points.push_back({n, v});
    json out{{"points", points}, {"successive_slopes", p.successive_slopes}};
    out["weight_slope"] = p.weight_slope ? json(to_string(*p.weight_slope)) : json("inf");
    return out;
}

}  // namespace satkit
