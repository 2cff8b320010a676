#include "satkit/weight.hpp"

namespace satkit {

int edge_weight(const Graph& h, int u, int v) {
    if (!h.has_edge(u, v)) throw std::invalid_argument("edge_weight on a non-edge");
    if (h.degree(u) > h.degree(v)) std::swap(u, v);
    VertexSet nu = h.neighbors(u);
    VertexSet nv = h.neighbors(v);
    return 2 * popcount(nu & nv) + popcount(nv & ~nu);
}

std::optional<int> graph_weight(const Graph& h) {
    std::optional<int> best;
    for (auto [u, v] : h.edges()) {
        int w = edge_weight(h, u, v);
        if (!best || w < *best) best = w;
    }
    return best;
}

WeightReport weight_report(const Graph& h) {
    WeightReport report;
    for (auto [u, v] : h.edges()) {
        int w = edge_weight(h, u, v);
        report.edge_weights.emplace(Edge{u, v}, w);
        if (!report.graph_weight || w < *report.graph_weight) {
            report.graph_weight = w;
            report.min_edge = Edge{u, v};
        }
    }
    return report;
}

LowerBound lower_bound(const Graph& h) {
    auto wt = graph_weight(h);
    if (!wt) throw std::invalid_argument("lower bound undefined for an edgeless graph");
    if (*wt == 1) return LowerBound{Rational{0}, Rational{0}};
    long long w = *wt;
    return LowerBound{Rational{w - 1, 2}, Rational{w * w - 4 * w + 5, 2}};
}

}  // namespace satkit
