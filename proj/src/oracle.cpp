#include "satkit/oracle.hpp"

#include "satkit/weight.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace satkit {

GraphEnumerator::GraphEnumerator(int n) : n_(n), max_edges_(n * (n - 1) / 2) {
    if (n < 1) throw std::invalid_argument("enumeration needs at least one vertex");
    if (n > kEnumerationCap)
        throw CapabilityError("enumeration capped at " + std::to_string(kEnumerationCap) +
                              " vertices");
    layer_ = {empty_graph(n)};
}

bool GraphEnumerator::advance() {
    if (m_ >= max_edges_) return false;
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& g : layer_) {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                if (g.has_edge(u, v)) continue;
                Graph extended = g.with_edge(u, v);
                if (seen.insert(canonical_key(extended)).second)
                    next.push_back(std::move(extended));
            }
        }
    }
    layer_ = std::move(next);
    ++m_;
    return true;
}

std::vector<Graph> enumerate_graphs(int n, int m) {
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge count out of range");
    GraphEnumerator en(n);
    for (int i = 0; i < m; ++i) en.advance();
    return en.layer();
}

namespace {

// Index of the first saturated graph in the layer, or -1. Work is split by
// index so the minimum over workers matches the serial scan.
int first_saturated_index(const std::vector<Graph>& layer, const Graph& h, int workers) {
    int count = static_cast<int>(layer.size());
    if (workers <= 1 || count < 2 * workers) {
        for (int i = 0; i < count; ++i)
            if (verify_saturation(layer[i], h).saturated) return i;
        return -1;
    }
    std::vector<int> found(static_cast<std::size_t>(workers), -1);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < count; i += workers) {
                if (verify_saturation(layer[i], h).saturated) {
                    found[w] = i;
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    int best = -1;
    for (int idx : found)
        if (idx >= 0 && (best < 0 || idx < best)) best = idx;
    return best;
}

}  // namespace

SatResult sat_exact(const Graph& h, int n, int workers) {
    if (n < h.order()) throw std::invalid_argument("order below the pattern size");
    SatResult result;
    result.h = h;
    result.n = n;
    if (h.edge_count() == 0) return result;  // infinite by convention

    GraphEnumerator en(n);
    while (true) {
        int idx = first_saturated_index(en.layer(), h, workers);
        if (idx >= 0) {
            result.value = en.current_edges();
            result.witness = en.layer()[static_cast<std::size_t>(idx)];
            result.verdict = verify_saturation(*result.witness, h);
            return result;
        }
        if (!en.advance())
            throw std::logic_error("no saturated graph found up to the complete graph");
    }
}

SharpnessProbe sharpness_probe(const Graph& h, int n_lo, int n_hi, int workers) {
    if (n_lo > n_hi) throw std::invalid_argument("empty probe range");
    SharpnessProbe probe;
    auto wt = graph_weight(h);
    if (wt) probe.weight_slope = Rational{*wt - 1, 2};
    for (int n = n_lo; n <= n_hi; ++n) {
        auto r = sat_exact(h, n, workers);
        if (!r.value) throw std::invalid_argument("probe undefined for an edgeless pattern");
        probe.points.emplace_back(n, *r.value);
    }
    for (std::size_t i = 1; i < probe.points.size(); ++i)
        probe.successive_slopes.push_back(probe.points[i].second - probe.points[i - 1].second);
    return probe;
}

}  // namespace satkit
