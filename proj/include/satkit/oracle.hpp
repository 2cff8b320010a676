#ifndef SATKIT_ORACLE_HPP
#define SATKIT_ORACLE_HPP

#include "satkit/graph.hpp"
#include "satkit/rational.hpp"

#include <optional>
#include <vector>

namespace satkit {

inline constexpr int kEnumerationCap = 8;

/// One representative per isomorphism class of n-vertex graphs, grown one
/// edge at a time and deduplicated by canonical key. Deterministic order.
class GraphEnumerator {
public:
    GraphEnumerator(int n);

    int edge_budget() const { return max_edges_; }
    int current_edges() const { return m_; }
    const std::vector<Graph>& layer() const { return layer_; }

    /// Moves to the (m+1)-edge layer; false once past the edge budget.
    bool advance();

private:
    int n_;
    int m_ = 0;
    int max_edges_;
    std::vector<Graph> layer_;
};

/// All isomorphism classes with exactly m edges, deterministic order.
std::vector<Graph> enumerate_graphs(int n, int m);

struct SatResult {
    Graph h;
    int n = 0;
    std::optional<long long> value;  // nullopt = infinity (edgeless H)
    std::optional<Graph> witness;
    SaturationVerdict verdict;
};

/// Exact sat(H, n) by ascending-edge-count search over isomorphism classes.
/// The witness is the first saturated graph in enumeration order; the result
/// is identical for any worker count.
SatResult sat_exact(const Graph& h, int n, int workers = 1);

struct SharpnessProbe {
    std::vector<std::pair<int, long long>> points;  // (n, sat(H, n))
    std::vector<long long> successive_slopes;
    std::optional<Rational> weight_slope;  // (wt(H)-1)/2, nullopt when wt infinite
};

/// sat(H, n) across a range with successive differences next to the weight
/// slope. Data only; no asymptotic verdict.
SharpnessProbe sharpness_probe(const Graph& h, int n_lo, int n_hi, int workers = 1);

}  // namespace satkit

#endif
