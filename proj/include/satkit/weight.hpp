#ifndef SATKIT_WEIGHT_HPP
#define SATKIT_WEIGHT_HPP

#include "satkit/graph.hpp"
#include "satkit/rational.hpp"

#include <map>
#include <optional>

namespace satkit {

/// wt(uv) = 2|N(u) ∩ N(v)| + |N(v) − N(u)| with the lower-degree endpoint
/// as u. Orientation-independent on degree ties.
int edge_weight(const Graph& h, int u, int v);

/// Minimum edge weight; nullopt encodes the infinite weight of an edgeless
/// graph.
std::optional<int> graph_weight(const Graph& h);

struct WeightReport {
    std::map<Edge, int> edge_weights;
    std::optional<int> graph_weight;  // nullopt = infinity
    std::optional<Edge> min_edge;
};

WeightReport weight_report(const Graph& h);

/// The linear lower bound on saturation numbers derived from the graph
/// weight: slope (wt-1)/2 and additive constant (wt^2-4wt+5)/2, degenerating
/// to the zero bound at wt = 1.
struct LowerBound {
    Rational slope;
    Rational constant;

    Rational value_at(long long n) const { return slope * n - constant; }
    long long integer_value_at(long long n) const {
        Rational v = value_at(n);
        return v < 0 ? 0 : ceil_of(v);
    }
};

LowerBound lower_bound(const Graph& h);

}  // namespace satkit

#endif
