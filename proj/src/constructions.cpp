#include "satkit/constructions.hpp"

#include <numeric>

namespace satkit {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

void check_clique_sizes(const std::vector<int>& p) {
    if (p.empty()) throw std::invalid_argument("clique size list is empty");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 2) throw std::invalid_argument("clique sizes must be at least 2");
        if (i > 0 && p[i] < p[i - 1])
            throw std::invalid_argument("clique sizes must be sorted ascending");
    }
}

}  // namespace

Graph dominating_lift(const Graph& g) { return add_dominating(g); }

Graph clique_partition(int k, int n) {
    if (k < 1) throw std::invalid_argument("clique size must be positive");
    if (n < k + 1)
        throw std::invalid_argument("clique partition needs at least k+1 vertices");
    int q = n / k;
    int r = n % k;
    Graph g = empty_graph(0);
    for (int i = 0; i < q; ++i) g = disjoint_union(g, complete(k));
    return disjoint_union(g, complete(r));
}

long long clique_partition_edges(int k, int n) {
    int r = n % k;
    return (n - r) / k * choose2(k) + choose2(r);
}

Graph disjoint_cliques_saturated(const std::vector<int>& p, int n) {
    check_clique_sizes(p);
    int total = std::accumulate(p.begin(), p.end(), 0);
    if (n < total)
        throw std::invalid_argument("order too small for the disjoint clique target");
    int t = 1 + (total - p[0]);
    int isolated = n - t - (p[0] - 2);
    return join(complete(p[0] - 2), disjoint_union(complete(t), empty_graph(isolated)));
}

long long disjoint_cliques_edges(const std::vector<int>& p, int n) {
    long long total = std::accumulate(p.begin(), p.end(), 0LL);
    return (p[0] - 2) * (n + 1 - total) + choose2(total - 1);
}

Graph disjoint_cliques(const std::vector<int>& p) {
    check_clique_sizes(p);
    Graph g = empty_graph(0);
    for (int size : p) g = disjoint_union(g, complete(size));
    return g;
}

Graph join_lift(const std::vector<int>& p, int ell, int n) {
    if (ell < 0) throw std::invalid_argument("join depth must be nonnegative");
    Graph g = disjoint_cliques_saturated(p, n - ell);
    for (int i = 0; i < ell; ++i) g = dominating_lift(g);
    return g;
}

Graph threshold_saturated(const ThresholdSequence& seq, int n) {
    if (n < 1 + static_cast<int>(seq.size()))
        throw std::invalid_argument("order too small for the threshold target");

    // Walk the automaton to find the last reset-regime dominating step and
    // count the weight-shift dominating steps after it.
    AutomatonState state = AutomatonState::initial();
    int last_reset_k = -1;
    int lifts_after = 0;
    for (Step step : seq) {
        if (step == Step::Dominating) {
            bool weight_shift = !state.has_isolated || (state.wt && *state.wt <= state.k - 2);
            if (weight_shift) {
                ++lifts_after;
            } else {
                last_reset_k = state.k;
                lifts_after = 0;
            }
        }
        state = step_automaton(state, step);
    }
    if (last_reset_k < 0)
        throw std::invalid_argument("no saturated graph exists for an edgeless target");

    Graph g = clique_partition(last_reset_k, n - lifts_after);
    for (int i = 0; i < lifts_after; ++i) g = dominating_lift(g);
    return g;
}

}  // namespace satkit
