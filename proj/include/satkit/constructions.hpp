#ifndef SATKIT_CONSTRUCTIONS_HPP
#define SATKIT_CONSTRUCTIONS_HPP

#include "satkit/graph.hpp"
#include "satkit/threshold.hpp"

#include <vector>

namespace satkit {

/// G plus one dominating vertex. If G is H-saturated, the result is
/// saturated for H plus a dominating vertex; minimality of G is only needed
/// for edge-count optimality, not for saturation.
Graph dominating_lift(const Graph& g);

/// q disjoint copies of K_k plus one K_r where n = qk + r. Saturated for
/// H plus a dominating vertex whenever H has k vertices, an isolated vertex
/// and weight above k-2. Requires n >= k+1.
Graph clique_partition(int k, int n);

/// Edge count of clique_partition(k, n): (n-r)/k * C(k,2) + C(r,2).
long long clique_partition_edges(int k, int n);

/// The join K_{p1-2} ∨ (K_t ∪ I) with t = 1 + p2 + ... + pm, saturated for
/// the disjoint clique union K_{p1} ∪ ... ∪ K_{pm}. Vertices are labeled
/// join-clique first, then K_t, then the isolated set.
Graph disjoint_cliques_saturated(const std::vector<int>& p, int n);

/// Edge count of disjoint_cliques_saturated: (p1-2)(n+1-Σp_i) + C(Σp_i-1, 2).
long long disjoint_cliques_edges(const std::vector<int>& p, int n);

/// The disjoint clique union K_{p1} ∪ ... ∪ K_{pm} itself (the forbidden
/// graph the construction above is saturated for).
Graph disjoint_cliques(const std::vector<int>& p);

/// ell dominating lifts of disjoint_cliques_saturated(p, n - ell); saturated
/// for K_ell ∨ (K_{p1} ∪ ... ∪ K_{pm}).
Graph join_lift(const std::vector<int>& p, int ell, int n);

/// Saturated graph on n vertices for the threshold graph build(seq): the
/// last dominating step in the reset regime seeds a clique partition and
/// every later weight-shift dominating step applies a dominating lift;
/// isolated steps change nothing. Spare vertices go to the clique partition.
Graph threshold_saturated(const ThresholdSequence& seq, int n);

}  // namespace satkit

#endif
