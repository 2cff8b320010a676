#ifndef SATKIT_GRAPH_HPP
#define SATKIT_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satkit {

/// Raised when an input exceeds a declared size cap (exact algorithms only).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vertex subset as a bitmask; graphs here never exceed 31 vertices.
using VertexSet = std::uint32_t;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const;
    VertexSet closed_neighbors(int v) const;
    int degree(int v) const;
    /// |N(v) ∩ S|
    int degree_in(int v, VertexSet s) const;

    bool has_isolated_vertex() const;

    /// Edges sorted lexicographically with u < v.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// Constructors for the standard building blocks.
Graph complete(int k);
Graph empty_graph(int k);
Graph path(int k);
Graph cycle(int k);
Graph star(int leaves);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph add_isolated(const Graph& g);
Graph add_dominating(const Graph& g);

/// K_t minus a perfect matching on 2q of its vertices.
Graph complete_minus_matching(int t, int q);

/// Injective vertex map witnessing a (not necessarily induced) subgraph
/// copy of H in G; map[h] is the G-vertex assigned to H-vertex h.
struct Embedding {
    std::vector<int> map;
};

/// Finds a subgraph embedding of H into G, if any. When required_edge is
/// given, only embeddings where some H-edge maps onto that vertex pair are
/// accepted. H-vertices are assigned in descending H-degree and candidate
/// G-vertices tried in ascending label, so the result is deterministic.
std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h,
                                           std::optional<Edge> required_edge = std::nullopt);

struct SaturationVerdict {
    bool is_h_free = false;
    bool saturated = false;
    std::optional<Embedding> violating_embedding;      // when not H-free
    std::optional<Edge> missing;                       // H-free but not saturated
    std::map<Edge, Embedding> certificates;            // saturated: one per non-edge
};

/// Decides whether G is H-saturated per the definition: H-free and every
/// missing edge completes a copy of H. Certificates are found with the
/// added edge required in the image.
SaturationVerdict verify_saturation(const Graph& g, const Graph& h);

inline constexpr int kCanonicalCap = 10;

/// Canonical key: minimum over all vertex permutations of the adjacency
/// upper triangle packed into a 64-bit word (vertex-by-vertex block order).
/// Equal keys iff isomorphic. Throws CapabilityError above kCanonicalCap.
std::uint64_t canonical_key(const Graph& g);

/// Byte-string form of canonical_key (8 bytes, big-endian).
std::string canonical_form(const Graph& g);

}  // namespace satkit

#endif
