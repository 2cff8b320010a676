#ifndef SATKIT_THRESHOLD_HPP
#define SATKIT_THRESHOLD_HPP

#include "satkit/graph.hpp"
#include "satkit/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satkit {

enum class Step { Isolated, Dominating };

/// Build recipe for a threshold graph: start from a single vertex and add
/// one vertex per step, either isolated or dominating.
using ThresholdSequence = std::vector<Step>;

/// Parses a string over {I, D}; throws on other characters.
ThresholdSequence parse_sequence(std::string_view text);
std::string to_string(const ThresholdSequence& seq);

/// Vertex 0 is the initial vertex; step i adds vertex i+1.
Graph build(const ThresholdSequence& seq);

/// Peels isolated-before-dominating; absent iff G is not a threshold graph.
std::optional<ThresholdSequence> recognize(const Graph& g);

/// Tracks (vertex count, weight, isolated flag, saturation slope) along a
/// threshold sequence. Weight and slope are nullopt while the graph is
/// edgeless (the infinite values).
struct AutomatonState {
    int k = 1;
    std::optional<int> wt;
    bool has_isolated = true;
    std::optional<Rational> satlim;

    static AutomatonState initial() { return AutomatonState{}; }
};

/// One vertex addition. A dominating step either shifts the weight by 2 and
/// the slope by 1 (isolate-free base, or wt <= k-2) or resets to wt = k,
/// slope (k-1)/2 (isolated vertex present and wt > k-2).
AutomatonState step_automaton(const AutomatonState& s, Step step);

/// Fold of step_automaton from the initial state.
AutomatonState threshold_weight(const ThresholdSequence& seq);

}  // namespace satkit

#endif
