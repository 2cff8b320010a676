#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satkit/oracle.hpp"
#include "satkit/threshold.hpp"
#include "satkit/weight.hpp"
#include "test_support.hpp"

using namespace satkit;
using namespace satkit::testing;

TEST_CASE("sequence parsing") {
    CHECK(to_string(parse_sequence("DDID")) == "DDID");
    CHECK(parse_sequence("").empty());
    CHECK_THROWS_AS(parse_sequence("DXD"), std::invalid_argument);
}

TEST_CASE("build examples") {
    CHECK(build(parse_sequence("DDD")) == complete(4));
    CHECK(build(parse_sequence("II")) == empty_graph(3));

    // DDID is K4 with a pendant attached to the last dominating vertex.
    Graph g = build(parse_sequence("DDID"));
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 7);
    CHECK(canonical_key(g) == canonical_key(k4_plus_pendant()));
}

TEST_CASE("recognition examples") {
    CHECK(recognize(k4_plus_pendant()).has_value());
    CHECK_FALSE(recognize(path(4)).has_value());
    CHECK_FALSE(recognize(cycle(4)).has_value());
    auto k1_seq = recognize(complete(1));
    REQUIRE(k1_seq.has_value());
    CHECK(k1_seq->empty());
}

TEST_CASE("recognize inverts build up to isomorphism") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        auto seq = random_sequence(rng, 9);
        Graph g = build(seq);
        auto recognized = recognize(g);
        REQUIRE(recognized.has_value());
        CHECK(canonical_key(build(*recognized)) == canonical_key(g));
    }
}

TEST_CASE("automaton traces from the weight results") {
    // K4: wt ∞→1→3→5, satlim ∞→0→1→2.
    AutomatonState s = AutomatonState::initial();
    CHECK_FALSE(s.wt.has_value());
    s = step_automaton(s, Step::Dominating);
    CHECK(s.wt == 1);
    CHECK(s.satlim == Rational{0});
    s = step_automaton(s, Step::Dominating);
    CHECK(s.wt == 3);
    s = step_automaton(s, Step::Dominating);
    CHECK(s.wt == 5);
    CHECK(s.satlim == Rational{2});

    // K4 plus pendant: ends at wt 4, satlim 3/2.
    auto pendant = threshold_weight(parse_sequence("DDID"));
    CHECK(pendant.wt == 4);
    CHECK(pendant.satlim == Rational{3, 2});

    // Stars K_{1,k}: wt k, satlim (k-1)/2.
    for (int k = 1; k <= 8; ++k) {
        ThresholdSequence seq(static_cast<std::size_t>(k - 1), Step::Isolated);
        seq.push_back(Step::Dominating);
        auto state = threshold_weight(seq);
        CHECK(state.wt == k);
        CHECK(state.satlim == Rational{k - 1, 2});
    }
}

TEST_CASE("automaton agrees with the direct weight computation") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        auto seq = random_sequence(rng, 9);
        Graph g = build(seq);
        auto state = threshold_weight(seq);
        CHECK(state.k == g.order());
        CHECK(state.wt == graph_weight(g));
        CHECK(state.has_isolated == g.has_isolated_vertex());
        if (state.wt)
            CHECK(state.satlim == Rational{*state.wt - 1, 2});
        else
            CHECK_FALSE(state.satlim.has_value());
    }
}

namespace {

// Exhaustive peel: threshold iff some removal order of isolated/dominating
// vertices empties the graph.
bool peels_somehow(const Graph& g, VertexSet alive, int count) {
    if (count <= 1) return true;
    for (int v = 0; v < g.order(); ++v) {
        if (!((alive >> v) & 1)) continue;
        int d = g.degree_in(v, alive);
        if (d == 0 || d == count - 1)
            if (peels_somehow(g, alive & ~(VertexSet{1} << v), count - 1)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("recognition matches exhaustive peeling on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for (int m = 0; m <= n * (n - 1) / 2; ++m) {
            for (const Graph& g : enumerate_graphs(n, m)) {
                bool exhaustive = peels_somehow(g, (VertexSet{1} << n) - 1, n);
                CHECK(recognize(g).has_value() == exhaustive);
            }
        }
    }
}
