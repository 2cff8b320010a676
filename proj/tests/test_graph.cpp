#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satkit/graph.hpp"
#include "satkit/io.hpp"
#include "test_support.hpp"

#include <set>
#include <sstream>

using namespace satkit;
using namespace satkit::testing;

TEST_CASE("neighborhoods and degrees") {
    Graph k4 = complete(4);
    CHECK(k4.neighbors(0) == VertexSet{0b1110});
    CHECK(k4.degree(0) == 3);
    CHECK(k4.closed_neighbors(0) == VertexSet{0b1111});

    Graph p3 = path(3);
    CHECK(p3.degree_in(1, 0b101) == 2);

    CHECK(empty_graph(3).neighbors(0) == 0);
    CHECK_THROWS_AS((void)empty_graph(3).neighbors(5), std::invalid_argument);
}

TEST_CASE("graph invariants on construction") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);

    Graph g = Graph::from_edges(4, {{1, 0}, {2, 3}});
    CHECK(g.has_edge(0, 1));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("constructors") {
    Graph s = join(complete(1), empty_graph(3));
    CHECK(s.edge_count() == 3);
    CHECK(s.degree(0) == 3);

    CHECK(add_dominating(complete(3)) == complete(4));

    Graph two_k3 = disjoint_union(complete(3), complete(3));
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.edge_count() == 6);

    // m(join) = m1 + m2 + n1*n2
    Graph j = join(path(3), cycle(4));
    CHECK(j.edge_count() == 2 + 4 + 12);

    CHECK(add_isolated(complete(2)).has_isolated_vertex());
    CHECK_FALSE(complete(2).has_isolated_vertex());
}

TEST_CASE("canonical form separates isomorphism classes") {
    Graph p = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph p_relabeled = Graph::from_edges(3, {{0, 1}, {0, 2}});
    CHECK(canonical_form(p) == canonical_form(p_relabeled));
    CHECK(canonical_form(complete(3)) != canonical_form(p));

    // All labeled graphs on 3 vertices fall into 4 classes; cross-check the
    // bucketing with brute-force isomorphism.
    auto labeled = all_labeled_graphs(3);
    std::set<std::string> forms;
    for (const auto& g : labeled) forms.insert(canonical_form(g));
    CHECK(static_cast<int>(forms.size()) == 4);
    CHECK(brute_force_class_count(labeled) == 4);

    CHECK_THROWS_AS((void)canonical_key(empty_graph(11)), CapabilityError);
}

TEST_CASE("canonical form agrees with brute-force isomorphism on 5 vertices") {
    auto labeled = all_labeled_graphs(5);
    std::set<std::uint64_t> keys;
    for (const auto& g : labeled) keys.insert(canonical_key(g));
    CHECK(static_cast<int>(keys.size()) == 34);
    CHECK(brute_force_class_count(labeled) == 34);
}

TEST_CASE("subgraph containment examples") {
    CHECK_FALSE(contains_subgraph(cycle(5), complete(3)));
    CHECK(contains_subgraph(complete(4), star(3)));

    Graph k4_iso = add_isolated(complete(4));
    Graph host = k4_iso.with_edge(0, 4);
    CHECK_FALSE(contains_subgraph(host, complete(3), Edge{0, 4}));
}

TEST_CASE("containment matches the exhaustive scan") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int ng = 4 + static_cast<int>(rng() % 4);  // up to 7
        int nh = 2 + static_cast<int>(rng() % 4);  // up to 5
        Graph g = random_graph(rng, ng);
        Graph h = random_graph(rng, nh);
        bool found = contains_subgraph(g, h).has_value();
        CHECK(found == brute_force_embeds(g, h));
        if (found) {
            auto emb = *contains_subgraph(g, h);
            for (auto [u, v] : h.edges()) CHECK(g.has_edge(emb.map[u], emb.map[v]));
        }
    }
}

TEST_CASE("saturation verdicts") {
    // Star is triangle-saturated.
    auto verdict = verify_saturation(star(4), complete(3));
    CHECK(verdict.saturated);
    CHECK(verdict.certificates.size() == 6);

    // P4 is triangle-free but its endpoints close a C4, not a triangle.
    auto open_verdict = verify_saturation(path(4), complete(3));
    CHECK(open_verdict.is_h_free);
    CHECK_FALSE(open_verdict.saturated);
    CHECK(open_verdict.missing == Edge{0, 3});

    // K2 ∨ empty(4) is the extremal K4-saturated shape.
    auto k4_sat = verify_saturation(join(complete(2), empty_graph(4)), complete(4));
    CHECK(k4_sat.saturated);

    auto violating = verify_saturation(complete(4), complete(3));
    CHECK_FALSE(violating.is_h_free);
    CHECK(violating.violating_embedding.has_value());

    CHECK_THROWS_AS(verify_saturation(complete(3), empty_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_saturation(complete(2), complete(3)), std::invalid_argument);
}

TEST_CASE("certificates use the added edge") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 6, 0.4);
        Graph h = complete(3);
        auto verdict = verify_saturation(g, h);
        if (!verdict.saturated) continue;
        for (const auto& [edge, emb] : verdict.certificates) {
            Graph host = g.with_edge(edge.first, edge.second);
            bool edge_used = false;
            for (auto [u, v] : h.edges()) {
                CHECK(host.has_edge(emb.map[u], emb.map[v]));
                if ((emb.map[u] == edge.first && emb.map[v] == edge.second) ||
                    (emb.map[u] == edge.second && emb.map[v] == edge.first))
                    edge_used = true;
            }
            CHECK(edge_used);
        }
    }
}

TEST_CASE("graph text round trip and diagnostics") {
    Graph g = join(complete(2), empty_graph(3));
    std::stringstream buf;
    write_graph(buf, g);
    CHECK(read_graph(buf) == g);

    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_graph(in);
    };
    CHECK(parse("# comment\n3\n0 1\n") == Graph::from_edges(3, {{0, 1}}));
    CHECK_THROWS_WITH_AS(parse("3\n1 0\n"), "line 2: edge must satisfy 0 <= u < v < n",
                         ParseError);
    CHECK_THROWS_AS(parse("3\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse("3\n0 x\n"), ParseError);
}
