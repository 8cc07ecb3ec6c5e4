#include <doctest.h>

#include <algorithm>
#include <set>

#include "pbei/graphs.hpp"

using namespace pbei;

TEST_CASE("graph construction and edges") {
    Graph g = graph_from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(3) == std::vector<int>{2, 4});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

    CHECK_THROWS_AS(graph_from_edges(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges(3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("named families") {
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(claw_graph().edge_count() == 3);
    CHECK(diamond_graph().edge_count() == 5);
    Graph u = disjoint_union(cycle_graph(3), path_graph(2));
    CHECK(u.n() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(4, 5));
    CHECK(!u.has_edge(3, 4));
}

TEST_CASE("bipartition") {
    auto bp = bipartition(path_graph(4));
    REQUIRE(bp.has_value());
    CHECK(bp->side1 == std::vector<int>{1, 3});
    CHECK(bp->side2 == std::vector<int>{2, 4});
    CHECK(!bipartition(cycle_graph(5)).has_value());
    CHECK(bipartition(cycle_graph(6)).has_value());
    // disconnected: each side1 holds the smallest vertex of its component
    auto bp2 = bipartition(disjoint_union(path_graph(2), path_graph(2)));
    REQUIRE(bp2.has_value());
    CHECK(bp2->side1 == std::vector<int>{1, 3});
}

TEST_CASE("longest induced path and odd cycle") {
    // values checked by hand on these small graphs
    CHECK(longest_induced_path_length(cycle_graph(5)) == 3);
    CHECK(longest_induced_odd_cycle_length(cycle_graph(5)) == 5);
    CHECK(longest_induced_path_length(path_graph(4)) == 3);
    CHECK(longest_induced_odd_cycle_length(path_graph(4)) == 0);
    CHECK(longest_induced_path_length(complete_graph(4)) == 1);
    CHECK(longest_induced_odd_cycle_length(complete_graph(4)) == 3);
    CHECK(longest_induced_path_length(claw_graph()) == 2);
    // even cycles are not recorded by oc
    CHECK(longest_induced_odd_cycle_length(cycle_graph(6)) == 0);
}

TEST_CASE("classification") {
    Classification c = classify(cycle_graph(5));
    CHECK(c.is_connected);
    CHECK(c.is_cycle);
    CHECK(!c.is_bipartite);
    CHECK(c.girth == 5);
    CHECK(!c.is_chordal);
    CHECK(c.is_unicyclic);

    c = classify(path_graph(3));
    CHECK(c.is_path);
    CHECK(c.is_tree);
    CHECK(c.is_bipartite);
    CHECK(c.is_complete_bipartite);  // P3 = K_{1,2}

    c = classify(complete_graph(4));
    CHECK(c.is_complete);
    CHECK(c.is_chordal);
    CHECK(c.is_block_graph);
    CHECK(c.max_degree == 3);

    c = classify(claw_graph());
    CHECK(c.is_claw);
    CHECK(c.is_complete_bipartite);
    CHECK(c.is_tree);

    c = classify(diamond_graph());
    CHECK(c.is_diamond);
    CHECK(c.is_chordal);
    CHECK(!c.is_block_graph);

    // free vertices: simplicial vertices (neighborhood is a clique)
    c = classify(path_graph(3));
    CHECK(c.free_vertices == std::vector<int>{1, 3});
    CHECK(c.cut_vertices == std::vector<int>{2});
}

TEST_CASE("graph surgery") {
    Graph g = cycle_graph(4);
    Graph h = delete_edge(g, {1, 2});
    CHECK(h.edge_count() == 3);
    CHECK_THROWS_AS(delete_edge(g, {1, 3}), std::invalid_argument);

    InducedSubgraph sub = induced_subgraph(cycle_graph(5), {2, 3, 5});
    CHECK(sub.graph.n() == 3);
    CHECK(sub.graph.edge_count() == 1);  // only 2-3 survives
    CHECK(sub.vertex_map == std::vector<int>{2, 3, 5});

    InducedSubgraph dv = delete_vertex(cycle_graph(4), 2);
    CHECK(dv.graph.n() == 3);
    CHECK(dv.graph.edge_count() == 2);

    // G_v on the claw: completing N(1) = {2,3,4} gives K4
    Graph gv = neighborhood_completion(claw_graph(), 1);
    CHECK(gv.edge_count() == 6);

    // (C5 \ {1,2})_e for the non-edge e = {1,2}: N(1) = {5}, N(2) = {3}
    Graph ge = neighborhood_completion(delete_edge(cycle_graph(5), {1, 2}), {1, 2});
    CHECK(ge.edge_count() == 4);
}

TEST_CASE("enumeration counts match the literature") {
    // counts of graphs up to isomorphism (OEIS A000088) and
    // connected graphs (A001349)
    const long all[] = {1, 2, 4, 11, 34, 156};
    const long conn[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_graphs(n, false, true).size() == static_cast<size_t>(all[n - 1]));
        CHECK(enumerate_graphs(n, true, true).size() == static_cast<size_t>(conn[n - 1]));
    }
    CHECK_THROWS_AS(enumerate_graphs(9, false, true), std::invalid_argument);
}

TEST_CASE("canonical form is an isomorphism invariant") {
    // relabeled C5 vs C5
    Graph a = cycle_graph(5);
    Graph b = graph_from_edges(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(path_graph(5)) != canonical_form(cycle_graph(5)));
    // every pair of distinct n=5 representatives has distinct keys
    auto graphs = enumerate_graphs(5, false, true);
    std::set<std::uint64_t> keys;
    for (const auto& g : graphs) keys.insert(canonical_form(g));
    CHECK(keys.size() == graphs.size());
}

TEST_CASE("graph6 round trip") {
    for (const auto& g : enumerate_graphs(5, false, true)) {
        Graph back = from_graph6(to_graph6(g));
        CHECK(back == g);
    }
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Graph g = diamond_graph();
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back == g);
    Graph parsed = parse_edge_list("# a comment\n4\n1 2\n3 4\n");
    CHECK(parsed.n() == 4);
    CHECK(parsed.edge_count() == 2);
}
