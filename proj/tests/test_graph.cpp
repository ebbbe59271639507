#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tifs/graph.hpp"

using namespace tifs;

TEST_CASE("construction and basic accessors") {
    Graph g(3);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    CHECK(g.has_edge(2, 0));
    CHECK(g.degree(2) == 1);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("bug graph shape") {
    Graph bug = fixtures::bug_graph();
    CHECK(bug.size() == 8);
    CHECK(bug.edge_count() == 11);
    CHECK(bug.min_degree() == 2);
    CHECK(bug.label(0) == "A");
    CHECK(bug.label(7) == "B");
    CHECK_FALSE(bug.has_edge(0, 7));
}

TEST_CASE("delete_vertex reindexes densely and keeps labels") {
    Graph bug = fixtures::bug_graph();
    Graph without_a = bug.delete_vertex(0);
    CHECK(without_a.size() == 7);
    CHECK(without_a.edge_count() == 9);
    CHECK(without_a.label(6) == "B");

    Graph single = fixtures::complete(2).delete_vertex(0);
    CHECK(single.size() == 1);

    Graph iso(3);
    iso.add_edge(0, 1);
    Graph after = iso.delete_vertex(2);  // isolated vertex
    CHECK(after.edge_count() == 1);
}

TEST_CASE("min_degree basics") {
    CHECK(fixtures::complete(4).min_degree() == 3);
    CHECK(fixtures::edgeless(3).min_degree() == 0);
}

TEST_CASE("biconnectivity conventions and named cases") {
    CHECK(is_biconnected(Graph(1)));
    CHECK(is_biconnected(fixtures::complete(2)));
    CHECK_FALSE(is_biconnected(fixtures::edgeless(2)));
    CHECK(is_biconnected(fixtures::bug_graph()));
    CHECK_FALSE(is_biconnected(fixtures::path(3)));
    CHECK_FALSE(is_biconnected(fixtures::bowtie()));
    CHECK(is_biconnected(fixtures::cycle(7)));
    CHECK(is_biconnected(fixtures::petersen()));
}

TEST_CASE("biconnectivity matches the remove-any-vertex definition") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        Graph g = oracle::random_graph(rng, n, p);
        CAPTURE(trial);
        CHECK(is_biconnected(g) == oracle::brute_biconnected(g));
    }
}

TEST_CASE("cliques_of_size named examples") {
    Graph bug = fixtures::bug_graph();
    auto triangles = cliques_of_size(bug, 3);
    REQUIRE(triangles.size() == 2);
    // {v1,v3,v5} = {1,3,5} and {v2,v4,v6} = {2,4,6}
    CHECK(triangles[0] == ((1u << 1) | (1u << 3) | (1u << 5)));
    CHECK(triangles[1] == ((1u << 2) | (1u << 4) | (1u << 6)));

    CHECK(cliques_of_size(fixtures::complete(4), 3).size() == 4);
    CHECK(cliques_of_size(fixtures::cycle(5), 3).empty());
}

TEST_CASE("cliques_of_size agrees with subset scanning") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);  // up to 12
        Graph g = oracle::random_graph(rng, n, 0.5);
        int k = 1 + static_cast<int>(rng() % n);
        auto got = cliques_of_size(g, k);
        auto want = oracle::brute_cliques(g, k);
        CHECK(got == want);
    }
}

TEST_CASE("max_clique_size") {
    CHECK(max_clique_size(fixtures::complete(5)) == 5);
    CHECK(max_clique_size(fixtures::cycle(6)) == 2);
    CHECK(max_clique_size(fixtures::bug_graph()) == 3);
    CHECK(max_clique_size(fixtures::edgeless(4)) == 1);
}

TEST_CASE("subgraph containment named examples") {
    Graph bug = fixtures::bug_graph();
    Graph c4 = fixtures::cycle(4);
    CHECK_FALSE(contains_subgraph(bug, c4));
    CHECK(contains_subgraph(fixtures::complete(4), c4));
    CHECK(contains_subgraph(bug, fixtures::complete(3)));
    CHECK(contains_subgraph(fixtures::diamond(), c4));
}

TEST_CASE("subgraph containment agrees with brute force") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        int m = 2 + static_cast<int>(rng() % (std::min(n, 5) - 1));
        Graph g = oracle::random_graph(rng, n, 0.5);
        Graph p = oracle::random_graph(rng, m, 0.5);
        CHECK(contains_subgraph(g, p) == oracle::brute_contains_subgraph(g, p));
    }
}

TEST_CASE("embedding counts modulo pattern automorphisms") {
    Graph bug = fixtures::bug_graph();
    CHECK(count_subgraph_embeddings(bug, bug) == 1);
    CHECK(count_subgraph_embeddings(fixtures::complete(4), fixtures::complete(3)) == 4);
    // K3 holds three distinct paths on three vertices.
    CHECK(count_subgraph_embeddings(fixtures::complete(3), fixtures::path(3)) == 3);
    CHECK(count_subgraph_embeddings(fixtures::cycle(5), fixtures::cycle(5)) == 1);
}

TEST_CASE("permuted relabels consistently") {
    std::mt19937_64 rng(5);
    Graph g = oracle::random_graph(rng, 7, 0.4);
    auto perm = oracle::random_permutation(rng, 7);
    Graph h = g.permuted(perm);
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            CHECK(g.has_edge(u, v) ==
                  h.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
}
