#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "p3hull/error.hpp"
#include "p3hull/graph.hpp"
#include "p3hull/permutation.hpp"
#include "p3hull/vertex_set.hpp"

using namespace p3hull;

TEST_CASE("vertex set basics") {
    VertexSet s(70, {0, 3, 69});
    CHECK(s.count() == 3);
    CHECK(s.contains(69));
    CHECK_FALSE(s.contains(4));
    s.erase(3);
    CHECK(s.to_indices() == std::vector<Vertex>{0, 69});
    CHECK(s.complement().count() == 68);
    CHECK((s | s.complement()) == VertexSet::full(70));
    CHECK((s & s.complement()).empty());
    CHECK(VertexSet(70, {0}).is_subset_of(s));
    CHECK_THROWS_AS(s.insert(70), std::out_of_range);
    CHECK_THROWS_AS((void)(s | VertexSet(10)), std::invalid_argument);
}

TEST_CASE("vertex set mask round trip") {
    const auto s = VertexSet::from_mask(10, 0b1000100101);
    CHECK(s.to_indices() == std::vector<Vertex>{0, 2, 5, 9});
    CHECK(s.to_mask() == 0b1000100101u);
    CHECK_THROWS_AS(VertexSet::from_mask(4, 0b10000), std::out_of_range);
}

TEST_CASE("lexicographic order on ascending index tuples") {
    CHECK(lex_less(VertexSet(6, {0, 1, 5}), VertexSet(6, {0, 2, 3})));
    CHECK_FALSE(lex_less(VertexSet(6, {1, 2}), VertexSet(6, {0, 5})));
    CHECK_FALSE(lex_less(VertexSet(6, {1, 2}), VertexSet(6, {1, 2})));
}

TEST_CASE("permutation parsing") {
    const auto p = parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9);
    CHECK(p.cycles().size() == 3);
    for (const auto& c : p.cycles()) CHECK(c.size() == 3);
    CHECK(p(2) == 0);
    CHECK(p.odd_cycle_count() == 3);
    CHECK(parse_permutation(" ( 0,1 , 2 )( 3 4 5 ) ", 6) == Permutation::from_image({1, 2, 0, 4, 5, 3}));

    CHECK_THROWS_AS(parse_permutation("(0 1 2)", 5), InvalidPermutation);
    CHECK_THROWS_AS(parse_permutation("(0 1 2)(2 3 4)", 5), InvalidPermutation);
    CHECK_THROWS_AS(parse_permutation("(0 1)(2 3 4)", 5), InvalidPermutation);
    CHECK_THROWS_AS(parse_permutation("(0 1 5)(2 3 4)", 5), InvalidPermutation);
    CHECK_THROWS_AS(parse_permutation("(0 1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_permutation("0 1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_permutation("(0 x 2)", 3), ParseError);
    CHECK_THROWS_AS(parse_permutation("", 3), ParseError);
}

TEST_CASE("permutation validation from image") {
    CHECK_THROWS_AS(Permutation::from_image({1, 0, 3, 4, 2}), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::from_image({0, 2, 1}), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::from_image({1, 1, 0}), InvalidPermutation);
    CHECK(Permutation::rotation(12, 2).cycles().size() == 2);
}

TEST_CASE("render and parse round trip over random permutations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 30);
        const auto perm = Permutation::from_cycles(n, oracle::random_cycles(n, rng));
        CHECK(parse_permutation(render(perm), n) == perm);
    }
}

TEST_CASE("generalized Petersen construction") {
    const auto g = build_generalized_petersen(5, 2);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    const auto r = connectivity_and_degree_report(g);
    CHECK(r.connected);
    CHECK(r.is_cubic);
    CHECK(r.component_count == 1);
    CHECK(g.label(0) == "u0");
    CHECK(g.label(7) == "v2");

    const auto g41 = build_generalized_petersen(4, 1);
    CHECK(g41.vertex_count() == 8);
    CHECK(g41.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(g41.degree(v) == 3);

    CHECK_THROWS_WITH_AS(build_generalized_petersen(4, 2), doctest::Contains("k must satisfy 1 <= k < n/2"),
                         InvalidParams);
    CHECK_THROWS_AS(build_generalized_petersen(2, 1), InvalidParams);
    CHECK_THROWS_AS(build_generalized_petersen(7, 0), InvalidParams);
}

TEST_CASE("generalized Petersen edge set matches the definition") {
    for (int n = 3; n <= 12; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            const auto g = build_generalized_petersen(n, k);
            CHECK(g.vertex_count() == 2 * n);
            CHECK(g.edge_count() == static_cast<std::size_t>(3 * n));
            CHECK(oracle::adjacency_of(g) == oracle::adjacency_of(2 * n, oracle::petersen_edges(n, k)));
            const auto r = connectivity_and_degree_report(g);
            CHECK(r.connected);
            CHECK(r.is_cubic);
            CHECK(build_ggp(Permutation::rotation(n, k)) == g);
        }
}

TEST_CASE("surgery construction") {
    const auto g = build_surgery(5, 2);
    CHECK(g.vertex_count() == 20);
    CHECK(g.edge_count() == 30);
    CHECK(g.has_edge(u_vertex(5, 0, 0), u_vertex(5, 0, 1)));
    CHECK(g.has_edge(u_vertex(5, 1, 0), u_vertex(5, 1, 1)));
    CHECK_FALSE(g.has_edge(u_vertex(5, 0, 0), u_vertex(5, 1, 0)));
    CHECK_FALSE(g.has_edge(u_vertex(5, 0, 1), u_vertex(5, 1, 1)));
    CHECK(g.label(10) == "u0b");
    const auto r = connectivity_and_degree_report(g);
    CHECK(r.connected);
    CHECK(r.is_cubic);
    CHECK(r.component_count == 1);

    // BFS oracle for connectivity
    const auto adj = oracle::adjacency_of(g);
    std::set<int> seen{0};
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : adj[static_cast<std::size_t>(queue[i])])
            if (seen.insert(w).second) queue.push_back(w);
    CHECK(seen.size() == 20);

    const auto g41 = build_surgery(4, 1);
    CHECK(g41.vertex_count() == 16);
    CHECK(connectivity_and_degree_report(g41).is_cubic);
}

TEST_CASE("generalized construction with triangles") {
    const auto g = build_ggp(parse_permutation("(0 1 2)(3 4 5)(6 7 8)", 9));
    CHECK(g.vertex_count() == 18);
    CHECK(g.edge_count() == 27);
    for (int i = 0; i < 9; ++i) CHECK(g.has_edge(i, (i + 1) % 9));
    CHECK(g.has_edge(9, 10));
    CHECK(g.has_edge(9, 11));
    CHECK(g.has_edge(15, 17));
    CHECK_FALSE(g.has_edge(11, 12));
    CHECK(connectivity_and_degree_report(g).is_cubic);
    CHECK(build_ggp(Permutation::from_image({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1})) ==
          build_generalized_petersen(12, 2));
    CHECK_THROWS_AS(Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}}), InvalidPermutation);
}

TEST_CASE("custom graphs") {
    const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {1, 0}};
    const auto g = Graph::from_edges(6, two_triangles);
    CHECK(g.edge_count() == 6);
    const auto r = connectivity_and_degree_report(g);
    CHECK_FALSE(r.connected);
    CHECK_FALSE(r.is_cubic);
    CHECK(r.component_count == 2);
    CHECK(g.label(4) == "4");

    const std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), InvalidGraph);
    const std::vector<Edge> outside{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(2, outside), InvalidGraph);
    CHECK_THROWS_AS(Graph::from_edges(kMaxGraphVertices + 1, {}), ExceedsCapacity);
}

TEST_CASE("induced subgraphs") {
    const auto g = build_generalized_petersen(5, 2);
    CHECK(induced_subgraph(g, VertexSet::full(10)).graph == g);
    CHECK(induced_subgraph(g, VertexSet(10)).graph.vertex_count() == 0);

    const auto inner = induced_subgraph(g, VertexSet(10, {5, 6, 7, 8, 9}));
    CHECK(inner.original == std::vector<Vertex>{5, 6, 7, 8, 9});
    CHECK(inner.graph.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(inner.graph.degree(v) == 2);
    CHECK(connectivity_and_degree_report(inner.graph).connected);
    CHECK(inner.graph.label(0) == "v0");
}
