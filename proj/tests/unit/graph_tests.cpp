#include <doctest.h>

#include <algorithm>
#include <random>

#include "deflab/errors.hpp"
#include "deflab/graph.hpp"

using namespace deflab;

TEST_SUITE("graph") {

TEST_CASE("construction normalizes and validates") {
    Graph g = build_graph(4, {{0, 1}, {1, 0}, {1, 2}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);  // duplicates collapse
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    std::vector<Edge> want{{0, 1}, {1, 2}, {2, 3}};
    CHECK(g.edges() == want);
    g.check_invariants();

    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), SelfLoop);
    CHECK_THROWS_AS(build_graph(3, {{0, 5}}), IndexOutOfRange);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), IndexOutOfRange);
    CHECK_THROWS_AS(Graph(5, {{1, 2}}).adjacent(0, 7), IndexOutOfRange);
}

TEST_CASE("vertex sets") {
    VertexSet s(70);
    CHECK(s.empty());
    s.insert(0);
    s.insert(69);
    s.insert(64);
    CHECK(s.count() == 3);
    CHECK(s.contains(69));
    s.erase(69);
    CHECK_FALSE(s.contains(69));
    CHECK(s.members() == std::vector<int>{0, 64});

    VertexSet a = VertexSet::of(8, {1, 2, 3});
    VertexSet b = VertexSet::of(8, {3, 4});
    CHECK((a | b).members() == std::vector<int>{1, 2, 3, 4});
    CHECK((a & b).members() == std::vector<int>{3});
    CHECK((a - b).members() == std::vector<int>{1, 2});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of(8, {0, 7})));
    CHECK(VertexSet::full(5).count() == 5);
    CHECK_THROWS_AS(a.contains(8), IndexOutOfRange);
    CHECK_THROWS_AS(VertexSet(-1), BadParams);
}

TEST_CASE("neighborhood excludes the set itself") {
    // Star with center 0: N({0}) is every leaf, N({leaf}) is the center.
    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(star.neighborhood(VertexSet::of(5, {0})).members() ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(star.neighborhood(VertexSet::of(5, {1, 2})).members() == std::vector<int>{0});
    CHECK(star.max_degree() == 4);
    CHECK(star.min_degree() == 1);
}

TEST_CASE("connectivity, distances, layers, diameter") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
    CHECK(p4.connected());
    CHECK_FALSE(two_edges.connected());
    CHECK_FALSE(build_graph(2, {}).connected());
    CHECK(build_graph(1, {}).connected());

    CHECK(bfs_distances(p4, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(bfs_distances(two_edges, 0) == std::vector<int>{0, 1, -1, -1});

    auto layers = bfs_layers(p4, 1);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0].members() == std::vector<int>{1});
    CHECK(layers[1].members() == std::vector<int>{0, 2});
    CHECK(layers[2].members() == std::vector<int>{3});

    Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(diameter(c6) == 3);
    CHECK(diameter(p4) == 3);
    CHECK(diameter(build_graph(1, {})) == 0);
    CHECK_FALSE(diameter(two_edges).has_value());
}

TEST_CASE("induced subgraphs relabel ascending") {
    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    VertexSet keep = VertexSet::of(5, {0, 1, 3, 4});
    InducedSubgraph sub = induced_subgraph(c5, keep);
    CHECK(sub.vertices == std::vector<int>{0, 1, 3, 4});
    CHECK(sub.graph.order() == 4);
    // Kept edges: (0,1), (3,4), (0,4) -> relabeled (0,1), (2,3), (0,3).
    std::vector<Edge> want{{0, 1}, {0, 3}, {2, 3}};
    CHECK(sub.graph.edges() == want);
}

TEST_CASE("bitset rows agree with adjacency") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 70);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        g.check_invariants();
        for (int v = 0; v < n; ++v) {
            auto row = g.row(v);
            for (int u = 0; u < n; ++u) {
                bool bit = (row[u >> 6] >> (u & 63)) & 1;
                CHECK(bit == g.adjacent(v, u));
            }
        }
    }
}

}  // TEST_SUITE
