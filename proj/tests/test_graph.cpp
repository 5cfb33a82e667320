#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kdis/graph.hpp"
#include "test_util.hpp"

using namespace kdis;

TEST_CASE("constructors validate the invariants") {
    CHECK_THROWS_AS(Graph::from_adjacency({0b10}), Error);          // asymmetric
    CHECK_THROWS_AS(Graph::from_adjacency({0b01}), Error);          // self loop
    CHECK_THROWS_AS(Graph::from_adjacency({0b100, 0b000}), Error);  // bit above range
    CHECK_THROWS_AS(Graph::from_edges(70, {}), Error);              // too many vertices
    Graph g = Graph::from_edges(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("complete multipartite") {
    Graph k3 = Graph::complete_multipartite({1, 1, 1});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == Graph::complete(3));

    Graph k22 = Graph::complete_multipartite({2, 2});
    CHECK(k22.order() == 4);
    CHECK(k22.edge_count() == 4);

    Graph e3 = Graph::complete_multipartite({3});
    CHECK(e3.order() == 3);
    CHECK(e3.edge_count() == 0);

    for (int k = 1; k <= 10; ++k) {
        Graph kk = Graph::complete_multipartite({k, k});
        for (int v = 0; v < kk.order(); ++v) CHECK(kk.degree(v) == k);
        CHECK(kk.is_connected());
        CHECK(kk.is_triangle_free());
    }

    CHECK_THROWS_AS(Graph::complete_multipartite({40, 30}), Error);
    CHECK_THROWS_AS(Graph::complete_multipartite({0, 2}), Error);
}

TEST_CASE("degrees and neighborhoods") {
    Graph k22 = Graph::complete_multipartite({2, 2});
    CHECK(k22.min_degree() == 2);
    CHECK(Graph::empty_graph(3).min_degree() == 0);
    CHECK(Graph::cycle(5).min_degree() == 2);
    CHECK_THROWS_AS(Graph().min_degree(), Error);
    CHECK(k22.neighborhood(0) == (vbit(2) | vbit(3)));
    CHECK(k22.degree(3) == 2);
}

TEST_CASE("family predicates") {
    CHECK(Graph::cycle(5).is_triangle_free());
    CHECK_FALSE(Graph::complete(3).is_triangle_free());
    CHECK(Graph::cycle(5).is_connected());
    CHECK_FALSE(Graph::empty_graph(2).is_connected());
    CHECK(Graph::path(4).is_tree());
    CHECK_FALSE(Graph::cycle(4).is_tree());
    CHECK_FALSE(Graph().is_connected());
    CHECK(Graph::empty_graph(1).is_tree());
}

TEST_CASE("disjoint union") {
    Graph two_k3 = disjoint_union(Graph::complete(3), Graph::complete(3));
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.edge_count() == 6);
    CHECK(components(two_k3).size() == 2);
    CHECK_FALSE(two_k3.is_connected());
    Graph g33 = Graph::complete_multipartite({33});
    CHECK_THROWS_AS(disjoint_union(g33, g33), Error);
}

TEST_CASE("tree characterization: connected plus n-1 edges, all orders up to 7") {
    // cross-check the cycle-detecting implementation against the edge-count
    // definition on every labeled graph of order <= 5 and samples above
    for (int n = 1; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++idx)
                    if ((mask >> idx) & 1) edges.emplace_back(i, j);
            Graph g = Graph::from_edges(n, edges);
            CHECK(g.is_tree() == (g.is_connected() && g.edge_count() == n - 1));
        }
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        Graph g = testutil::random_graph(rng, 6 + i % 2, 0.3);
        CHECK(g.is_tree() == (g.is_connected() && g.edge_count() == g.order() - 1));
    }
}

TEST_CASE("graph6 fixed examples") {
    CHECK(graph6_decode("Bw") == Graph::complete(3));
    CHECK(graph6_decode("B?") == Graph::empty_graph(3));
    CHECK(graph6_decode("A_") == Graph::complete(2));
    CHECK(graph6_encode(Graph::complete(3)) == "Bw");
    CHECK(graph6_encode(Graph::empty_graph(3)) == "B?");
    CHECK(graph6_encode(Graph::complete(2)) == "A_");
    CHECK(graph6_decode(">>graph6<<Bw") == Graph::complete(3));
    CHECK(graph6_encode(Graph()) == "?");
    CHECK(graph6_decode("?") == Graph());
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(42);
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = testutil::random_graph(rng, n, 0.4);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 extended header for 63 and 64 vertices") {
    for (int n : {63, 64}) {
        std::mt19937 rng(static_cast<unsigned>(n));
        Graph g = testutil::random_graph(rng, n, 0.1);
        std::string s = graph6_encode(g);
        CHECK(s[0] == '~');
        CHECK(graph6_decode(s) == g);
    }
    // 65 vertices must be rejected with the offset of the order header
    std::string too_big = "~??A";
    too_big += std::string(65 * 64 / 2 / 6 + 1, '?');
    CHECK_THROWS_AS(graph6_decode(too_big), Error);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    auto offset_of = [](const std::string& s) -> long {
        try {
            graph6_decode(s);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Parse);
            return e.offset();
        }
        return -2;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("B") == 1);        // truncated bit vector
    CHECK(offset_of("Bww") == 2);      // trailing garbage
    CHECK(offset_of("B\x1f") == 1);    // byte below printable range
    CHECK(offset_of(">>graph6<<") == 10);
    CHECK(offset_of("~?") == 2);       // truncated extended header
    CHECK(offset_of("Bx") == 1);       // nonzero padding bits
}

TEST_CASE("induced subgraphs and permutations") {
    Graph c5 = Graph::cycle(5);
    Graph p3 = c5.induced_subgraph(vbit(0) | vbit(1) | vbit(2));
    CHECK(p3 == Graph::path(3));
    std::vector<int> rot = {1, 2, 3, 4, 0};
    CHECK(c5.permuted(rot).edge_count() == 5);
    CHECK(c5.permuted(rot).is_connected());
}

TEST_CASE("vertex set helpers") {
    VertexSet s = vbit(0) | vbit(2) | vbit(5);
    CHECK(vcount(s) == 3);
    CHECK(vertices_of(s) == std::vector<int>{0, 2, 5});
    CHECK(vertexset_to_string(s) == "{0,2,5}");
    CHECK(vcontains(s, 2));
    CHECK_FALSE(vcontains(s, 3));
}
