#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "kdis/canon.hpp"
#include "test_util.hpp"

using namespace kdis;

namespace {

// every labeled graph of a given order
template <typename Fn>
void for_each_labeled(int n, Fn&& fn) {
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx)
                if ((mask >> idx) & 1) edges.emplace_back(i, j);
        fn(Graph::from_edges(n, edges));
    }
}

std::vector<int> unpack_code(int n, const std::vector<std::uint64_t>& code) {
    std::vector<int> bits;
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    for (long long b = 0; b < total; ++b)
        bits.push_back(static_cast<int>((code[static_cast<std::size_t>(b >> 6)] >> (63 - (b & 63))) & 1));
    return bits;
}

} // namespace

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937 rng(123);
    for (int i = 0; i < 400; ++i) {
        int n = 2 + static_cast<int>(rng() % 8); // up to 9
        Graph g = testutil::random_graph(rng, n, 0.2 + 0.15 * (i % 5));
        auto code = canonical_code(g);
        for (int r = 0; r < 3; ++r) {
            auto perm = testutil::random_permutation(rng, n);
            CHECK(canonical_code(g.permuted(perm)) == code);
        }
    }
}

TEST_CASE("canonical code equals the brute-force maximum over all labelings") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled(n, [&](const Graph& g) {
            CHECK(unpack_code(n, canonical_code(g)) == testutil::brute_canonical_bits(g));
        });
    }
    for (int i = 0; i < 60; ++i) {
        int n = 6 + i % 2;
        Graph g = testutil::random_graph(rng, n, 0.5);
        CHECK(unpack_code(n, canonical_code(g)) == testutil::brute_canonical_bits(g));
    }
}

TEST_CASE("discovered generators generate the full automorphism group") {
    std::mt19937 rng(99);
    auto check_group = [&](const Graph& g) {
        CanonResult cr = canonical_form(g);
        std::size_t brute = testutil::brute_automorphisms(g).size();
        CHECK(testutil::group_order_from_generators(g.order(), cr.generators) == brute);
        CHECK(cr.orbit == testutil::brute_orbits(g));
    };
    for (int n = 1; n <= 5; ++n) for_each_labeled(n, check_group);
    for (int i = 0; i < 80; ++i) check_group(testutil::random_graph(rng, 6 + i % 3, 0.3 + 0.2 * (i % 3)));
    // highly symmetric cases
    check_group(Graph::complete(8));
    check_group(Graph::empty_graph(8));
    check_group(Graph::cycle(8));
    check_group(Graph::complete_multipartite({4, 4}));
    check_group(Graph::complete_multipartite({2, 2, 2}));
    check_group(Graph::complete_multipartite({3, 3, 3}));
    // Petersen graph: vertex-transitive, |Aut| = 120
    Graph petersen = Graph::from_edges(
        10, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CanonResult cr = canonical_form(petersen);
    CHECK(testutil::group_order_from_generators(10, cr.generators) == 120);
    CHECK(std::set<int>(cr.orbit.begin(), cr.orbit.end()).size() == 1);
}

TEST_CASE("canonical graph realizes the code and isomorphism is decided correctly") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(rng, n, 0.4);
        Graph h = g.permuted(testutil::random_permutation(rng, n));
        CHECK(is_isomorphic(g, h));
        CHECK(canonical_graph(g) == canonical_graph(h));
    }
    CHECK_FALSE(is_isomorphic(Graph::path(4), Graph::from_edges(4, std::vector<std::pair<int, int>>{
                                                                        {0, 1}, {0, 2}, {0, 3}})));
    CHECK(is_isomorphic(Graph(), Graph()));
}
