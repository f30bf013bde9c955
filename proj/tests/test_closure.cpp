#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "spectree/closure.hpp"
#include "spectree/enumerate.hpp"
#include "spectree/graph.hpp"
#include "support/oracles.hpp"

using namespace spectree;

TEST_CASE("closure fixpoint is order independent") {
    SECTION("worklist agrees with full rescan on every order-5 graph") {
        for_each_graph_code(5, 0, labeled_graph_count(5), [](const Graph& g, std::uint64_t) {
            for (int l = 1; l <= 9; ++l)
                REQUIRE(l_closure(g, l).result == refs::closure(g, l));
        });
    }
    SECTION("random order-8 graphs") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 300; ++trial) {
            Graph g = sample_gnp(8, 0.4, rng());
            int l = 1 + int(rng() % 14);
            REQUIRE(l_closure(g, l).result == refs::closure(g, l));
        }
    }
}

TEST_CASE("closure trace replays onto the result") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = sample_gnp(9, 0.35, rng());
        int l = 1 + int(rng() % 16);
        ClosureTrace tr = l_closure(g, l);
        REQUIRE(tr.l == l);
        Graph replay = g;
        for (auto [u, v] : tr.added_edges) {
            REQUIRE_FALSE(replay.adjacent(u, v));
            // the pair qualified at the moment it was joined
            REQUIRE(replay.degree(u) + replay.degree(v) >= l);
            replay.add_edge(u, v);
        }
        REQUIRE(replay == tr.result);
        // idempotent
        REQUIRE(l_closure(tr.result, l).added_edges.empty());
    }
}

TEST_CASE("path on four vertices closes to the complete graph at level 3") {
    ClosureTrace tr = l_closure(path_graph(4), 3);
    REQUIRE(tr.result == complete(4));
    REQUIRE(tr.added_edges ==
            std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
    // level 4 adds nothing: every degree sum of a nonadjacent pair is 3
    REQUIRE(l_closure(path_graph(4), 4).added_edges.empty());
}

TEST_CASE("closure levels") {
    for (int n = 5; n <= 20; ++n)
        for (int k = 2; k <= 5; ++k)
            for (int t = 1; t <= 4; ++t)
                REQUIRE(ktree_closure_level(n, k, t) == n - (k - 2) * t - 1);
    // the k = 2 level coincides with the k-ended level n - 1, any t
    for (int t = 1; t <= 4; ++t) REQUIRE(ktree_closure_level(10, 2, t) == 9);

    Graph g = path_graph(6);
    REQUIRE(ktree_closure(g, 2, 1).result == kended_closure(g).result);
    REQUIRE(ktree_closure(g, 3, 1).l == 4);

    REQUIRE_THROWS_AS(ktree_closure(g, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(ktree_closure(g, 2, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(ktree_closure(path_graph(3), 3, 2), std::domain_error);  // level -2
    REQUIRE_THROWS_AS(kended_closure(empty_graph(1)), std::domain_error);
}

TEST_CASE("closure preserves spanning tree reachability at its level") {
    // Joining a qualifying pair never destroys a spanning tree with the
    // matching leaf budget; spot-check equivalence on random connected graphs.
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 80) {
        Graph g = sample_gnp(7, 0.3, rng());
        if (!is_connected(g)) continue;
        ++done;
        ClosureTrace c = kended_closure(g);
        for (int k = 2; k <= 4; ++k) {
            bool orig = refs::min_leaves(g) > 0 && refs::min_leaves(g) <= k;
            bool closed = refs::min_leaves(c.result) > 0 && refs::min_leaves(c.result) <= k;
            REQUIRE(orig == closed);
        }
    }
}
