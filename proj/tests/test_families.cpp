#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "spectree/enumerate.hpp"
#include "spectree/families.hpp"
#include "spectree/graph.hpp"
#include "spectree/isomorphism.hpp"

using namespace spectree;

namespace {

int binom2(int m) { return m * (m - 1) / 2; }

}  // namespace

TEST_CASE("regular circulant construction") {
    for (auto [n, d] : {std::pair{7, 4}, {8, 3}, {9, 0}, {10, 9}, {6, 2}}) {
        Graph g = regular_circulant(n, d);
        REQUIRE(g.order() == n);
        REQUIRE(g.min_degree() == d);
        REQUIRE(g.max_degree() == d);
    }
    REQUIRE(regular_circulant(6, 2) == cycle_graph(6));
    REQUIRE(regular_circulant(5, 4) == complete(5));
    REQUIRE_THROWS_AS(regular_circulant(7, 3), std::domain_error);  // n*d odd
    REQUIRE_THROWS_AS(regular_circulant(5, 5), std::invalid_argument);
}

TEST_CASE("hub-join extremal constructions") {
    SECTION("edge counts and degree profile") {
        for (int t = 1; t <= 3; ++t)
            for (int k = 2; k <= 4; ++k)
                for (int n = k * t + 2; n <= 14; ++n) {
                    Graph h = make_h_star(n, k, t);
                    REQUIRE(h.order() == n);
                    REQUIRE(h.edge_count() ==
                            binom2(t) + t * (n - t) + binom2(n - k * t - 1));
                    REQUIRE(h.min_degree() == t);

                    if (n >= k + 2 * t - 1) {
                        Graph s = make_g_star(n, k, t);
                        REQUIRE(s.edge_count() ==
                                binom2(t) + t * (n - t) + binom2(n - k - 2 * t + 1));
                    }
                }
    }
    SECTION("the two shapes coincide exactly when k = 2 or t = 1") {
        REQUIRE(make_h_star(8, 2, 2) == make_g_star(8, 2, 2));
        REQUIRE(make_h_star(12, 2, 3) == make_g_star(12, 2, 3));
        REQUIRE(make_h_star(10, 3, 1) == make_g_star(10, 3, 1));
        REQUIRE(make_h_star(12, 3, 2).edge_count() != make_g_star(12, 3, 2).edge_count());
    }
    SECTION("bad parameters") {
        REQUIRE_THROWS_AS(make_h_star(5, 2, 2), std::invalid_argument);  // n < kt+2
        REQUIRE_THROWS_AS(make_h_star(8, 1, 2), std::invalid_argument);
        REQUIRE_THROWS_AS(make_g_star(4, 2, 2), std::invalid_argument);  // n < k+2t-1
        REQUIRE_THROWS_AS(make_g_star(8, 2, 0), std::invalid_argument);
    }
}

TEST_CASE("family construction by spec") {
    FamilySpec s;
    s.id = FamilyId::HStar;
    s.n = 9;
    s.k = 2;
    s.t = 2;
    REQUIRE(construct_family(s) == make_h_star(9, 2, 2));

    s.id = FamilyId::G1;
    s.k = 3;
    s.t = 2;
    Graph g1 = construct_family(s);  // n is ignored: order is kt+2
    REQUIRE(g1.order() == 8);
    REQUIRE(g1.edge_count() == binom2(2) + 2 * 6);

    s.seed = path_graph(2);  // same order, one edge fewer than K_2... identical here
    REQUIRE(construct_family(s) == g1);
    s.seed = empty_graph(2);
    REQUIRE(construct_family(s).edge_count() == g1.edge_count() - 1);
    s.seed = empty_graph(3);
    REQUIRE_THROWS_AS(construct_family(s), std::invalid_argument);  // wrong seed order
    s.seed.reset();

    s.id = FamilyId::G2;
    s.k = 2;
    s.t = 4;
    s.r = 0;  // 4-regular block on all ten vertices
    Graph g2 = construct_family(s);
    REQUIRE(g2.order() == 2 * 4 + 2);
    REQUIRE(g2.min_degree() == 4);
    REQUIRE_THROWS_AS(construct_family({FamilyId::G2, 0, 2, 2, 0, 0, {}}),
                      std::invalid_argument);  // t < 3

    s = {};
    s.id = FamilyId::G3;
    s.n = 10;
    s.k = 2;
    s.t = 2;
    s.r = 4;  // D = 4: K_4 joined onto six isolated vertices
    REQUIRE(construct_family(s) == join(empty_graph(6), complete(4)));
    s.n = 9;
    REQUIRE_THROWS_AS(construct_family(s), std::invalid_argument);  // odd n-2

    REQUIRE(construct_family({FamilyId::EPa, 8, 0, 0, 0, 0, {}}) == regular_circulant(8, 3));
    REQUIRE(construct_family({FamilyId::EPb, 7, 0, 0, 3, 0, {}}) ==
            disjoint_union(complete(3), complete(4)));
    REQUIRE(construct_family({FamilyId::Regular, 9, 0, 0, 0, 4, {}}) == regular_circulant(9, 4));
}

TEST_CASE("family membership predicates") {
    SECTION("constructed members test positive") {
        for (int k = 2; k <= 4; ++k)
            for (int t = 1; t <= 3; ++t) {
                FamilySpec s;
                s.id = FamilyId::G1;
                s.k = k;
                s.t = t;
                REQUIRE(is_in_g1(construct_family(s), k, t));
                if (t >= 2) {
                    s.seed = star(t - 1);  // arbitrary non-clique block
                    REQUIRE(is_in_g1(construct_family(s), k, t));
                }
            }
        for (int k = 2; k <= 3; ++k)
            for (int t = 3; t <= 5; ++t)
                for (int r = 0; r <= t - 3; ++r) {
                    FamilySpec s;
                    s.id = FamilyId::G2;
                    s.k = k;
                    s.t = t;
                    s.r = r;
                    if ((k * t + 2 - r) % 2 != 0 && (t - r) % 2 != 0) continue;  // no regular block
                    REQUIRE(is_in_g2(construct_family(s), k, t));
                }
        for (int n : {8, 10, 12})
            for (int k = 2; k <= 3; ++k)
                for (int t = 1; t <= 2; ++t) {
                    long long num = n - (k - 2) * t - 2;
                    if (num < 0 || num % 2 != 0) continue;
                    int big_d = int(num / 2);
                    for (int r = 0; r <= big_d; ++r) {
                        if ((n - r) % 2 != 0 && (big_d - r) % 2 != 0) continue;
                        FamilySpec s;
                        s.id = FamilyId::G3;
                        s.n = n;
                        s.k = k;
                        s.t = t;
                        s.r = r;
                        REQUIRE(is_in_g3(construct_family(s), k, t));
                    }
                }
        for (int n : {8, 10, 14})
            for (int r = 0; r <= (n - 8) / 2; ++r) {
                if ((n - r) % 2 != 0 && ((n - 2) / 2 - r) % 2 != 0) continue;
                FamilySpec s;
                s.id = FamilyId::G4;
                s.n = n;
                s.r = r;
                REQUIRE(is_in_g4(construct_family(s)));
            }
        for (int n : {6, 10, 12})
            for (int r = (n - 6) / 2; r <= (n - 2) / 2; ++r) {
                if ((n - r) % 2 != 0 && ((n - 2) / 2 - r) % 2 != 0) continue;
                FamilySpec s;
                s.id = FamilyId::G5;
                s.n = n;
                s.r = r;
                REQUIRE(is_in_g5(construct_family(s), r));
            }
    }
    SECTION("perturbations and mismatched parameters test negative") {
        FamilySpec s;
        s.id = FamilyId::G1;
        s.k = 2;
        s.t = 2;
        Graph g = construct_family(s);  // K_2 v 4K_1, order 6
        REQUIRE(is_in_g1(g, 2, 2));
        REQUIRE_FALSE(is_in_g1(g, 2, 1));  // wrong order for (k,t)
        REQUIRE_FALSE(is_in_g1(g, 4, 1));  // right order, wrong degree pattern
        Graph broken = g;
        broken.remove_edge(0, 4);  // missing join edge
        REQUIRE_FALSE(is_in_g1(broken, 2, 2));
        Graph extra = g;
        extra.add_edge(0, 1);  // edge inside the independent block
        REQUIRE_FALSE(is_in_g1(extra, 2, 2));

        REQUIRE_FALSE(is_in_g1(complete(6), 2, 2));
        REQUIRE_FALSE(is_in_g3(complete(8), 2, 2));
        REQUIRE_FALSE(is_in_g4(cycle_graph(8)));
        REQUIRE_FALSE(is_in_g4(complete(9)));     // odd order
        REQUIRE_FALSE(is_in_g5(cycle_graph(6), 2));
        REQUIRE_FALSE(is_in_g5(join(empty_graph(4), complete(2)), 3));  // r out of window
    }
    SECTION("exception set for Hamilton paths") {
        REQUIRE(is_in_ep(disjoint_union(complete(3), complete(4))));
        REQUIRE(is_in_ep(disjoint_union(complete(1), complete(6))));
        REQUIRE(is_in_ep(regular_circulant(8, 3)));
        REQUIRE(is_in_ep(cycle_graph(6)));  // (n/2-1)-regular at n = 6
        Graph epc = construct_family({FamilyId::EPc, 8, 0, 0, 2, 0, {}});
        REQUIRE(is_in_ep(epc));

        REQUIRE_FALSE(is_in_ep(cycle_graph(5)));
        REQUIRE_FALSE(is_in_ep(path_graph(4)));
        REQUIRE_FALSE(is_in_ep(complete(6)));
        REQUIRE_FALSE(is_in_ep(disjoint_union(complete(2), path_graph(3))));
        REQUIRE_FALSE(is_in_ep(disjoint_union(complete(2), disjoint_union(complete(2), complete(2)))));
    }
}

TEST_CASE("the k = 2 split family decomposes by block size") {
    // For k = 2 the half-degree family is the disjoint window union of the
    // dense family and the three top block sizes, for any t.
    auto rhs = [](const Graph& g) {
        int n = g.order();
        return is_in_g4(g) || is_in_g5(g, (n - 2) / 2) || is_in_g5(g, (n - 4) / 2) ||
               is_in_g5(g, (n - 6) / 2);
    };
    std::vector<Graph> pool;
    for (int n : {8, 10}) {
        for (int r = 0; r <= (n - 2) / 2; ++r) {
            if ((n - r) % 2 != 0 && ((n - 2) / 2 - r) % 2 != 0) continue;
            FamilySpec s;
            s.id = FamilyId::G3;
            s.n = n;
            s.k = 2;
            s.t = 1;
            s.r = r;
            pool.push_back(construct_family(s));
        }
        pool.push_back(complete(n));
        pool.push_back(cycle_graph(n));
        pool.push_back(make_h_star(n, 2, 1));
    }
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) pool.push_back(sample_gnp(8 + 2 * int(rng() % 2), 0.5, rng()));
    for (const Graph& g : pool)
        for (int t = 1; t <= 3; ++t)
            REQUIRE(is_in_g3(g, 2, t) == rhs(g));
}

TEST_CASE("family names round trip") {
    for (FamilyId id : {FamilyId::HStar, FamilyId::GStar, FamilyId::G1, FamilyId::G2, FamilyId::G3,
                        FamilyId::G4, FamilyId::G5, FamilyId::EPa, FamilyId::EPb, FamilyId::EPc,
                        FamilyId::Regular}) {
        auto back = family_from_name(family_name(id));
        REQUIRE(back);
        REQUIRE(*back == id);
    }
    REQUIRE_FALSE(family_from_name("nope"));
}
