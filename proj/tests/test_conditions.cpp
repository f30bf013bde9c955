#include "catch2/catch_amalgamated.hpp"

#include <cmath>

#include "spectree/conditions.hpp"
#include "spectree/families.hpp"
#include "spectree/graph.hpp"

using namespace spectree;
using Catch::Matchers::WithinAbs;

TEST_CASE("exact rational arithmetic") {
    REQUIRE(Rat(6, 4) == Rat(3, 2));
    REQUIRE(Rat(3, -6) == Rat(-1, 2));
    REQUIRE(Rat(0, 7) == Rat(0));
    REQUIRE(Rat(5).str() == "5");
    REQUIRE(Rat(3, 2).str() == "3/2");
    REQUIRE(Rat(-1, 2).str() == "-1/2");
    REQUIRE(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    REQUIRE(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    REQUIRE(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    REQUIRE(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
    REQUIRE(-Rat(1, 2) == Rat(-1, 2));
    REQUIRE(Rat(1, 3) < Rat(1, 2));
    REQUIRE(Rat(-2) < Rat(1, 1000));
    REQUIRE(Rat(7, 3) >= Rat(7, 3));
    REQUIRE(Rat::max(Rat(5, 2), Rat(3)) == Rat(3));
    REQUIRE(Rat(3, 2).value() == 1.5);
    REQUIRE_THROWS_AS(Rat(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("threshold table values") {
    SECTION("edge-count thresholds") {
        ThresholdTable tb = thresholds(23, 3, 1, false);
        REQUIRE(tb.edge_threshold_ktree.applicable);
        REQUIRE(tb.edge_threshold_ktree.value == Rat(180));
        REQUIRE(tb.edge_threshold_kended.applicable);
        REQUIRE(tb.edge_threshold_kended.value == Rat(184));
        // below the order floor the threshold is flagged off
        REQUIRE_FALSE(thresholds(15, 2, 1, false).edge_threshold_ktree.applicable);
    }
    SECTION("minimum orders") {
        ThresholdTable a = thresholds(16, 2, 1, false);
        REQUIRE(a.n_min_ktree_rho == Rat(16));
        REQUIRE(a.n_min_ktree_q == Rat(16));
        REQUIRE(a.n_min_ktree_comp_rho == Rat(16));
        REQUIRE(a.n_min_ktree_small == Rat(4));
        REQUIRE(a.n_min_kended_q == Rat(17));
        REQUIRE(a.n_min_kended_comp_rho == Rat(17));
        REQUIRE(a.n_min_kended_comp_rho_t1 == Rat(17));
        REQUIRE(a.improvement_gap == Rat(0));

        ThresholdTable b = thresholds(50, 3, 2, false);
        REQUIRE(b.n_min_ktree_comp_rho == Rat(42));
        REQUIRE(b.improvement_gap == Rat(5, 2));
        REQUIRE(b.n_min_ktree_rho_prior - b.n_min_ktree_rho >= Rat(0));
    }
    SECTION("comparison bounds") {
        ThresholdTable tb = thresholds(16, 2, 1, false);
        REQUIRE(tb.f_value.applicable);
        REQUIRE(tb.f_value.value == Rat(35));
        REQUIRE_THAT(tb.f_sqrt, WithinAbs(std::sqrt(35.0), 1e-12));
        REQUIRE(tb.ktree_small_rho_bound_sq == Rat(28));  // (n-1-t)(kt-t+1) = 14*2
        REQUIRE(thresholds(20, 4, 2, false).ktree_q_bound == Rat(24));
        REQUIRE(thresholds(10, 3, 2, false).ktree_small_rho_bound_sq == Rat(35));
        ThresholdTable c = thresholds(17, 2, 1, false);
        REQUIRE(c.kended_rho_bound_sq.applicable);
        REQUIRE(c.kended_rho_bound_sq.value == Rat(38));
        REQUIRE_THAT(c.rho_anchor, WithinAbs(14.0, 0.0));
        REQUIRE_THAT(c.q_anchor, WithinAbs(28.0, 0.0));
    }
    SECTION("spectral entries only on request") {
        ThresholdTable off = thresholds(16, 2, 1, false);
        REQUIRE_FALSE(off.rho_h_star.applicable);
        ThresholdTable on = thresholds(16, 2, 1, true);
        REQUIRE(on.rho_h_star.applicable);
        REQUIRE(on.q_h_star.applicable);
        REQUIRE(on.q_g_star.applicable);
        REQUIRE(on.rho_h_star.value > 13.0);  // strictly above the anchor
        // too small for the hub construction: entry stays off
        REQUIRE_FALSE(thresholds(3, 2, 1, true).rho_h_star.applicable);
    }
    REQUIRE_THROWS_AS(thresholds(10, 1, 1), std::invalid_argument);
}

TEST_CASE("theorem names round trip") {
    REQUIRE(all_theorems().size() == 12);
    for (TheoremId id : all_theorems()) {
        auto back = theorem_from_name(theorem_name(id));
        REQUIRE(back);
        REQUIRE(*back == id);
    }
    REQUIRE_FALSE(theorem_from_name("thm-nope"));
    REQUIRE(theorem_name(TheoremId::HamPathComp) == "cor-hampath-comp");
}

TEST_CASE("verdicts on landmark graphs") {
    SECTION("extremal graph is the exception, complete graph is guaranteed") {
        Graph h = make_h_star(16, 2, 1);
        TheoremVerdict ve = evaluate(TheoremId::KTreeRho, h, 2, 1);
        REQUIRE(ve.conclusion == Conclusion::ExtremalException);
        REQUIRE(ve.exception_detail == "hstar");
        REQUIRE(ve.comparison.evaluated);
        REQUIRE(soundness_check(ve, h));

        TheoremVerdict vg = evaluate(TheoremId::KTreeRho, complete(16), 2, 1);
        REQUIRE(vg.conclusion == Conclusion::Guaranteed);
        REQUIRE(vg.comparison.measured > vg.comparison.threshold);
        REQUIRE(soundness_check(vg, complete(16)));
    }
    SECTION("order below the floor fails the preconditions") {
        TheoremVerdict v = evaluate(TheoremId::HamPathComp, complete(15), 2, 1);
        REQUIRE(v.conclusion == Conclusion::PreconditionFailed);
        bool saw_order = false;
        for (const auto& p : v.preconditions)
            if (p.name == "order" && !p.pass) saw_order = true;
        REQUIRE(saw_order);
    }
    SECTION("disconnected input fails the connectivity precondition") {
        Graph g = disjoint_union(complete(8), complete(8));
        REQUIRE(evaluate(TheoremId::KTreeCompRho, g, 2, 1).conclusion ==
                Conclusion::PreconditionFailed);
    }
    SECTION("suite exception on the claw") {
        TheoremVerdict v = evaluate(TheoremId::HamPathSuite, star(3), 2, 1);
        REQUIRE(v.conclusion == Conclusion::ExtremalException);
        REQUIRE(soundness_check(v, star(3)));  // no Hamilton path in K_{1,3}
    }
    SECTION("family-excluded input fails its precondition") {
        Graph g = join(empty_graph(6), complete(4));  // half-degree split family member
        REQUIRE(is_in_g3(g, 2, 2));
        REQUIRE(evaluate(TheoremId::KTreeCompQ, g, 2, 2).conclusion ==
                Conclusion::PreconditionFailed);
    }
    SECTION("background results") {
        TheoremVerdict v = evaluate(TheoremId::BgFn, complete(16), 2, 1);
        REQUIRE(v.conclusion == Conclusion::Guaranteed);
        REQUIRE(soundness_check(v, complete(16)));

        // the exception family is an exclusion here, not an exception verdict
        Graph two = disjoint_union(complete(8), complete(8));
        TheoremVerdict z = evaluate(TheoremId::BgZhou, two, 2, 1);
        REQUIRE(z.conclusion == Conclusion::PreconditionFailed);
        // complete graph minus a perfect matching: the complement is the
        // matching itself, q = 2 <= n, and the graph is not in the family
        Graph m = complete(10);
        for (int v = 0; v < 10; v += 2) m.remove_edge(v, v + 1);
        TheoremVerdict zg = evaluate(TheoremId::BgZhou, m, 2, 1);
        REQUIRE(zg.conclusion == Conclusion::Guaranteed);
        REQUIRE(soundness_check(zg, m));
    }
    SECTION("an inflated margin turns a clear decision into a tie") {
        EvalOptions wide;
        wide.margin = 1e6;
        REQUIRE(evaluate(TheoremId::KTreeRho, complete(16), 2, 1, wide).conclusion ==
                Conclusion::TolTie);
    }
    SECTION("bad k or t short circuits") {
        REQUIRE(evaluate(TheoremId::KTreeRho, complete(16), 1, 1).conclusion ==
                Conclusion::PreconditionFailed);
        REQUIRE(evaluate(TheoremId::KTreeRho, complete(16), 2, 0).conclusion ==
                Conclusion::PreconditionFailed);
    }
}

TEST_CASE("soundness rejects forged verdicts") {
    TheoremVerdict forged;
    forged.id = TheoremId::KTreeRho;
    forged.k = 2;
    forged.t = 1;
    forged.conclusion = Conclusion::Guaranteed;
    REQUIRE_FALSE(soundness_check(forged, star(4)));  // no degree-2 spanning tree here

    forged.conclusion = Conclusion::ExtremalException;
    REQUIRE_FALSE(soundness_check(forged, complete(5)));  // Hamilton path exists

    forged.conclusion = Conclusion::Inconclusive;  // claims nothing
    REQUIRE(soundness_check(forged, star(4)));
}

TEST_CASE("conclusion names") {
    REQUIRE(conclusion_name(Conclusion::Guaranteed) == "guaranteed");
    REQUIRE(conclusion_name(Conclusion::ExtremalException) == "extremal-exception");
    REQUIRE(conclusion_name(Conclusion::PreconditionFailed) == "precondition-failed");
    REQUIRE(conclusion_name(Conclusion::Inconclusive) == "inconclusive");
    REQUIRE(conclusion_name(Conclusion::TolTie) == "tolerance-tie");
}
