#pragma once
// l-closure: repeatedly join nonadjacent pairs whose degree sum is at least
// l until no such pair remains. The fixpoint is unique (joining a pair never
// lowers a degree, so an eligible pair stays eligible), which the tests also
// confirm by replaying random processing orders.

#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

struct ClosureTrace {
    int l = 0;
    Graph result;
    std::vector<std::pair<int, int>> added_edges;  // in insertion order
};

inline ClosureTrace l_closure(const Graph& g, int l) {
    ClosureTrace tr;
    tr.l = l;
    tr.result = g;
    const int n = g.order();
    std::deque<std::pair<int, int>> work;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) work.emplace_back(u, v);
    while (!work.empty()) {
        auto [u, v] = work.front();
        work.pop_front();
        if (tr.result.adjacent(u, v)) continue;
        if (tr.result.degree(u) + tr.result.degree(v) < l) continue;
        tr.result.add_edge(u, v);
        tr.added_edges.emplace_back(u, v);
        // The endpoints' degrees grew; pairs involving them may now qualify.
        for (int w = 0; w < n; ++w) {
            if (w != u && !tr.result.adjacent(u, w)) work.emplace_back(std::min(u, w), std::max(u, w));
            if (w != v && !tr.result.adjacent(v, w)) work.emplace_back(std::min(v, w), std::max(v, w));
        }
    }
    return tr;
}

// Closure level below which adding edges preserves spanning k-tree
// existence in a t-connected graph: l = n - kt + 2t - 1. The equivalent
// spelling n - (k-2)t - 1 appears where the closure is consumed; the tests
// pin both down to the same value.
inline int ktree_closure_level(int n, int k, int t) { return n - k * t + 2 * t - 1; }

inline ClosureTrace ktree_closure(const Graph& g, int k, int t) {
    if (k < 2) throw std::invalid_argument("spanning k-tree closure needs k >= 2");
    if (t < 1) throw std::invalid_argument("spanning k-tree closure needs t >= 1");
    int l = ktree_closure_level(g.order(), k, t);
    if (l <= 0)
        throw std::domain_error("closure level n-kt+2t-1 = " + std::to_string(l) +
                                " is not positive at this order");
    return l_closure(g, l);
}

// Adding edges below the (n-1) degree-sum level preserves spanning
// k-ended-tree existence.
inline ClosureTrace kended_closure(const Graph& g) {
    if (g.order() < 2) throw std::domain_error("k-ended-tree closure needs order >= 2");
    return l_closure(g, g.order() - 1);
}

}  // namespace spectree
