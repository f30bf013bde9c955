#pragma once
// Vertex connectivity by Menger's theorem: kappa(G) is the minimum over
// non-adjacent pairs u,v of the maximum number of internally vertex-disjoint
// u-v paths, computed as max-flow on the split graph (each vertex becomes an
// in/out pair joined by a unit-capacity arc).

#include <algorithm>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {
namespace detail {

// Max number of internally disjoint s-t paths, capped at `cap` so callers
// that only need a threshold can stop early. s and t must be distinct.
inline int vertex_disjoint_paths(const Graph& g, int s, int t, int cap) {
    const int n = g.order();
    const int nn = 2 * n;  // node 2v = entry half, 2v+1 = exit half
    const int big = n + 1;
    static thread_local std::vector<int> res;
    res.assign(static_cast<std::size_t>(nn) * nn, 0);
    auto at = [&](int a, int b) -> int& { return res[static_cast<std::size_t>(a) * nn + b]; };
    for (int v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? big : 1;
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = g.neighbors(v);
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            at(2 * v + 1, 2 * u) = big;
        }
    }
    const int src = 2 * s + 1, snk = 2 * t;
    int flow = 0;
    std::vector<int> parent(nn), queue(nn);
    while (flow < cap) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[src] = src;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail && parent[snk] < 0) {
            int a = queue[head++];
            for (int b = 0; b < nn; ++b)
                if (parent[b] < 0 && at(a, b) > 0) {
                    parent[b] = a;
                    queue[tail++] = b;
                }
        }
        if (parent[snk] < 0) break;
        int push = big;
        for (int b = snk; b != src; b = parent[b]) push = std::min(push, at(parent[b], b));
        for (int b = snk; b != src; b = parent[b]) {
            at(parent[b], b) -= push;
            at(b, parent[b]) += push;
        }
        flow += push;
    }
    return std::min(flow, cap);
}

}  // namespace detail

inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = n - 1;  // complete graphs have no non-adjacent pair to lower this
    for (int u = 0; u < n && best > 0; ++u)
        for (int v = u + 1; v < n && best > 0; ++v)
            if (!g.adjacent(u, v))
                best = std::min(best, detail::vertex_disjoint_paths(g, u, v, best));
    return best;
}

// n > t together with kappa >= t; the order check keeps complete graphs
// honest (K_3 is not 3-connected).
inline bool is_t_connected(const Graph& g, int t) {
    const int n = g.order();
    if (n <= t) return false;
    if (t <= 0) return true;
    if (!is_connected(g)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && detail::vertex_disjoint_paths(g, u, v, t) < t) return false;
    return true;
}

}  // namespace spectree
