#pragma once
// Graph isomorphism for small graphs: cheap invariants (order, size, degree
// sequence, sorted neighbor-degree profiles) first, then a backtracking
// vertex-map search seeded by those profiles. The graphs compared here are
// join-of-blocks constructions with very uneven degree profiles, so the
// candidate lists collapse to near-singletons in practice.

#include <algorithm>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

namespace detail {

inline std::vector<std::vector<int>> degree_profiles(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        prof[v].push_back(g.degree(v));
        std::vector<int> nb;
        for (std::uint64_t m = g.neighbors(v); m; m &= m - 1)
            nb.push_back(g.degree(std::countr_zero(m)));
        std::sort(nb.begin(), nb.end());
        prof[v].insert(prof[v].end(), nb.begin(), nb.end());
    }
    return prof;
}

inline bool iso_extend(const Graph& a, const Graph& b, const std::vector<int>& order, std::size_t i,
                       std::vector<int>& map, std::uint64_t used,
                       const std::vector<std::uint64_t>& cand) {
    if (i == order.size()) return true;
    int va = order[i];
    for (std::uint64_t m = cand[va] & ~used; m; m &= m - 1) {
        int vb = std::countr_zero(m);
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
            int ua = order[j];
            ok = a.adjacent(va, ua) == b.adjacent(vb, map[ua]);
        }
        if (!ok) continue;
        map[va] = vb;
        if (iso_extend(a, b, order, i + 1, map, used | Graph::bit(vb), cand)) return true;
    }
    return false;
}

}  // namespace detail

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    if (n == 0) return true;
    auto pa = detail::degree_profiles(a);
    auto pb = detail::degree_profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(n), 0);
    for (int va = 0; va < n; ++va)
        for (int vb = 0; vb < n; ++vb)
            if (pa[va] == pb[vb]) cand[va] |= Graph::bit(vb);
    // most-constrained vertices first
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = std::popcount(cand[x]), cy = std::popcount(cand[y]);
        if (cx != cy) return cx < cy;
        return x < y;
    });
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    return detail::iso_extend(a, b, order, 0, map, 0, cand);
}

}  // namespace spectree
