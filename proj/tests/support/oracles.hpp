#pragma once
// Slow reference implementations the tests trust instead of the library:
// dense Jacobi eigensolver, permutation search for Hamilton paths and
// isomorphism, brute-force spanning-tree scans, subset vertex cuts, and a
// full-rescan closure. Everything here is exponential or cubic and meant
// for order <= 8.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "spectree/graph.hpp"

namespace refs {

using spectree::Graph;

// Largest eigenvalue of a dense symmetric matrix by cyclic Jacobi rotations.
inline double jacobi_max_eigenvalue(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(at(p, q)) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
    }
    double best = at(0, 0);
    for (int i = 1; i < n; ++i) best = std::max(best, at(i, i));
    return best;
}

inline double adjacency_rho(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0.0;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;
    return jacobi_max_eigenvalue(std::move(a), n);
}

inline double signless_q(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0.0;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i) * n + i] = g.degree(i);
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;
    }
    return jacobi_max_eigenvalue(std::move(a), n);
}

// Hamilton path by trying every vertex order.
inline bool hamilton_path(const Graph& g) {
    const int n = g.order();
    if (n == 1) return true;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 1; i < n && ok; ++i) ok = g.adjacent(perm[i - 1], perm[i]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                ok = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Calls fn(degrees) for the degree sequence of every spanning tree, by
// trying every (n-1)-subset of the edges.
template <class Fn>
void for_each_spanning_tree(const Graph& g, Fn&& fn) {
    const int n = g.order();
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (n < 2 || m < n - 1) return;
    std::vector<int> pick(static_cast<std::size_t>(n - 1));
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v];
        return v;
    };
    while (true) {
        std::iota(parent.begin(), parent.end(), 0);
        bool tree = true;
        std::array<int, spectree::kMaxOrder> deg{};
        for (int idx : pick) {
            auto [u, v] = edges[static_cast<std::size_t>(idx)];
            int ru = root(u), rv = root(v);
            if (ru == rv) {
                tree = false;
                break;
            }
            parent[ru] = rv;
            ++deg[u];
            ++deg[v];
        }
        if (tree) fn(deg);
        // next combination
        int i = n - 2;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (n - 1) + i) --i;
        if (i < 0) return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n - 1; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Exact minimum over spanning trees of the max degree; 0 when none exists.
inline int min_max_degree(const Graph& g) {
    int best = 0;
    for_each_spanning_tree(g, [&](const std::array<int, spectree::kMaxOrder>& deg) {
        int mx = 0;
        for (int v = 0; v < g.order(); ++v) mx = std::max(mx, deg[v]);
        if (best == 0 || mx < best) best = mx;
    });
    return best;
}

// Exact minimum leaf count over spanning trees; 0 when none exists.
inline int min_leaves(const Graph& g) {
    int best = 0;
    for_each_spanning_tree(g, [&](const std::array<int, spectree::kMaxOrder>& deg) {
        int leaves = 0;
        for (int v = 0; v < g.order(); ++v) leaves += deg[v] == 1;
        if (best == 0 || leaves < best) best = leaves;
    });
    return best;
}

// Degree-sum closure by full rescan until stable.
inline Graph closure(Graph g, int l) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) >= l) {
                    g.add_edge(u, v);
                    changed = true;
                }
    }
    return g;
}

// Vertex connectivity: smallest vertex set whose removal disconnects the
// graph (or n-1 for complete graphs), by trying subsets in size order.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n && complete; ++v) complete = g.adjacent(u, v);
    if (complete) return n - 1;
    for (int s = 0; s <= n - 2; ++s)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) != s) continue;
            std::uint64_t rest = g.vertex_mask() & ~mask;
            if (std::popcount(rest) < 2) continue;
            std::uint64_t comp =
                spectree::component_mask(g, std::countr_zero(rest), rest);
            if (comp != rest) return s;
        }
    return n - 1;
}

}  // namespace refs
