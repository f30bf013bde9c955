#pragma once
// Exact deciders for spanning trees with a maximum-degree cap ("spanning
// k-tree") or a leaf-count cap ("spanning k-ended-tree"), plus a dedicated
// Hamilton-path routine (the k = 2 case of both).
//
// Strategy per query:
//   1. cheap certificates: deterministic greedy tree growth (degree-aware
//      Prim for the degree cap, depth-first for few leaves) — settles almost
//      every dense instance instantly;
//   2. cheap refutations: degree-sum feasibility plus cut-based lower bounds
//      (see cut_bounds below);
//   3. branch and bound growing one tree from a root over frontier edges,
//      with a connectivity prune on the still-usable subgraph, a committed-
//      leaf count, and a branch-degree excess bound (a tree with L leaves
//      has sum of (deg-2)+ equal to L-2). A per-query node budget turns
//      pathological cases into an error rather than a wrong answer.

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

inline constexpr long long kDefaultNodeBudget = 100'000'000;

struct TreeCertificate {
    std::vector<std::pair<int, int>> edges;
    int max_degree = 0;
    int leaf_count = 0;
};

class OracleBudgetError : public std::runtime_error {
public:
    explicit OracleBudgetError(long long nodes)
        : std::runtime_error("spanning-tree search exhausted its node budget after " +
                             std::to_string(nodes) + " nodes"),
          nodes_used(nodes) {}
    long long nodes_used;
};

inline TreeCertificate make_certificate(int n, std::vector<std::pair<int, int>> edges) {
    TreeCertificate c;
    c.edges = std::move(edges);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : c.edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n; ++v) {
        c.max_degree = std::max(c.max_degree, deg[v]);
        if (deg[v] == 1) ++c.leaf_count;
    }
    return c;
}

namespace detail {

inline void require_spanning_instance(const Graph& g) {
    if (g.order() < 2) throw std::domain_error("spanning-tree oracle needs order >= 2");
    if (!is_connected(g)) throw std::domain_error("disconnected graph has no spanning tree");
}

// ---- Hamilton path --------------------------------------------------------

// Greedy walk: from each start vertex, repeatedly step to the unvisited
// neighbor with the fewest unvisited neighbors. Finds a Hamilton path in
// most dense graphs without touching the subset DP.
inline bool hamilton_greedy(const Graph& g, std::vector<int>* path_out) {
    const int n = g.order();
    for (int s = 0; s < n; ++s) {
        std::uint64_t visited = Graph::bit(s);
        int order[kMaxOrder];
        order[0] = s;
        int len = 1, v = s;
        while (len < n) {
            std::uint64_t cand = g.neighbors(v) & ~visited;
            if (!cand) break;
            int best = -1, best_key = kMaxOrder + 1;
            for (std::uint64_t m = cand; m; m &= m - 1) {
                int w = std::countr_zero(m);
                int key = std::popcount(g.neighbors(w) & ~visited);
                if (key < best_key) {
                    best_key = key;
                    best = w;
                }
            }
            v = best;
            visited |= Graph::bit(v);
            order[len++] = v;
        }
        if (len == n) {
            if (path_out) path_out->assign(order, order + n);
            return true;
        }
    }
    return false;
}

// Subset DP: reach[mask] = endpoints of simple paths covering exactly `mask`.
inline bool hamilton_dp(const Graph& g, std::vector<int>* path_out) {
    const int n = g.order();
    static thread_local std::vector<std::uint32_t> reach;
    reach.assign(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) reach[std::uint64_t{1} << v] = std::uint32_t{1} << v;
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::uint32_t r = 0;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (reach[mask ^ (std::uint32_t{1} << v)] & static_cast<std::uint32_t>(g.neighbors(v)))
                r |= std::uint32_t{1} << v;
        }
        reach[mask] = r;
    }
    if (!reach[full]) return false;
    if (path_out) {
        path_out->clear();
        std::uint32_t mask = full;
        int v = std::countr_zero(reach[full]);
        while (true) {
            path_out->push_back(v);
            mask ^= std::uint32_t{1} << v;
            if (!mask) break;
            std::uint32_t prev = reach[mask] & static_cast<std::uint32_t>(g.neighbors(v));
            v = std::countr_zero(prev);
        }
        std::reverse(path_out->begin(), path_out->end());
    }
    return true;
}

// ---- cut-based lower bounds ----------------------------------------------

// For a vertex set X whose removal leaves s singleton components (and
// possibly larger ones), every spanning tree T satisfies
//   sum_{x in X} deg_T(x) >= |X| + s - (larger components exist ? 0 : 1),
// because contracting the non-singleton components leaves a connected graph
// on X, the singletons and the contracted blobs, and the singletons' edges
// all land in X. Hence max degree >= ceil(that sum / |X|), and since a tree
// with L leaves satisfies sum over v of (deg(v) - 2)+ = L - 2, the same
// degree sum forces L >= 2 + sum - 2|X|. Candidate X: neighborhoods of
// minimum-degree vertices, which is where these bounds bite for join-type
// extremal graphs.
struct CutBounds {
    int max_degree_lb = 1;
    int leaf_lb = 2;
};

inline CutBounds cut_bounds(const Graph& g) {
    const int n = g.order();
    CutBounds b;
    if (n >= 3) b.max_degree_lb = 2;
    const int delta = g.min_degree();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != delta) continue;
        std::uint64_t x = g.neighbors(v);
        int xs = std::popcount(x);
        if (xs == 0 || xs >= n - 1) continue;
        std::uint64_t rest = g.vertex_mask() & ~x;
        int singles = 0;
        bool larger = false;
        while (rest) {
            std::uint64_t c = component_mask(g, std::countr_zero(rest), rest);
            rest &= ~c;
            if (std::popcount(c) == 1) ++singles;
            else larger = true;
        }
        int degsum = xs + singles - (larger ? 0 : 1);
        b.max_degree_lb = std::max(b.max_degree_lb, (degsum + xs - 1) / xs);
        b.leaf_lb = std::max(b.leaf_lb, 2 + degsum - 2 * xs);
    }
    return b;
}

// ---- branch and bound -----------------------------------------------------

// Grows one tree from vertex 0. Each search node picks a frontier edge
// (tree vertex, outside vertex) and branches on taking vs. discarding it;
// every spanning tree either uses the chosen edge or not, so the search is
// exhaustive. Edges between two tree vertices would close cycles and are
// dropped from the usable graph as soon as they appear, and under a degree
// cap a saturated vertex sheds its remaining usable edges the same way, so
// `usable` always holds exactly the edges that could still join the tree.
struct TreeSearch {
    int n = 0, cap = 0;
    bool minleaf = false;  // false: degree cap, true: leaf cap
    std::uint64_t usable[kMaxOrder];
    std::uint64_t in_tree = 0;
    std::uint64_t all = 0;
    int deg[kMaxOrder];
    long long budget = 0, nodes = 0;
    std::vector<std::pair<int, int>> chosen;

    void drop_edge(int a, int c, std::vector<std::pair<int, int>>& log) {
        usable[a] &= ~Graph::bit(c);
        usable[c] &= ~Graph::bit(a);
        log.emplace_back(a, c);
    }

    void restore(const std::vector<std::pair<int, int>>& log) {
        for (auto it = log.rbegin(); it != log.rend(); ++it) {
            usable[it->first] |= Graph::bit(it->second);
            usable[it->second] |= Graph::bit(it->first);
        }
    }

    // Every vertex must be reachable from the (connected) tree through
    // usable edges, else no completion exists.
    bool usable_connected() const {
        std::uint64_t seen = in_tree, frontier = in_tree;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t nb = usable[v] & ~seen;
            seen |= nb;
            frontier |= nb;
        }
        return seen == all;
    }

    // max(committed leaves, 2 + committed branch excess): a vertex whose
    // tree degree can never exceed 1 stays a leaf, and a final tree with L
    // leaves satisfies sum over v of max(deg(v)-2, 0) = L - 2.
    int leaf_lower_bound() const {
        int committed = 0, excess = 0;
        for (std::uint64_t m = all; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (deg[v] + std::popcount(usable[v]) <= 1) ++committed;
            if (deg[v] > 2) excess += deg[v] - 2;
        }
        return std::max(committed, 2 + excess);
    }

    bool step() {
        if (--budget < 0) throw OracleBudgetError(nodes);
        ++nodes;
        if (in_tree == all) {
            if (!minleaf) return true;
            int leaves = 0;
            for (std::uint64_t m = all; m; m &= m - 1) leaves += deg[std::countr_zero(m)] == 1;
            return leaves <= cap;
        }
        if (!usable_connected()) return false;
        if (minleaf && leaf_lower_bound() > cap) return false;
        // branch on the frontier edge whose outside endpoint is most constrained
        int bu = -1, bw = -1, bkey = 1 << 20;
        for (std::uint64_t m = all & ~in_tree; m; m &= m - 1) {
            int w = std::countr_zero(m);
            std::uint64_t link = usable[w] & in_tree;
            if (!link) continue;
            int key = std::popcount(usable[w]) * kMaxOrder + w;
            if (key < bkey) {
                bkey = key;
                bw = w;
                bu = std::countr_zero(link);
            }
        }
        if (bu < 0) return false;
        const bool forced = std::popcount(usable[bw]) == 1;
        {  // include branch
            std::vector<std::pair<int, int>> log;
            drop_edge(bu, bw, log);
            in_tree |= Graph::bit(bw);
            ++deg[bu];
            deg[bw] = 1;
            chosen.emplace_back(bu, bw);
            for (std::uint64_t m = usable[bw] & in_tree; m; m &= m - 1)
                drop_edge(bw, std::countr_zero(m), log);  // would close a cycle
            if (!minleaf && deg[bu] == cap)
                for (std::uint64_t m = usable[bu]; m; m &= m - 1)
                    drop_edge(bu, std::countr_zero(m), log);  // saturated
            if (step()) return true;
            chosen.pop_back();
            deg[bw] = 0;
            --deg[bu];
            in_tree &= ~Graph::bit(bw);
            restore(log);
        }
        if (forced) return false;  // discarding bw's only link strands it
        {  // exclude branch
            std::vector<std::pair<int, int>> log;
            drop_edge(bu, bw, log);
            if (step()) return true;
            restore(log);
        }
        return false;
    }

    bool run(const Graph& graph, int cap_value, bool leaf_variant, long long node_budget,
             std::vector<std::pair<int, int>>* edges_out) {
        n = graph.order();
        cap = cap_value;
        minleaf = leaf_variant;
        budget = node_budget;
        nodes = 0;
        all = graph.vertex_mask();
        for (int v = 0; v < n; ++v) {
            usable[v] = graph.neighbors(v);
            deg[v] = 0;
        }
        in_tree = Graph::bit(0);
        chosen.clear();
        bool found = step();
        if (found && edges_out) *edges_out = chosen;
        return found;
    }
};

// Degree-aware Prim: grow one tree, always extending from the tree vertex
// with the smallest current tree degree toward the outside vertex with the
// smallest graph degree.
inline bool greedy_degree_tree(const Graph& g, int k, std::vector<std::pair<int, int>>* out) {
    const int n = g.order();
    for (int s = 0; s < std::min(n, 4); ++s) {
        std::uint64_t in_tree = Graph::bit(s);
        int deg[kMaxOrder] = {};
        std::vector<std::pair<int, int>> edges;
        while (std::popcount(in_tree) < n) {
            int bu = -1, bw = -1, bkey_u = kMaxOrder + 1, bkey_w = kMaxOrder + 1;
            for (std::uint64_t tm = in_tree; tm; tm &= tm - 1) {
                int u = std::countr_zero(tm);
                if (deg[u] >= k) continue;
                std::uint64_t cand = g.neighbors(u) & ~in_tree;
                for (std::uint64_t cm = cand; cm; cm &= cm - 1) {
                    int w = std::countr_zero(cm);
                    if (deg[u] < bkey_u || (deg[u] == bkey_u && g.degree(w) < bkey_w)) {
                        bkey_u = deg[u];
                        bkey_w = g.degree(w);
                        bu = u;
                        bw = w;
                    }
                }
            }
            if (bu < 0) break;
            in_tree |= Graph::bit(bw);
            ++deg[bu];
            ++deg[bw];
            edges.emplace_back(bu, bw);
        }
        if (std::popcount(in_tree) == n) {
            if (out) *out = std::move(edges);
            return true;
        }
    }
    return false;
}

// Depth-first spanning tree, preferring neighbors with few unvisited
// neighbors: long chains, few leaves. Returns the leaf count.
inline int greedy_dfs_tree(const Graph& g, int start, std::vector<std::pair<int, int>>& edges) {
    const int n = g.order();
    edges.clear();
    std::uint64_t visited = Graph::bit(start);
    int stack[kMaxOrder], top = 0;
    int deg[kMaxOrder] = {};
    stack[top++] = start;
    while (top > 0) {
        int v = stack[top - 1];
        std::uint64_t cand = g.neighbors(v) & ~visited;
        if (!cand) {
            --top;
            continue;
        }
        int best = -1, best_key = kMaxOrder + 1;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int w = std::countr_zero(m);
            int key = std::popcount(g.neighbors(w) & ~visited);
            if (key < best_key) {
                best_key = key;
                best = w;
            }
        }
        visited |= Graph::bit(best);
        edges.emplace_back(v, best);
        ++deg[v];
        ++deg[best];
        stack[top++] = best;
    }
    int leaves = 0;
    for (int v = 0; v < n; ++v) leaves += deg[v] == 1;
    return leaves;
}

}  // namespace detail

// ---- public oracle API ----------------------------------------------------

inline bool has_hamilton_path(const Graph& g, std::vector<int>* path_out = nullptr) {
    if (g.order() == 0) throw std::domain_error("Hamilton path needs order >= 1");
    if (g.order() == 1) {
        if (path_out) path_out->assign(1, 0);
        return true;
    }
    if (!is_connected(g)) throw std::domain_error("disconnected graph has no Hamilton path");
    int deg1 = 0;
    for (int v = 0; v < g.order(); ++v) deg1 += g.degree(v) == 1;
    if (deg1 > 2) return false;
    if (detail::hamilton_greedy(g, path_out)) return true;
    if (g.order() <= 24) return detail::hamilton_dp(g, path_out);
    // beyond the DP range, fall back to the leaf-capped tree search
    detail::TreeSearch ts;
    std::vector<std::pair<int, int>> edges;
    if (!ts.run(g, 2, true, kDefaultNodeBudget, &edges)) return false;
    if (path_out) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        int cur = 0;
        while (adj[cur].size() != 1) ++cur;
        path_out->clear();
        int prev = -1;
        while (true) {
            path_out->push_back(cur);
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
    }
    return true;
}

inline bool has_spanning_k_tree(const Graph& g, int k, long long budget = kDefaultNodeBudget,
                                TreeCertificate* cert = nullptr) {
    detail::require_spanning_instance(g);
    const int n = g.order();
    if (k < 1) return false;
    if (n == 2 || k >= n - 1) {
        // any spanning tree fits; hand back a depth-first one
        std::vector<std::pair<int, int>> edges;
        detail::greedy_dfs_tree(g, 0, edges);
        if (cert) *cert = make_certificate(n, std::move(edges));
        return true;
    }
    if (k == 2) {
        std::vector<int> path;
        if (!has_hamilton_path(g, cert ? &path : nullptr)) return false;
        if (cert) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
            *cert = make_certificate(n, std::move(edges));
        }
        return true;
    }
    long long cap_sum = 0;
    for (int v = 0; v < n; ++v) cap_sum += std::min(g.degree(v), k);
    if (cap_sum < 2LL * (n - 1)) return false;
    if (detail::cut_bounds(g).max_degree_lb > k) return false;
    std::vector<std::pair<int, int>> edges;
    if (detail::greedy_degree_tree(g, k, &edges)) {
        if (cert) *cert = make_certificate(n, std::move(edges));
        return true;
    }
    detail::TreeSearch ts;
    bool found = ts.run(g, k, false, budget, &edges);
    if (found && cert) *cert = make_certificate(n, std::move(edges));
    return found;
}

inline bool has_spanning_k_ended_tree(const Graph& g, int k, long long budget = kDefaultNodeBudget,
                                      TreeCertificate* cert = nullptr) {
    detail::require_spanning_instance(g);
    const int n = g.order();
    if (k < 2) return false;
    if (k == 2) {
        std::vector<int> path;
        if (!has_hamilton_path(g, cert ? &path : nullptr)) return false;
        if (cert) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
            *cert = make_certificate(n, std::move(edges));
        }
        return true;
    }
    if (k >= n - 1) {
        std::vector<std::pair<int, int>> edges;
        detail::greedy_dfs_tree(g, 0, edges);
        if (cert) *cert = make_certificate(n, std::move(edges));
        return true;
    }
    int deg1 = 0;
    for (int v = 0; v < n; ++v) deg1 += g.degree(v) == 1;
    if (deg1 > k) return false;
    if (detail::cut_bounds(g).leaf_lb > k) return false;
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < std::min(n, 4); ++s)
        if (detail::greedy_dfs_tree(g, s, edges) <= k) {
            if (cert) *cert = make_certificate(n, std::move(edges));
            return true;
        }
    detail::TreeSearch ts;
    bool found = ts.run(g, k, true, budget, &edges);
    if (found && cert) *cert = make_certificate(n, std::move(edges));
    return found;
}

// Minimum over all spanning trees of the maximum degree, with a witness.
inline std::pair<int, TreeCertificate> min_max_degree_spanning_tree(
    const Graph& g, long long budget = kDefaultNodeBudget) {
    detail::require_spanning_instance(g);
    const int n = g.order();
    TreeCertificate cert;
    if (n == 2) {
        has_spanning_k_tree(g, 1, budget, &cert);
        return {1, cert};
    }
    int k = std::max(2, detail::cut_bounds(g).max_degree_lb);
    for (;; ++k)
        if (has_spanning_k_tree(g, k, budget, &cert)) return {k, cert};
}

// Minimum leaf count over all spanning trees, with a witness.
inline std::pair<int, TreeCertificate> min_leaf_spanning_tree(
    const Graph& g, long long budget = kDefaultNodeBudget) {
    detail::require_spanning_instance(g);
    const int n = g.order();
    TreeCertificate cert;
    if (n == 2) {
        has_spanning_k_ended_tree(g, 2, budget, &cert);
        return {2, cert};
    }
    int k = std::max(2, detail::cut_bounds(g).leaf_lb);
    for (;; ++k)
        if (has_spanning_k_ended_tree(g, k, budget, &cert)) return {k, cert};
}

}  // namespace spectree
