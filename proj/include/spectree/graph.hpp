#pragma once
// Simple undirected graphs on up to 64 vertices, one 64-bit adjacency mask
// per vertex. Graph values are plain data: cheap to copy, compared bitwise,
// and treated as immutable by every algorithm in this library (combinators
// return new values). Safe to share across threads.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectree {

inline constexpr int kMaxOrder = 64;

// Thrown when a construction would exceed the 64-vertex capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxOrder)
            throw CapacityError("graph order must be in [0,64], got " + std::to_string(n));
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }

    // Neighborhood of v as a bitmask over vertex indices.
    std::uint64_t neighbors(int v) const { return rows_[v]; }

    int degree(int v) const { return std::popcount(rows_[v]); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        rows_[u] &= ~bit(v);
        rows_[v] &= ~bit(u);
    }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    int min_degree() const {
        int d = n_ > 0 ? n_ : 0;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // All-ones mask over the vertex index range.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int v = 1; v < n_; ++v)
            for (std::uint64_t m = rows_[v] & (bit(v) - 1); m; m &= m - 1)
                out.emplace_back(std::countr_zero(m), v);
        return out;
    }

    bool operator==(const Graph&) const = default;

    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("vertex index out of range");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

// ---- builders -------------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// Circulant graph: vertex v adjacent to v +- o (mod n) for each offset o.
inline Graph circulant(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int o : offsets) {
            int w = (v + o) % n;
            if (w != v && !g.adjacent(v, w)) g.add_edge(v, w);
        }
    return g;
}

// ---- combinators ----------------------------------------------------------

inline Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

// Vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    if (na + nb > kMaxOrder)
        throw CapacityError("disjoint_union would exceed 64 vertices");
    Graph g(na + nb);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

// Disjoint union plus all edges between the two vertex sets.
inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    const int na = a.order();
    for (int u = 0; u < na; ++u)
        for (int v = na; v < g.order(); ++v) g.add_edge(u, v);
    return g;
}

// ---- degree statistics ----------------------------------------------------

struct DegreeStats {
    std::vector<int> degree_sequence;
    int min_degree = 0;
    int max_degree = 0;
    int edge_count = 0;
    long long degree_square_sum = 0;  // z(G) = sum of d(v)^2
};

inline DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const int n = g.order();
    s.degree_sequence.reserve(n);
    s.min_degree = n > 0 ? n : 0;
    int sum = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        s.degree_sequence.push_back(d);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        sum += d;
        s.degree_square_sum += static_cast<long long>(d) * d;
    }
    s.edge_count = sum / 2;
    return s;
}

// ---- connectivity (component structure) -----------------------------------

// Mask of the component containing `start`, restricted to `within`.
inline std::uint64_t component_mask(const Graph& g, int start, std::uint64_t within) {
    std::uint64_t seen = Graph::bit(start) & within;
    std::uint64_t frontier = seen;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint64_t nb = g.neighbors(v) & within & ~seen;
        seen |= nb;
        frontier |= nb;
    }
    return seen;
}

inline std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t rest = g.vertex_mask();
    while (rest) {
        std::uint64_t c = component_mask(g, std::countr_zero(rest), rest);
        comps.push_back(c);
        rest &= ~c;
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return component_mask(g, 0, g.vertex_mask()) == g.vertex_mask();
}

// Two-coloring; returns {side0, side1} masks or nullopt-like empty pair flag.
struct BipartitionResult {
    bool bipartite = false;
    std::uint64_t side0 = 0, side1 = 0;
};

inline BipartitionResult bipartition(const Graph& g) {
    BipartitionResult r;
    std::uint64_t colored = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (colored & Graph::bit(s)) continue;
        r.side0 |= Graph::bit(s);
        colored |= Graph::bit(s);
        std::uint64_t frontier = Graph::bit(s);
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            bool v_in_0 = (r.side0 >> v) & 1u;
            std::uint64_t nb = g.neighbors(v);
            if (nb & (v_in_0 ? r.side0 : r.side1)) return r;  // odd cycle
            std::uint64_t fresh = nb & ~colored;
            (v_in_0 ? r.side1 : r.side0) |= fresh;
            colored |= fresh;
            frontier |= fresh;
        }
    }
    r.bipartite = true;
    return r;
}

}  // namespace spectree
