#pragma once
// Exhaustive labeled-graph enumeration (small orders), canonical forms for
// isomorphism-class deduplication, and seeded G(n,p) sampling.
//
// Labeled graphs on n vertices are identified with C(n,2)-bit codes: bit i
// corresponds to the i-th vertex pair in the column order (0,1), (0,2),
// (1,2), (0,3), ... — the same order the graph6 format uses. Enumeration
// walks a code range, so callers can split the space into deterministic
// chunks for parallel scans.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "spectree/graph.hpp"

namespace spectree {

inline constexpr int kMaxExhaustiveOrder = 8;   // 2^28 codes
inline constexpr int kMaxCodeOrder = 11;        // C(11,2) = 55 bits

inline std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > kMaxExhaustiveOrder)
        throw CapacityError("exhaustive enumeration supports order <= 8");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    if (n < 0 || n > kMaxCodeOrder) throw CapacityError("edge codes support order <= 11");
    Graph g(n);
    int i = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++i)
            if (code >> i & 1) g.add_edge(u, v);
    return g;
}

inline std::uint64_t code_of_graph(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCodeOrder) throw CapacityError("edge codes support order <= 11");
    std::uint64_t code = 0;
    int i = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++i)
            if (g.adjacent(u, v)) code |= std::uint64_t{1} << i;
    return code;
}

// Calls fn(g, code) for every code in [begin, end); fn may return void, or
// bool with false meaning "stop early".
template <class Fn>
void for_each_graph_code(int n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    end = std::min(end, labeled_graph_count(n));
    for (std::uint64_t code = begin; code < end; ++code) {
        Graph g = graph_from_code(n, code);
        if constexpr (std::is_same_v<decltype(fn(g, code)), bool>) {
            if (!fn(g, code)) return;
        } else {
            fn(g, code);
        }
    }
}

// Smallest code over all vertex relabelings: a brute-force canonical form.
// Factorial cost; meant for order <= 8 where it backs dedup and tests.
inline std::uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > kMaxExhaustiveOrder) throw CapacityError("canonical codes support order <= 8");
    int perm[kMaxExhaustiveOrder];
    std::iota(perm, perm + n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        int i = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++i)
                if (g.adjacent(perm[u], perm[v])) code |= std::uint64_t{1} << i;
        best = std::min(best, code);
    } while (std::next_permutation(perm, perm + n));
    return best;
}

// Materializes every labeled graph on n vertices passing `filter`, in code
// order; with dedup, keeps the first representative of each isomorphism
// class. Use for_each_graph_code directly when the survivor set is large.
template <class Filter>
std::vector<Graph> enumerate_graphs(int n, Filter&& filter, bool dedup = false) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for_each_graph_code(n, 0, labeled_graph_count(n), [&](const Graph& g, std::uint64_t) {
        if (!filter(g)) return;
        if (dedup && !seen.insert(canonical_code(g)).second) return;
        out.push_back(g);
    });
    return out;
}

inline std::vector<Graph> enumerate_graphs(int n, bool dedup = false) {
    return enumerate_graphs(n, [](const Graph&) { return true; }, dedup);
}

// Erdos–Renyi G(n,p) with a fixed pair order and one uniform draw per pair:
// the same (n, p, seed) always yields the same graph.
inline Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || n > kMaxOrder) throw CapacityError("sample_gnp supports order <= 64");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
    std::mt19937_64 gen(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            double unit = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (unit < p) g.add_edge(u, v);
        }
    return g;
}

// splitmix64: decorrelates per-chunk substreams derived from (seed, chunk).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk) {
    return splitmix64(splitmix64(seed) ^ splitmix64(chunk + 0x6a09e667f3bcc909ULL));
}

}  // namespace spectree
