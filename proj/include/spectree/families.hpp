#pragma once
// Extremal families appearing in the spanning-tree conditions:
//   H*(n,k,t) = K_t ∨ (K_{n-kt-1} ∪ (kt-t+1)K_1)   — no spanning k-tree
//   G*(n,k,t) = K_t ∨ (K_{n-k-2t+1} ∪ (k+t-1)K_1)  — no spanning k-ended-tree
//                                                     once n ≥ k+2t
// and the join families excluded by the complement-side theorems:
//   G1(k,t)   = { G_t ∨ (kt-t+2)K_1 }                       (order kt+2)
//   G2(k,t)   = { G_r ∨ R(kt+2-r, t-r) : 0 ≤ r ≤ t-3 }      (order kt+2)
//   G3(n,k,t) = { G_r ∨ R(n-r, D-r) : 0 ≤ r ≤ D },  D = (n-(k-2)t-2)/2 ∈ ℤ
//   G4(n)     = same shape with D = (n-2)/2, 0 ≤ r ≤ (n-8)/2
//   G5(n,r)   = same shape with D = (n-2)/2, fixed (n-6)/2 ≤ r ≤ (n-2)/2
//   EP(n)     = (n/2-1)-regular, or two complete components, or
//               { G_r ∨ R(n-r, n/2-1-r) : 1 ≤ r ≤ n/2-1 }
// G_r is an arbitrary graph on r vertices (constructors default it to K_r);
// R(a,b) is any b-regular graph on a vertices (constructors use a circulant).
//
// Membership tests exploit a forced split: in each join shape the regular
// block's vertices have total degree exactly D and the arbitrary block's
// vertices have degree at least n-r > D, so the only possible regular block
// is exactly the set of degree-D vertices.

#include <optional>
#include <stdexcept>
#include <string>

#include "spectree/graph.hpp"

namespace spectree {

// Any d-regular graph on n vertices; circulant construction with offsets
// 1..⌊d/2⌋ plus the antipodal offset when d is odd (needs n even).
inline Graph regular_circulant(int n, int d) {
    if (n < 0 || d < 0 || (n > 0 && d >= n) || (n == 0 && d > 0))
        throw std::invalid_argument("regular_circulant: need 0 <= d < n");
    if (static_cast<long long>(n) * d % 2 != 0)
        throw std::domain_error("no d-regular graph on n vertices exists when n*d is odd");
    std::vector<int> offsets;
    for (int o = 1; o <= d / 2; ++o) offsets.push_back(o);
    if (d % 2 == 1) offsets.push_back(n / 2);
    return circulant(n, offsets);
}

inline Graph make_h_star(int n, int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("make_h_star: need k >= 2, t >= 1");
    if (n < k * t + 2) throw std::invalid_argument("make_h_star: need n >= kt+2");
    return join(disjoint_union(complete(n - k * t - 1), empty_graph(k * t - t + 1)), complete(t));
}

inline Graph make_g_star(int n, int k, int t) {
    if (k < 2 || t < 1) throw std::invalid_argument("make_g_star: need k >= 2, t >= 1");
    if (n < k + 2 * t - 1) throw std::invalid_argument("make_g_star: need n >= k+2t-1");
    return join(disjoint_union(complete(n - k - 2 * t + 1), empty_graph(k + t - 1)), complete(t));
}

enum class FamilyId { HStar, GStar, G1, G2, G3, G4, G5, EPa, EPb, EPc, Regular };

struct FamilySpec {
    FamilyId id = FamilyId::HStar;
    int n = 0, k = 0, t = 0, r = 0, d = 0;
    std::optional<Graph> seed;  // the arbitrary block; defaults to a clique
};

namespace detail {

inline Graph seed_block(const FamilySpec& s, int want_order) {
    if (s.seed) {
        if (s.seed->order() != want_order)
            throw std::invalid_argument("family seed block has order " +
                                        std::to_string(s.seed->order()) + ", expected " +
                                        std::to_string(want_order));
        return *s.seed;
    }
    return complete(want_order);
}

}  // namespace detail

inline Graph construct_family(const FamilySpec& s) {
    switch (s.id) {
        case FamilyId::HStar:
            return make_h_star(s.n, s.k, s.t);
        case FamilyId::GStar:
            return make_g_star(s.n, s.k, s.t);
        case FamilyId::G1: {
            if (s.k < 2 || s.t < 1) throw std::invalid_argument("G1: need k >= 2, t >= 1");
            return join(empty_graph(s.k * s.t - s.t + 2), detail::seed_block(s, s.t));
        }
        case FamilyId::G2: {
            if (s.k < 2 || s.t < 3) throw std::invalid_argument("G2: need k >= 2, t >= 3");
            if (s.r < 0 || s.r > s.t - 3) throw std::invalid_argument("G2: need 0 <= r <= t-3");
            return join(regular_circulant(s.k * s.t + 2 - s.r, s.t - s.r),
                        detail::seed_block(s, s.r));
        }
        case FamilyId::G3: {
            if (s.k < 2 || s.t < 1) throw std::invalid_argument("G3: need k >= 2, t >= 1");
            long long num = s.n - static_cast<long long>(s.k - 2) * s.t - 2;
            if (num < 0 || num % 2 != 0)
                throw std::invalid_argument("G3: (n-(k-2)t-2)/2 must be a nonnegative integer");
            int big_d = static_cast<int>(num / 2);
            if (s.r < 0 || s.r > big_d) throw std::invalid_argument("G3: need 0 <= r <= D");
            return join(regular_circulant(s.n - s.r, big_d - s.r), detail::seed_block(s, s.r));
        }
        case FamilyId::G4: {
            if (s.n < 8 || s.n % 2 != 0) throw std::invalid_argument("G4: need even n >= 8");
            if (s.r < 0 || s.r > (s.n - 8) / 2)
                throw std::invalid_argument("G4: need 0 <= r <= (n-8)/2");
            return join(regular_circulant(s.n - s.r, (s.n - 2) / 2 - s.r),
                        detail::seed_block(s, s.r));
        }
        case FamilyId::G5: {
            if (s.n < 6 || s.n % 2 != 0) throw std::invalid_argument("G5: need even n >= 6");
            if (s.r < (s.n - 6) / 2 || s.r > (s.n - 2) / 2)
                throw std::invalid_argument("G5: need (n-6)/2 <= r <= (n-2)/2");
            return join(regular_circulant(s.n - s.r, (s.n - 2) / 2 - s.r),
                        detail::seed_block(s, s.r));
        }
        case FamilyId::EPa: {
            if (s.n < 2 || s.n % 2 != 0) throw std::invalid_argument("EPa: need even n >= 2");
            return regular_circulant(s.n, s.n / 2 - 1);
        }
        case FamilyId::EPb: {
            if (s.r < 1 || s.r > s.n - 1) throw std::invalid_argument("EPb: need 1 <= r <= n-1");
            return disjoint_union(complete(s.r), complete(s.n - s.r));
        }
        case FamilyId::EPc: {
            if (s.n < 2 || s.n % 2 != 0) throw std::invalid_argument("EPc: need even n >= 2");
            if (s.r < 1 || s.r > s.n / 2 - 1)
                throw std::invalid_argument("EPc: need 1 <= r <= n/2-1");
            return join(regular_circulant(s.n - s.r, s.n / 2 - 1 - s.r),
                        detail::seed_block(s, s.r));
        }
        case FamilyId::Regular:
            return regular_circulant(s.n, s.d);
    }
    throw std::invalid_argument("unknown family id");
}

// ---- membership -----------------------------------------------------------

namespace detail {

// If G = A ∨ B with B regular and every B-vertex of total degree exactly
// big_d, the B block is forced to be W = {v : deg(v) = big_d} (valid splits
// have |B| > big_d, so A-vertices have degree >= |B| > big_d). Returns the
// arbitrary-block size r = n - |W| when the A-W join is complete.
inline std::optional<int> forced_join_split(const Graph& g, int big_d) {
    const int n = g.order();
    std::uint64_t w = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == big_d) w |= Graph::bit(v);
    if (!w) return std::nullopt;
    for (std::uint64_t rest = g.vertex_mask() & ~w; rest; rest &= rest - 1) {
        int a = std::countr_zero(rest);
        if ((g.neighbors(a) & w) != w) return std::nullopt;
    }
    return n - std::popcount(w);
}

}  // namespace detail

inline bool is_in_g1(const Graph& g, int k, int t) {
    if (k < 2 || t < 1 || g.order() != k * t + 2) return false;
    auto r = detail::forced_join_split(g, t);
    return r && *r == t;
}

inline bool is_in_g2(const Graph& g, int k, int t) {
    if (k < 2 || t < 3 || g.order() != k * t + 2) return false;
    auto r = detail::forced_join_split(g, t);
    return r && *r <= t - 3;
}

inline bool is_in_g3(const Graph& g, int k, int t) {
    long long num = g.order() - static_cast<long long>(k - 2) * t - 2;
    if (k < 2 || t < 1 || num < 0 || num % 2 != 0) return false;
    int big_d = static_cast<int>(num / 2);
    auto r = detail::forced_join_split(g, big_d);
    return r && *r <= big_d;
}

inline bool is_in_g4(const Graph& g) {
    const int n = g.order();
    if (n < 8 || n % 2 != 0) return false;
    auto r = detail::forced_join_split(g, (n - 2) / 2);
    return r && *r <= (n - 8) / 2;
}

inline bool is_in_g5(const Graph& g, int r_required) {
    const int n = g.order();
    if (n < 6 || n % 2 != 0) return false;
    if (r_required < (n - 6) / 2 || r_required > (n - 2) / 2) return false;
    auto r = detail::forced_join_split(g, (n - 2) / 2);
    return r && *r == r_required;
}

// the Hamilton-path exception set EP_n (regular / two cliques / join type)
inline bool is_in_ep(const Graph& g) {
    const int n = g.order();
    if (n >= 2) {
        auto comps = component_masks(g);
        if (comps.size() == 2) {
            bool both_complete = true;
            for (std::uint64_t c : comps) {
                int size = std::popcount(c);
                for (std::uint64_t m = c; m; m &= m - 1)
                    if (std::popcount(g.neighbors(std::countr_zero(m)) & c) != size - 1)
                        both_complete = false;
            }
            if (both_complete) return true;
        }
    }
    if (n < 2 || n % 2 != 0) return false;
    auto r = detail::forced_join_split(g, n / 2 - 1);
    return r && *r <= n / 2 - 1;
}

// ---- names (CLI / report strings) ----------------------------------------

inline std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::HStar: return "hstar";
        case FamilyId::GStar: return "gstar";
        case FamilyId::G1: return "g1";
        case FamilyId::G2: return "g2";
        case FamilyId::G3: return "g3";
        case FamilyId::G4: return "g4";
        case FamilyId::G5: return "g5";
        case FamilyId::EPa: return "ep-regular";
        case FamilyId::EPb: return "ep-two-cliques";
        case FamilyId::EPc: return "ep-join";
        case FamilyId::Regular: return "regular";
    }
    return "?";
}

inline std::optional<FamilyId> family_from_name(const std::string& s) {
    for (FamilyId id : {FamilyId::HStar, FamilyId::GStar, FamilyId::G1, FamilyId::G2, FamilyId::G3,
                        FamilyId::G4, FamilyId::G5, FamilyId::EPa, FamilyId::EPb, FamilyId::EPc,
                        FamilyId::Regular})
        if (family_name(id) == s) return id;
    return std::nullopt;
}

}  // namespace spectree
