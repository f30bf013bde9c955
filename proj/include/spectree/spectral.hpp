#pragma once
// Largest eigenvalues of the adjacency matrix A and the signless Laplacian
// Q = D + A, by power iteration per connected component. The iteration runs
// on M + I: for bipartite components A has +rho and -rho as extreme
// eigenvalues and unshifted iteration would oscillate; the shift makes the
// Perron value strictly dominant. Stopping test is the Rayleigh-quotient
// residual ||Mx - rq x|| with unit x, which certifies |lambda_max - rq| <=
// residual once the iterate is in the Perron direction (guaranteed here:
// the start vector is positive).

#include <cmath>
#include <stdexcept>
#include <string>

#include "spectree/graph.hpp"

namespace spectree {

inline constexpr double kSpectralTol = 1e-10;
// Theorem-threshold comparisons use this coarser margin and report a tie
// when a measured value lands closer to the threshold than this.
inline constexpr double kDecisionMargin = 1e-7;

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_value, double residual)
        : std::runtime_error(what), last_value(last_value), residual(residual) {}
    double last_value;
    double residual;
};

struct SpectralSummary {
    double rho = 0.0;
    double q = 0.0;
    double tolerance = kSpectralTol;
    long long iterations_used = 0;
};

namespace detail {

// Largest eigenvalue of A or D+A restricted to the vertices of `comp`.
// `budget` is decremented in place across components of one call.
inline double power_iterate(const Graph& g, std::uint64_t comp, bool signless, double tol,
                            long long& budget, long long& used) {
    int idx[kMaxOrder];
    int cnt = 0;
    for (std::uint64_t m = comp; m; m &= m - 1) idx[cnt++] = std::countr_zero(m);
    if (cnt == 1) return 0.0;

    double row_deg[kMaxOrder];
    std::uint64_t rows[kMaxOrder];
    int pos[kMaxOrder];
    for (int i = 0; i < cnt; ++i) pos[idx[i]] = i;
    for (int i = 0; i < cnt; ++i) {
        rows[i] = g.neighbors(idx[i]) & comp;
        row_deg[i] = static_cast<double>(std::popcount(rows[i]));
    }

    // All-ones start plus a fixed increasing ramp: positive (so the Perron
    // component is present) and identical on every run.
    double x[kMaxOrder];
    double norm = 0.0;
    for (int i = 0; i < cnt; ++i) {
        x[i] = 1.0 + static_cast<double>(i) / 1024.0;
        norm += x[i] * x[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < cnt; ++i) x[i] /= norm;

    double rq = 0.0, res = 0.0;
    double y[kMaxOrder];
    while (budget > 0) {
        --budget;
        ++used;
        // y = (M + I) x with M = A or D + A on the component
        for (int i = 0; i < cnt; ++i) {
            double acc = signless ? (row_deg[i] + 1.0) * x[i] : x[i];
            for (std::uint64_t m = rows[i]; m; m &= m - 1) acc += x[pos[std::countr_zero(m)]];
            y[i] = acc;
        }
        rq = 0.0;
        for (int i = 0; i < cnt; ++i) rq += x[i] * y[i];
        res = 0.0;
        for (int i = 0; i < cnt; ++i) {
            double d = y[i] - rq * x[i];
            res += d * d;
        }
        res = std::sqrt(res);
        if (res <= tol) return rq - 1.0;
        norm = 0.0;
        for (int i = 0; i < cnt; ++i) norm += y[i] * y[i];
        norm = std::sqrt(norm);
        for (int i = 0; i < cnt; ++i) x[i] = y[i] / norm;
    }
    throw ConvergenceError("power iteration did not reach tolerance " + std::to_string(tol) +
                               " within its iteration budget",
                           rq - 1.0, res);
}

inline long long iteration_budget(int n, double tol) {
    return 100LL * std::max(n, 1) * static_cast<long long>(std::ceil(std::log(1.0 / tol)));
}

inline double spectral_radius_impl(const Graph& g, bool signless, double tol, long long* used_out) {
    if (g.order() < 1) throw std::domain_error("spectral radius needs order >= 1");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    long long budget = iteration_budget(g.order(), tol);
    long long used = 0;
    double best = 0.0;
    for (std::uint64_t comp : component_masks(g))
        best = std::max(best, power_iterate(g, comp, signless, tol, budget, used));
    if (used_out) *used_out += used;
    return best;
}

}  // namespace detail

inline double adjacency_spectral_radius(const Graph& g, double tol = kSpectralTol) {
    return detail::spectral_radius_impl(g, false, tol, nullptr);
}

inline double signless_laplacian_spectral_radius(const Graph& g, double tol = kSpectralTol) {
    return detail::spectral_radius_impl(g, true, tol, nullptr);
}

inline SpectralSummary spectral_summary(const Graph& g, double tol = kSpectralTol) {
    SpectralSummary s;
    s.tolerance = tol;
    s.rho = detail::spectral_radius_impl(g, false, tol, &s.iterations_used);
    s.q = detail::spectral_radius_impl(g, true, tol, &s.iterations_used);
    return s;
}

// ---- classical bounds -----------------------------------------------------

struct BoundEntry {
    bool applicable = false;
    double value = 0.0;
    bool equality = false;  // |bound - measured| <= the report's equality margin
};

// The five classical estimates this library leans on, evaluated together:
//   hong_upper        rho <= (t-1 + sqrt((t+1)^2 + 4(2e - nt)))/2   needs delta >= t
//   degree_square_low rho >= sqrt(z/n)            (from z <= n rho^2)
//   edge_geom_lower   rho >= min over edges of sqrt(d(u)d(v))
//   q_upper           q <= 2e/(n-1) + n - 2       connected graphs
//   q_lower           q >= z/e
// For connected graphs the two lower bounds are tight exactly on regular and
// semi-regular graphs, so the report carries those two predicates.
struct BoundReport {
    double rho = 0.0;
    double q = 0.0;
    bool connected = false;
    bool regular = false;
    bool semi_regular = false;  // bipartite with one common degree per side
    BoundEntry hong_upper;
    BoundEntry degree_square_lower;
    BoundEntry edge_geom_lower;
    BoundEntry q_upper;
    BoundEntry q_lower;
};

inline bool is_regular(const Graph& g) {
    const int n = g.order();
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

inline bool is_semi_regular(const Graph& g) {
    BipartitionResult bp = bipartition(g);
    if (!bp.bipartite) return false;
    int d0 = -1, d1 = -1;
    for (int v = 0; v < g.order(); ++v) {
        int& d = (bp.side0 >> v) & 1u ? d0 : d1;
        if (d < 0) d = g.degree(v);
        else if (d != g.degree(v)) return false;
    }
    return true;
}

inline BoundReport classical_bounds(const Graph& g, int t, double tol = kSpectralTol,
                                    double eq_margin = kDecisionMargin) {
    const int n = g.order();
    if (n < 1) throw std::domain_error("classical_bounds needs order >= 1");
    BoundReport r;
    DegreeStats ds = degree_stats(g);
    r.rho = adjacency_spectral_radius(g, tol);
    r.q = signless_laplacian_spectral_radius(g, tol);
    r.connected = is_connected(g);
    r.regular = is_regular(g);
    r.semi_regular = is_semi_regular(g);
    auto near = [&](double a, double b) { return std::fabs(a - b) <= eq_margin; };

    if (ds.min_degree >= t) {
        double disc = static_cast<double>(t + 1) * (t + 1) +
                      4.0 * (2.0 * ds.edge_count - static_cast<double>(n) * t);
        r.hong_upper = {true, (t - 1 + std::sqrt(disc)) / 2.0, false};
        r.hong_upper.equality = near(r.rho, r.hong_upper.value);
    }

    r.degree_square_lower = {true, std::sqrt(static_cast<double>(ds.degree_square_sum) / n), false};
    r.degree_square_lower.equality = near(r.rho, r.degree_square_lower.value);

    if (ds.edge_count >= 1) {
        double best = -1.0;
        for (auto [u, v] : g.edges()) {
            double gm = std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
            if (best < 0.0 || gm < best) best = gm;
        }
        r.edge_geom_lower = {true, best, near(r.rho, best)};

        double ql = static_cast<double>(ds.degree_square_sum) / ds.edge_count;
        r.q_lower = {true, ql, near(r.q, ql)};
    }

    if (r.connected && n >= 2) {
        double qu = 2.0 * ds.edge_count / (n - 1) + n - 2;
        r.q_upper = {true, qu, near(r.q, qu)};
    }
    return r;
}

}  // namespace spectree
