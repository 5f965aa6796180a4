#pragma once
// Numeric verification of every bound the method guarantees: the score-slack
// constant eps0 (exact maximization and closed-form bound), the geometric
// edge-norm sum bound, the cumulative-regret inequality, the explicit
// three-term rate bound, log-log rate fitting, and the frontier partition
// invariant.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "holopt/optimizer.hpp"

namespace holopt {

struct RegretReport {
    double simple = 0.0;          // best queried value minus f_min
    double average = 0.0;         // mean queried value minus f_min
    double cumulative = 0.0;      // T * average
    std::vector<double> per_step; // instantaneous f_t - f_min
};

inline RegretReport regrets(const Trace& trace, double f_min) {
    if (trace.records.empty()) throw std::invalid_argument("regrets: empty trace");
    RegretReport rep;
    rep.per_step.reserve(trace.records.size());
    double sum = 0.0;
    for (const QueryRecord& rec : trace.records) {
        rep.per_step.push_back(rec.value - f_min);
        sum += rec.value - f_min;
    }
    rep.cumulative = sum;
    rep.average = sum / static_cast<double>(trace.records.size());
    rep.simple = trace.best_prefix.back() - f_min;
    return rep;
}

// Largest value of C*Delta^alpha - C0*Delta over Delta in [0, D], never
// negative. The expression is concave with stationary point
// Delta0 = (C0/(C*alpha))^{1/(alpha-1)}; evaluate there or at D.
inline double epsilon0_exact(double C0, double C, double alpha, double D) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("epsilon0_exact: alpha must be in (0,1)");
    if (!(C >= 0.0) || !(C0 >= 0.0) || !(D > 0.0))
        throw std::invalid_argument("epsilon0_exact: need C >= 0, C0 >= 0, D > 0");
    if (C == 0.0) return 0.0;
    double hat = D;
    if (C0 > 0.0) {
        const double delta0 = std::pow(C0 / (C * alpha), 1.0 / (alpha - 1.0));
        hat = std::min(delta0, D);
    }
    return std::max(0.0, C * std::pow(hat, alpha) - C0 * hat);
}

// Closed-form upper bound C0^{alpha/(alpha-1)} * C^{-1/(alpha-1)}.
inline double epsilon0_bound(double C0, double C, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("epsilon0_bound: alpha must be in (0,1)");
    if (!(C > 0.0) || !(C0 > 0.0))
        throw std::invalid_argument("epsilon0_bound: need C > 0, C0 > 0");
    return std::pow(C0, alpha / (alpha - 1.0)) * std::pow(C, -1.0 / (alpha - 1.0));
}

// Dense-grid maximization of the same expression; reference oracle for
// epsilon0_exact (slightly below the true max by the grid resolution).
inline double epsilon0_grid_oracle(double C0, double C, double alpha, double D,
                                   int points = 1000000) {
    double best = 0.0;
    for (int i = 0; i < points; ++i) {
        const double delta = D * static_cast<double>(i) / (points - 1);
        best = std::max(best, C * std::pow(delta, alpha) - C0 * delta);
    }
    return best;
}

// Geometric bound on sum_t ||v_t||^beta for 0 < beta < n:
// theta^{n-beta}/(theta^{n-beta}-1) * V^beta * T^{(n-beta)/n}.
inline double vt_sum_bound(double beta, double V, std::uint64_t T, int n) {
    if (n < 1) throw std::invalid_argument("vt_sum_bound: n must be >= 1");
    if (!(beta > 0.0 && beta < static_cast<double>(n)))
        throw std::invalid_argument("vt_sum_bound: beta must satisfy 0 < beta < n");
    if (!(V > 0.0) || T < 1) throw std::invalid_argument("vt_sum_bound: need V > 0, T >= 1");
    const double g = std::exp2((static_cast<double>(n) - beta) / n); // theta^{n-beta}
    return g / (g - 1.0) * std::pow(V, beta) *
           std::pow(static_cast<double>(T), (static_cast<double>(n) - beta) / n);
}

// Exact worst case of sum_t ||v_t||^beta: the breadth-first schedule pops
// complete depth levels (2^m rectangles of norm V*2^{-m/n}) before touching
// the next. Valid for any beta > 0, including beta = n where the geometric
// prefactor above degenerates.
inline double worst_case_vt_sum(double beta, double V, std::uint64_t T, int n) {
    if (n < 1 || !(beta > 0.0) || !(V > 0.0) || T < 1)
        throw std::invalid_argument("worst_case_vt_sum: bad arguments");
    const double vb = std::pow(V, beta);
    double total = 0.0;
    std::uint64_t remaining = T;
    for (int m = 0; remaining > 0; ++m) {
        const std::uint64_t level = std::min(remaining, std::uint64_t{1} << m);
        total += static_cast<double>(level) * vb *
                 std::exp2(-beta * static_cast<double>(m) / n);
        remaining -= level;
    }
    return total;
}

struct BoundReport {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    double slack = 0.0; // bound - measured
};

// satisfied <=> measured <= bound + tol, with tol read relative to the bound
// (absolute when the bound is below 1).
inline BoundReport make_report(std::string name, double measured, double bound,
                               double tol) {
    BoundReport rep;
    rep.name = std::move(name);
    rep.measured = measured;
    rep.bound = bound;
    rep.slack = bound - measured;
    rep.satisfied = measured <= bound + tol * std::max(std::abs(bound), 1.0);
    return rep;
}

// Cumulative-regret inequality checked at the full horizon:
//   sum_t (f_t - f_min) <= C0*theta*sum||v_t|| + C*sum||v_t||^alpha + T*eps0.
// Two rows: eps0 from the exact maximization and from the closed-form bound.
inline std::vector<BoundReport> cumulative_regret_bound(const Trace& trace, double C,
                                                        double alpha, double C0,
                                                        double f_min, double D,
                                                        double tol = 1e-9) {
    if (trace.records.empty())
        throw std::invalid_argument("cumulative_regret_bound: empty trace");
    double lhs = 0.0, sum_v = 0.0, sum_va = 0.0;
    for (const QueryRecord& rec : trace.records) {
        lhs += rec.value - f_min;
        const double nv = edge_norm(rec.edge);
        sum_v += nv;
        sum_va += std::pow(nv, alpha);
    }
    const double T = static_cast<double>(trace.records.size());
    const double base = C0 * trace.dom.theta * sum_v + C * sum_va;
    std::vector<BoundReport> rows;
    rows.push_back(make_report("cumulative_regret[eps0=exact]", lhs,
                               base + T * epsilon0_exact(C0, C, alpha, D), tol));
    rows.push_back(make_report("cumulative_regret[eps0=bound]", lhs,
                               base + T * epsilon0_bound(C0, C, alpha), tol));
    return rows;
}

// Explicit three-term cumulative-regret bound under the tuned-C0 rule:
//   C0*theta^n/(theta^{n-1}-1) * V * T^{(n-1)/n}
// + C*theta^{n-alpha}/(theta^{n-alpha}-1) * V^alpha * T^{(n-alpha)/n}
// + C0^{alpha/(alpha-1)} * C^{-1/(alpha-1)} * T.
// At n = 1 the first term's geometric prefactor degenerates (beta = n), so the
// exact worst-case sum replaces it.
inline double regret_rate_bound(double C, double V, double alpha, double lambda0,
                                 int n, std::uint64_t T) {
    if (!(V > 0.0)) throw std::invalid_argument("regret_rate_bound: V must be > 0");
    const double C0 = lambda0 * C * std::pow(V, alpha - 1.0) *
                      std::pow(static_cast<double>(T), (1.0 - alpha) / n);
    const double theta = theta_pow(1, n);
    const double term1 =
        C0 * theta *
        (n > 1 ? vt_sum_bound(1.0, V, T, n) : worst_case_vt_sum(1.0, V, T, n));
    const double term2 = C * vt_sum_bound(alpha, V, T, n);
    const double term3 = static_cast<double>(T) * epsilon0_bound(C0, C, alpha);
    return term1 + term2 + term3;
}

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;   // natural-log units
    std::size_t used = 0;     // pairs that entered the fit
};

// Least squares of log(value) against log(T). Nonpositive values cannot enter
// a log fit and are excluded; `used` reports how many points survived.
inline RateFit rate_fit(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 3) throw std::invalid_argument("rate_fit: need >= 3 pairs");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t m = 0;
    for (const auto& [T, r] : pairs) {
        if (!(r > 0.0) || !(T > 0.0)) continue;
        const double x = std::log(T), y = std::log(r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) throw std::domain_error("rate_fit: fewer than 2 positive pairs");
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    RateFit fit;
    fit.slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / static_cast<double>(m);
    fit.used = m;
    return fit;
}

// Frontier snapshot must tile Theta: volumes sum to 2^{(n-1)/2} and interiors
// are pairwise disjoint. The pairwise scan is O(k^2) and runs only when the
// snapshot has at most `pairwise_limit` entries; adjacent rectangles share
// boundaries, so a relative slack separates touching from true overlap.
inline BoundReport verify_partition(const std::vector<HyperRect>& snapshot,
                                    const DomainSpec& spec, double tol = 1e-9,
                                    std::size_t pairwise_limit = 513) {
    double vol = 0.0;
    for (const HyperRect& r : snapshot) vol += rect_volume(r);
    const double target = std::exp2((spec.n - 1) / 2.0);
    bool disjoint = true;
    if (snapshot.size() <= pairwise_limit) {
        for (std::size_t i = 0; i + 1 < snapshot.size() && disjoint; ++i) {
            for (std::size_t j = i + 1; j < snapshot.size() && disjoint; ++j) {
                bool overlap = true;
                for (int a = 0; a < spec.n && overlap; ++a) {
                    const std::size_t ai = static_cast<std::size_t>(a);
                    const double gap = std::abs(snapshot[i].center[ai] -
                                                snapshot[j].center[ai]);
                    const double touch = snapshot[i].edge[ai] + snapshot[j].edge[ai];
                    if (gap >= touch * (1.0 - 1e-9)) overlap = false;
                }
                if (overlap) disjoint = false;
            }
        }
    }
    BoundReport rep = make_report("partition", vol, target, tol);
    rep.satisfied = disjoint && std::abs(vol - target) <= tol * target;
    return rep;
}

} // namespace holopt
