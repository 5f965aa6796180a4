#pragma once
// The desk-scale invariant battery behind `verify`: every row measures one
// quantity and compares it against its bound. A SplitRule hook lets the CLI
// inject the wrong split axis to demonstrate that the battery catches it (the
// partition rows stay green, the edge-norm sum rows go red).

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holopt/analysis.hpp"
#include "holopt/baselines.hpp"
#include "holopt/objective.hpp"
#include "holopt/optimizer.hpp"

namespace holopt {

struct BatteryOptions {
    std::optional<double> tolerance; // overrides every row's default slack
    SplitRule rule = SplitRule::largest_edge;
};

namespace detail {

inline double row_tol(const BatteryOptions& opt, double fallback) {
    return opt.tolerance.value_or(fallback);
}

inline Trace battery_run(const ObjectiveSpec& obj, std::uint64_t T, double c0,
                         SplitRule rule, double offset = 0.0) {
    AlgoParams params;
    params.n = obj.n;
    params.T = T;
    params.c0 = c0;
    params.score_offset = offset;
    params.split_rule = rule;
    return optimize(obj, params);
}

inline std::vector<HyperRect> frontier_rects(const Trace& trace) {
    std::vector<HyperRect> rects;
    rects.reserve(trace.final_frontier.size());
    for (const Candidate& c : trace.final_frontier) rects.push_back(c.rect);
    return rects;
}

// Largest relative deviation of child/parent edge-norm ratios from 2^{-1/n}.
inline double max_norm_decay_error(const Trace& trace) {
    const double expected = std::exp2(-1.0 / trace.dom.n);
    std::map<BinaryCode, double> norms;
    for (const QueryRecord& rec : trace.records) norms[rec.code] = edge_norm(rec.edge);
    double worst = 0.0;
    for (const QueryRecord& rec : trace.records) {
        if (rec.code.empty()) continue;
        const auto parent = norms.find(rec.code.substr(0, rec.code.size() - 1));
        if (parent == norms.end()) continue; // cannot happen: parents pop first
        const double ratio = edge_norm(rec.edge) / parent->second;
        worst = std::max(worst, std::abs(ratio - expected) / expected);
    }
    return worst;
}

// Worst prefix ratio of the measured edge-norm sum to its bound. beta = n
// falls back to the exact worst-case (breadth-first) sum.
inline double norm_sum_prefix_ratio(const Trace& trace, double beta) {
    const int n = trace.dom.n;
    const double V = initial_edge_norm(n);
    double sum = 0.0, worst = 0.0;
    std::uint64_t t = 0;
    for (const QueryRecord& rec : trace.records) {
        sum += std::pow(edge_norm(rec.edge), beta);
        ++t;
        const double bound = beta < static_cast<double>(n)
                                 ? vt_sum_bound(beta, V, t, n)
                                 : worst_case_vt_sum(beta, V, t, n);
        worst = std::max(worst, sum / bound);
    }
    return worst;
}

// Worst prefix ratio of the cumulative-regret inequality (eps0 exact).
inline double cumulative_prefix_ratio(const Trace& trace, double C, double alpha,
                                      double C0, double f_min) {
    const double eps0 =
        epsilon0_exact(C0, C, alpha, domain_diameter(trace.dom));
    double lhs = 0.0, sum_v = 0.0, sum_va = 0.0, worst = 0.0;
    std::uint64_t t = 0;
    for (const QueryRecord& rec : trace.records) {
        lhs += rec.value - f_min;
        const double nv = edge_norm(rec.edge);
        sum_v += nv;
        sum_va += std::pow(nv, alpha);
        ++t;
        const double rhs = C0 * trace.dom.theta * sum_v + C * sum_va +
                           static_cast<double>(t) * eps0;
        worst = std::max(worst, lhs / rhs);
    }
    return worst;
}

// Count of queried edge norms that leave the ladder schedule: over T = 2^K - 1
// steps on a constant objective, level i must contribute exactly 2^i norms
// V * 2^{-i/n}.
inline std::uint64_t norm_schedule_mismatches(const Trace& trace) {
    const int n = trace.dom.n;
    const double V = initial_edge_norm(n);
    std::map<int, std::uint64_t> seen; // depth -> count
    std::uint64_t bad = 0;
    for (const QueryRecord& rec : trace.records) {
        const double nv = edge_norm(rec.edge);
        const double depth_f = -std::log2(nv / V) * n;
        const int depth = static_cast<int>(std::lround(depth_f));
        const double expected = V * std::exp2(-static_cast<double>(depth) / n);
        if (std::abs(depth_f - depth) > 1e-6 ||
            std::abs(nv - expected) > 1e-12 * expected) {
            ++bad;
            continue;
        }
        ++seen[depth];
    }
    std::uint64_t remaining = trace.records.size();
    for (int i = 0; remaining > 0; ++i) {
        const std::uint64_t want = std::min(remaining, std::uint64_t{1} << i);
        const auto it = seen.find(i);
        const std::uint64_t got = it == seen.end() ? 0 : it->second;
        if (got != want) bad += want > got ? want - got : got - want;
        remaining -= want;
    }
    return bad;
}

// Queries that differ between an offset-free run and one with every score
// shifted by +12.34 (must be zero: the argmin is offset-invariant).
inline std::uint64_t offset_mismatches(const ObjectiveSpec& obj, std::uint64_t T,
                                       double c0, SplitRule rule) {
    const Trace a = battery_run(obj, T, c0, rule, 0.0);
    const Trace b = battery_run(obj, T, c0, rule, 12.34);
    std::uint64_t bad = 0;
    for (std::uint64_t t = 0; t < T; ++t)
        if (a.records[t].x_omega != b.records[t].x_omega) ++bad;
    return bad;
}

// Sibling pops must carry bitwise-equal scores.
inline std::uint64_t sibling_score_mismatches(const Trace& trace) {
    std::map<BinaryCode, double> by_code;
    for (const QueryRecord& rec : trace.records)
        if (rec.score) by_code[rec.code] = *rec.score;
    std::uint64_t bad = 0;
    for (const auto& [code, s] : by_code) {
        if (code.empty() || code.back() != '1') continue;
        BinaryCode sib = code;
        sib.back() = '0';
        const auto it = by_code.find(sib);
        if (it != by_code.end() && it->second != s) ++bad;
    }
    return bad;
}

// Exact decode replay: worst absolute deviation between recorded rectangles
// and the ones reconstructed from their codes.
inline double roundtrip_error(const Trace& trace, SplitRule rule) {
    double worst = 0.0;
    for (const QueryRecord& rec : trace.records) {
        const HyperRect r = decode(rec.code, trace.dom, rule);
        for (std::size_t i = 0; i < rec.x_theta.size(); ++i) {
            worst = std::max(worst, std::abs(r.center[i] - rec.x_theta[i]));
            worst = std::max(worst, std::abs(r.edge[i] - rec.edge[i]));
        }
    }
    return worst;
}

} // namespace detail

// Build every verification row. Roughly 40 rows; all desk scale (< a few
// seconds total).
inline std::vector<BoundReport> build_battery(const BatteryOptions& opt = {}) {
    using detail::row_tol;
    std::vector<BoundReport> rows;
    const std::vector<ObjectiveSpec> objs = suite();

    // Partition invariant: final frontier tiles Theta (volume + disjointness).
    // Driven by the constant objective: its breadth-first expansion keeps the
    // frontier at depth ~log2(T), where cell geometry is exactly representable.
    // An objective minimized at a representable cell center would drill past
    // the resolution of the double grid and collapse neighboring centers.
    for (int n : {1, 2, 3}) {
        const Trace tr = detail::battery_run(constant_zero(n), 256, 1.0, opt.rule);
        BoundReport rep = verify_partition(detail::frontier_rects(tr),
                                           tr.dom, row_tol(opt, 1e-9));
        rep.name = "partition:n=" + std::to_string(n) + ",T=256";
        rows.push_back(rep);
    }

    // Exact norm decay of every split.
    for (int n : {1, 2, 3}) {
        const ObjectiveSpec obj =
            holder_norm(n, 1.0, 0.5, Point(static_cast<std::size_t>(n), 0.5));
        const Trace tr = detail::battery_run(obj, 2048,
                                             compute_C0(1.0, 1.0, 0.5, n, 2048), opt.rule);
        rows.push_back(make_report("norm_decay:n=" + std::to_string(n) + ",T=2048",
                                   detail::max_norm_decay_error(tr), 1e-12,
                                   row_tol(opt, 0.0)));
    }

    // Edge-norm sum bounds at every prefix, constant objective (worst case)
    // and a holder_norm run; beta = n uses the exact worst-case sum.
    for (int n : {1, 2, 3}) {
        const Trace tr = detail::battery_run(constant_zero(n), 4096, 1.0, opt.rule);
        for (double beta : {0.5, 1.0}) {
            rows.push_back(make_report(
                "norm_sum:n=" + std::to_string(n) + ",beta=" + format_short(beta) +
                    ",obj=constant",
                detail::norm_sum_prefix_ratio(tr, beta), 1.0, row_tol(opt, 1e-12)));
        }
    }
    {
        const ObjectiveSpec obj = holder_norm(2, 1.0, 0.5, {0.5, 0.5});
        const Trace tr = detail::battery_run(obj, 4096,
                                             compute_C0(1.0, 1.0, 0.5, 2, 4096), opt.rule);
        for (double beta : {0.5, 1.0}) {
            rows.push_back(make_report(
                "norm_sum:n=2,beta=" + format_short(beta) + ",obj=holder_norm",
                detail::norm_sum_prefix_ratio(tr, beta), 1.0, row_tol(opt, 1e-12)));
        }
    }

    // Cumulative-regret inequality at every prefix, all suite objectives.
    for (const ObjectiveSpec& obj : objs) {
        const double C0 = compute_C0(1.0, obj.C, obj.alpha, obj.n, 1024);
        const Trace tr = detail::battery_run(obj, 1024, C0, opt.rule);
        rows.push_back(make_report(
            "cumulative:" + obj.name,
            detail::cumulative_prefix_ratio(tr, obj.C, obj.alpha, C0,
                                            *obj.known_min_value),
            1.0, row_tol(opt, 1e-9)));
    }

    // Score-slack constant: exact maximization never exceeds the closed form,
    // and agrees with a dense-grid oracle.
    {
        const double grid[] = {0.1, 0.5, 1.0, 5.0, 10.0};
        double worst_gap = -1e300;
        for (double C0 : grid)
            for (double C : grid)
                for (int a = 1; a <= 9; ++a) {
                    const double alpha = a / 10.0;
                    worst_gap = std::max(worst_gap,
                                         epsilon0_exact(C0, C, alpha, std::sqrt(2.0)) -
                                             epsilon0_bound(C0, C, alpha));
                }
        rows.push_back(make_report("eps0:exact<=closed_form", worst_gap, 0.0,
                                   row_tol(opt, 1e-9)));
        double worst_diff = 0.0;
        for (double C0 : {0.5, 5.0})
            for (double C : {1.0, 10.0})
                for (int a = 1; a <= 9; ++a) {
                    const double alpha = a / 10.0;
                    const double D = std::sqrt(2.0);
                    worst_diff = std::max(
                        worst_diff, std::abs(epsilon0_exact(C0, C, alpha, D) -
                                             epsilon0_grid_oracle(C0, C, alpha, D,
                                                                  100000)));
                }
        rows.push_back(make_report("eps0:oracle_agreement", worst_diff, 1e-6,
                                   row_tol(opt, 0.0)));
    }

    // Binary-code round trip (bitwise, since decode replays the same ops).
    for (int n : {1, 2, 3}) {
        const ObjectiveSpec obj =
            holder_norm(n, 1.0, 0.5, Point(static_cast<std::size_t>(n), 0.5));
        const Trace tr = detail::battery_run(obj, 2048,
                                             compute_C0(1.0, 1.0, 0.5, n, 2048), opt.rule);
        rows.push_back(make_report("roundtrip:n=" + std::to_string(n) + ",T=2048",
                                   detail::roundtrip_error(tr, opt.rule), 0.0,
                                   row_tol(opt, 0.0)));
    }

    // Score-offset invariance on three suite objectives (exact).
    {
        const ObjectiveSpec picks[] = {constant_zero(2),
                                       holder_norm(1, 1.0, 0.5, {0.5}),
                                       holder_norm(2, 1.0, 0.5, {0.5, 0.5})};
        for (const ObjectiveSpec& obj : picks) {
            const double C0 = compute_C0(1.0, obj.C, obj.alpha, obj.n, 1024);
            rows.push_back(make_report(
                "offset_invariance:" + obj.name + ",n=" + std::to_string(obj.n),
                static_cast<double>(detail::offset_mismatches(obj, 1024, C0, opt.rule)),
                0.0, row_tol(opt, 0.0)));
        }
    }

    // Structural exact checks.
    {
        const ObjectiveSpec obj = holder_norm(2, 1.0, 0.5, {0.5, 0.5});
        const Trace tr = detail::battery_run(obj, 512,
                                             compute_C0(1.0, 1.0, 0.5, 2, 512), opt.rule);
        rows.push_back(make_report(
            "sibling_scores:n=2,T=512",
            static_cast<double>(detail::sibling_score_mismatches(tr)), 0.0,
            row_tol(opt, 0.0)));

        const Trace tq = detail::battery_run(obj, 777,
                                             compute_C0(1.0, 1.0, 0.5, 2, 777), opt.rule);
        const double count_err =
            std::abs(static_cast<double>(tq.records.size()) - 777.0) +
            std::abs(static_cast<double>(tq.final_frontier.size()) - 778.0);
        rows.push_back(
            make_report("query_count:n=2,T=777", count_err, 0.0, row_tol(opt, 0.0)));

        std::uint64_t monotone_bad = 0;
        for (std::size_t i = 1; i < tq.best_prefix.size(); ++i)
            if (tq.best_prefix[i] > tq.best_prefix[i - 1]) ++monotone_bad;
        rows.push_back(make_report("best_prefix_monotone:n=2,T=777",
                                   static_cast<double>(monotone_bad), 0.0,
                                   row_tol(opt, 0.0)));

        const RegretReport rr = regrets(tq, *obj.known_min_value);
        const double identity_err =
            std::abs(rr.cumulative - 777.0 * rr.average) /
            std::max(1.0, std::abs(rr.cumulative));
        rows.push_back(make_report("regret_identity:n=2,T=777", identity_err, 1e-12,
                                   row_tol(opt, 0.0)));
    }

    // Depth schedule of queried norms on the constant objective.
    for (int n : {1, 2, 3}) {
        const Trace tr = detail::battery_run(constant_zero(n), 511, 1.0, opt.rule);
        rows.push_back(make_report(
            "norm_schedule:n=" + std::to_string(n) + ",T=511",
            static_cast<double>(detail::norm_schedule_mismatches(tr)), 0.0,
            row_tol(opt, 0.0)));
    }

    // Equality case of the adversarial needle: no query lands in the ball, so
    // every evaluation reads 0 and the average regret equals eps^alpha up to
    // summation rounding.
    {
        const ObjectiveSpec obj = needle(2, 1.0, 0.5, {0.447214, 0.447214}, 0.001);
        const Trace tr = detail::battery_run(obj, 256,
                                             compute_C0(1.0, 1.0, 0.5, 2, 256), opt.rule);
        const RegretReport rr = regrets(tr, *obj.known_min_value);
        rows.push_back(make_report("needle_equality:n=2,eps=0.001",
                                   std::abs(rr.average - std::pow(0.001, 0.5)), 0.0,
                                   row_tol(opt, 1e-12)));
    }

    // Hölder certificate across the whole suite (10^4 random pairs each).
    {
        double worst = -1e300;
        for (const ObjectiveSpec& obj : objs)
            worst = std::max(worst, holder_violation(obj, 10000, 20240601));
        rows.push_back(
            make_report("holder_certificates:suite", worst, 0.0, row_tol(opt, 1e-9)));
    }

    return rows;
}

} // namespace holopt
