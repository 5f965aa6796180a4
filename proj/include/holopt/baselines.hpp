#pragma once
// Reference strategies for regret comparison: the uniform cell-center grid
// (whose average regret stays flat as the budget grows) and seeded uniform
// random search. Both emit the same Trace shape as the optimizer, with no
// frontier bookkeeping.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "holopt/optimizer.hpp"
#include "holopt/rng.hpp"

namespace holopt {

namespace detail {

inline Trace baseline_trace(const ObjectiveSpec& objective, std::uint64_t T) {
    Trace trace;
    trace.dom = wrap_domain(objective.n);
    trace.params.n = objective.n;
    trace.params.T = T;
    trace.params.c0 = 0.0;
    return trace;
}

inline void baseline_record(Trace& trace, const ObjectiveSpec& objective, Point x) {
    QueryRecord rec;
    rec.t = trace.records.size() + 1;
    rec.x_theta = x;
    rec.x_omega = std::move(x);
    rec.value = objective.eval(rec.x_omega);
    if (!std::isfinite(rec.value))
        throw std::domain_error("objective returned a non-finite value at " +
                                describe_point(rec.x_omega));
    const double best = trace.best_prefix.empty()
                            ? rec.value
                            : std::min(trace.best_prefix.back(), rec.value);
    trace.best_prefix.push_back(best);
    trace.records.push_back(std::move(rec));
}

} // namespace detail

// Evaluate the k^n cell centers ((i+1/2)/k per axis) in lexicographic order,
// with k the largest integer such that k^n <= T. Trace length is k^n, not T.
inline Trace grid_search(const ObjectiveSpec& objective, std::uint64_t T) {
    if (T < 1) throw std::invalid_argument("grid_search: T must be >= 1");
    const int n = objective.n;
    std::uint64_t k = 1;
    while (true) {
        std::uint64_t cells = 1;
        bool fits = true;
        for (int i = 0; i < n && fits; ++i) {
            cells *= k + 1;
            if (cells > T) fits = false;
        }
        if (!fits) break;
        ++k;
    }
    Trace trace = detail::baseline_trace(objective, T);
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        Point x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] =
                (static_cast<double>(idx[static_cast<std::size_t>(i)]) + 0.5) /
                static_cast<double>(k);
        detail::baseline_record(trace, objective, std::move(x));
        int axis = n - 1;
        while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == k) {
            idx[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return trace;
}

// T i.i.d. uniform points from the counter-based generator; the same seed
// reproduces the trace bit for bit on any platform.
inline Trace random_search(const ObjectiveSpec& objective, std::uint64_t T,
                           std::uint64_t seed) {
    if (T < 1) throw std::invalid_argument("random_search: T must be >= 1");
    Trace trace = detail::baseline_trace(objective, T);
    SplitMix64 rng(seed);
    for (std::uint64_t t = 0; t < T; ++t) {
        Point x(static_cast<std::size_t>(objective.n));
        for (double& xi : x) xi = rng.next_double();
        detail::baseline_record(trace, objective, std::move(x));
    }
    return trace;
}

} // namespace holopt
