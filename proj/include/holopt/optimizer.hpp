#pragma once
// The main query loop: sample the frontier candidate with the lowest score,
// evaluate the objective at its clamped center, split the sampled rectangle,
// and push both halves. The first query is the middle point of Theta and has
// no score. Runs are fully deterministic.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holopt/frontier.hpp"
#include "holopt/geometry.hpp"
#include "holopt/objective.hpp"

namespace holopt {

struct AlgoParams {
    int n = 1;
    std::uint64_t T = 1;            // query budget
    double c0 = 0.0;                // score coefficient
    double score_offset = 0.0;      // constant shift applied to every score
    SplitRule split_rule = SplitRule::largest_edge;
};

// C0 = lambda0 * C * V^{alpha-1} * T^{(1-alpha)/n} with V the root edge norm.
inline double compute_C0(double lambda0, double C, double alpha, int n,
                         std::uint64_t T) {
    if (!(lambda0 > 0.0)) throw std::invalid_argument("compute_C0: lambda0 must be > 0");
    if (!(C > 0.0)) throw std::invalid_argument("compute_C0: C must be > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("compute_C0: alpha must be in (0,1)");
    if (n < 1) throw std::invalid_argument("compute_C0: n must be >= 1");
    if (T < 1) throw std::invalid_argument("compute_C0: T must be >= 1");
    const double V = initial_edge_norm(n);
    return lambda0 * C * std::pow(V, alpha - 1.0) *
           std::pow(static_cast<double>(T), (1.0 - alpha) / n);
}

// Misspecified rule C0 = T^{(1-alpha')/n} for a guessed exponent alpha'.
inline double misspec_C0(double alpha_prime, int n, std::uint64_t T) {
    if (!(alpha_prime > 0.0 && alpha_prime < 1.0))
        throw std::invalid_argument("misspec_C0: alpha' must be in (0,1)");
    if (n < 1) throw std::invalid_argument("misspec_C0: n must be >= 1");
    if (T < 1) throw std::invalid_argument("misspec_C0: T must be >= 1");
    return std::pow(static_cast<double>(T), (1.0 - alpha_prime) / n);
}

struct QueryRecord {
    std::uint64_t t = 0;               // 1-based step index
    std::optional<double> score;       // absent only for the first query
    BinaryCode code;                   // split history ('' = root)
    Point x_theta;                     // sampled center in Theta
    Point x_omega;                     // clamped evaluation point in [0,1]^n
    double value = 0.0;                // objective at x_omega
    EdgeVector edge;                   // edge vector of the sampled rectangle
};

struct Trace {
    DomainSpec dom;
    AlgoParams params;
    std::vector<QueryRecord> records;
    std::vector<double> best_prefix;      // running minima of values
    std::vector<Candidate> final_frontier; // frontier after the last step
};

// Called after each step's pushes, when the frontier again partitions Theta.
using StepObserver = std::function<void(std::uint64_t t, const Frontier&)>;

namespace detail {

inline std::string describe_point(const Point& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    return os.str();
}

} // namespace detail

inline Trace optimize(const ObjectiveSpec& objective, const AlgoParams& params,
                      const StepObserver& observer = {}) {
    if (objective.n != params.n)
        throw std::invalid_argument("optimize: objective dimension != params.n");
    if (params.T < 1) throw std::invalid_argument("optimize: T must be >= 1");
    if (!(params.c0 >= 0.0)) throw std::invalid_argument("optimize: C0 must be >= 0");

    Trace trace;
    trace.dom = wrap_domain(params.n);
    trace.params = params;
    trace.records.reserve(params.T);
    trace.best_prefix.reserve(params.T);

    Frontier frontier;
    double best = std::numeric_limits<double>::infinity();

    const auto sample = [&](const HyperRect& rect, std::optional<double> s,
                            const BinaryCode& code, std::uint64_t t) {
        QueryRecord rec;
        rec.t = t;
        rec.score = s;
        rec.code = code;
        rec.x_theta = rect.center;
        rec.x_omega = project_to_domain(rect.center);
        rec.value = objective.eval(rec.x_omega);
        rec.edge = rect.edge;
        if (!std::isfinite(rec.value))
            throw std::domain_error("objective returned a non-finite value at " +
                                    detail::describe_point(rec.x_omega));
        best = std::min(best, rec.value);
        trace.best_prefix.push_back(best);
        frontier.push_children(rect, code, rec.value, params.c0,
                               params.score_offset, params.split_rule);
        trace.records.push_back(std::move(rec));
        if (observer) observer(t, frontier);
    };

    sample(initial_rect(trace.dom), std::nullopt, BinaryCode{}, 1);
    for (std::uint64_t t = 2; t <= params.T; ++t) {
        Candidate c = frontier.pop_min();
        sample(c.rect, c.score, c.code, t);
    }
    trace.final_frontier = frontier.entries();
    return trace;
}

// Best queried point (in Omega) and value among records 1..t; earliest wins ties.
inline std::pair<Point, double> best_so_far(const Trace& trace, std::uint64_t t) {
    if (t < 1 || t > trace.records.size())
        throw std::invalid_argument("best_so_far: t out of range");
    std::size_t arg = 0;
    for (std::size_t i = 1; i < t; ++i)
        if (trace.records[i].value < trace.records[arg].value) arg = i;
    return {trace.records[arg].x_omega, trace.records[arg].value};
}

} // namespace holopt
