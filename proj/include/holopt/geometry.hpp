#pragma once
// Domain wrapping, projection, and hyper-rectangle arithmetic.
//
// The search box [0,1]^n is embedded in an enlarged box
// Theta = [0, theta^{n-1}] x ... x [0, theta^0] with theta = 2^{1/n}.
// Every edge vector produced by repeated splitting keeps its components on
// the geometric ladder {theta^{-(m+1)}, ..., theta^{-(m+n)}}, so halving the
// largest component shrinks the Euclidean edge norm by exactly 2^{-1/n}.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace holopt {

using Point = std::vector<double>;
using EdgeVector = std::vector<double>;

// theta^k for theta = 2^{1/n}, computed as exp2(k/n) for reproducibility.
inline double theta_pow(int k, int n) {
    return std::exp2(static_cast<double>(k) / static_cast<double>(n));
}

struct DomainSpec {
    int n = 0;                       // ambient dimension
    double theta = 0.0;              // 2^{1/n}
    std::vector<double> theta_sides; // side lengths theta^{n-1}, ..., theta^0
};

// center/edge pair; the region is {x : |x(i) - center(i)| <= edge(i)}.
struct HyperRect {
    Point center;
    EdgeVector edge;
};

enum class SplitRule {
    largest_edge,  // halve the largest edge component (the real rule)
    smallest_edge, // fault-injection hook: halve the smallest instead
};

struct SplitResult {
    HyperRect plus;  // center shifted +z along the split axis
    HyperRect minus; // center shifted -z
    int axis = 0;    // 1-based split axis
};

inline DomainSpec wrap_domain(int n) {
    if (n < 1) throw std::invalid_argument("wrap_domain: dimension must be >= 1");
    DomainSpec spec;
    spec.n = n;
    spec.theta = theta_pow(1, n);
    spec.theta_sides.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        spec.theta_sides[static_cast<std::size_t>(i)] = theta_pow(n - 1 - i, n);
    return spec;
}

// Root rectangle: center(i) = edge(i) = theta^{-i} (1-based i), covering Theta.
inline HyperRect initial_rect(const DomainSpec& spec) {
    HyperRect r;
    r.center.resize(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i)
        r.center[static_cast<std::size_t>(i)] = theta_pow(-(i + 1), spec.n);
    r.edge = r.center;
    return r;
}

// Euclidean-nearest point of [0,1]^n: componentwise clamp.
inline Point project_to_domain(Point x) {
    for (double& xi : x) xi = std::min(1.0, std::max(0.0, xi));
    return x;
}

inline double edge_norm(const EdgeVector& e) {
    double s = 0.0;
    for (double v : e) s += v * v;
    return std::sqrt(s);
}

// ||{theta^{-1}, ..., theta^{-n}}||, the root edge norm V.
inline double initial_edge_norm(int n) {
    return edge_norm(initial_rect(wrap_domain(n)).edge);
}

inline double rect_volume(const HyperRect& r) {
    double v = 1.0;
    for (double e : r.edge) v *= 2.0 * e;
    return v;
}

// Diameter of Theta (default Delta range for the score-slack computation).
inline double domain_diameter(const DomainSpec& spec) {
    double s = 0.0;
    for (double side : spec.theta_sides) s += side * side;
    return std::sqrt(s);
}

// Halve one edge component and shift the center by +/- half of it.
// Ties on the component pick the lowest axis; exact ladder edges never tie.
inline SplitResult split_rect(const HyperRect& parent,
                              SplitRule rule = SplitRule::largest_edge) {
    const std::size_t n = parent.edge.size();
    std::size_t I = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const bool better = rule == SplitRule::largest_edge
                                ? parent.edge[i] > parent.edge[I]
                                : parent.edge[i] < parent.edge[I];
        if (better) I = i;
    }
    const double z = 0.5 * parent.edge[I];
    SplitResult out;
    out.axis = static_cast<int>(I) + 1;
    out.plus.edge = parent.edge;
    out.plus.edge[I] = z;
    out.minus.edge = out.plus.edge;
    out.plus.center = parent.center;
    out.plus.center[I] += z;
    out.minus.center = parent.center;
    out.minus.center[I] -= z;
    return out;
}

} // namespace holopt
