#pragma once
// Test objectives with certified Hölder parameters and known minima:
// the norm cone C||x-c||^alpha, the adversarial needle, a multi-basin
// min-of-cones, box rescaling, and the certified default suite.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holopt/geometry.hpp"
#include "holopt/rng.hpp"

namespace holopt {

struct ObjectiveSpec {
    std::string name;
    int n = 0;
    double C = 1.0;      // Hölder constant
    double alpha = 0.5;  // Hölder exponent in (0,1]
    std::function<double(const Point&)> eval;
    std::optional<double> known_min_value;
    std::optional<Point> known_minimizer;
};

inline double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// f(x) = C ||x - c||^alpha, minimum 0 at c.
inline ObjectiveSpec holder_norm(int n, double C, double alpha, Point c) {
    if (n < 1) throw std::invalid_argument("holder_norm: n must be >= 1");
    if (!(C > 0.0)) throw std::invalid_argument("holder_norm: C must be > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("holder_norm: alpha must be in (0,1)");
    if (c.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("holder_norm: center dimension mismatch");
    for (double ci : c)
        if (!(ci >= 0.0 && ci <= 1.0))
            throw std::invalid_argument("holder_norm: center outside [0,1]^n");
    ObjectiveSpec spec;
    spec.name = "holder_norm";
    spec.n = n;
    spec.C = C;
    spec.alpha = alpha;
    spec.eval = [C, alpha, c](const Point& x) {
        return C * std::pow(dist(x, c), alpha);
    };
    spec.known_min_value = 0.0;
    spec.known_minimizer = std::move(c);
    return spec;
}

// Minimax adversary: a Hölder dip of radius eps around x_star, zero outside.
// f(x) = C(||x-x_*||^alpha - eps^alpha) inside the ball, 0 elsewhere;
// minimum -C eps^alpha at x_star, continuous at the ball boundary.
inline ObjectiveSpec needle(int n, double C, double alpha, Point x_star, double eps) {
    if (n < 1) throw std::invalid_argument("needle: n must be >= 1");
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("needle: eps must be in (0,1]");
    if (x_star.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("needle: center dimension mismatch");
    for (double ci : x_star)
        if (!(ci >= 0.0 && ci <= 1.0))
            throw std::invalid_argument("needle: center outside [0,1]^n");
    ObjectiveSpec spec;
    spec.name = "needle";
    spec.n = n;
    spec.C = C;
    spec.alpha = alpha;
    const double depth = std::pow(eps, alpha);
    spec.eval = [C, alpha, x_star, eps, depth](const Point& x) {
        const double d = dist(x, x_star);
        if (d >= eps) return 0.0;
        return C * (std::pow(d, alpha) - depth);
    };
    spec.known_min_value = -C * depth;
    spec.known_minimizer = std::move(x_star);
    return spec;
}

// Default needle center: irrational coordinates 1/sqrt(5) so it never lands
// on a dyadic query center.
inline Point needle_default_center(int n) {
    return Point(static_cast<std::size_t>(n), 1.0 / std::sqrt(5.0));
}

inline ObjectiveSpec constant_zero(int n) {
    ObjectiveSpec spec;
    spec.name = "constant";
    spec.n = n;
    spec.C = 1.0;
    spec.alpha = 0.5;
    spec.eval = [](const Point&) { return 0.0; };
    spec.known_min_value = 0.0;
    spec.known_minimizer = Point(static_cast<std::size_t>(n), 0.0);
    return spec;
}

// min_j C||x - c_j||^alpha over three fixed centers; minimum of Hölder
// functions with a shared (C, alpha) keeps the same certificate.
inline ObjectiveSpec multi_basin() {
    const std::vector<Point> centers = {{0.2, 0.2}, {0.8, 0.3}, {0.5, 0.9}};
    ObjectiveSpec spec;
    spec.name = "multi_basin";
    spec.n = 2;
    spec.C = 1.0;
    spec.alpha = 0.5;
    spec.eval = [centers](const Point& x) {
        double best = std::pow(dist(x, centers[0]), 0.5);
        for (std::size_t j = 1; j < centers.size(); ++j)
            best = std::min(best, std::pow(dist(x, centers[j]), 0.5));
        return best;
    };
    spec.known_min_value = 0.0;
    spec.known_minimizer = centers[0];
    return spec;
}

// Pull an objective on the box [lows, highs] back to the unit cube:
// g(u) = f(lows + u*(highs-lows)); Hölder constant scales by (max side)^alpha.
inline ObjectiveSpec rescale_box(const ObjectiveSpec& inner,
                                 const std::vector<double>& lows,
                                 const std::vector<double>& highs) {
    const std::size_t n = static_cast<std::size_t>(inner.n);
    if (lows.size() != n || highs.size() != n)
        throw std::invalid_argument("rescale_box: bounds dimension mismatch");
    std::vector<double> span(n);
    double max_side = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        span[i] = highs[i] - lows[i];
        if (!(span[i] > 0.0)) throw std::invalid_argument("rescale_box: degenerate side");
        max_side = std::max(max_side, span[i]);
    }
    ObjectiveSpec spec;
    spec.name = inner.name + ":rescaled";
    spec.n = inner.n;
    spec.alpha = inner.alpha;
    spec.C = inner.C * std::pow(max_side, inner.alpha);
    auto f = inner.eval;
    spec.eval = [f, lows, span](const Point& u) {
        Point y(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) y[i] = lows[i] + u[i] * span[i];
        return f(y);
    };
    spec.known_min_value = inner.known_min_value;
    if (inner.known_minimizer) {
        Point u(n);
        for (std::size_t i = 0; i < n; ++i)
            u[i] = ((*inner.known_minimizer)[i] - lows[i]) / span[i];
        spec.known_minimizer = std::move(u);
    }
    return spec;
}

// Largest excess of |f(x)-f(y)| over C||x-y||^alpha on `pairs` random pairs;
// a certified objective stays <= 1e-9.
inline double holder_violation(const ObjectiveSpec& spec, int pairs,
                               std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = static_cast<std::size_t>(spec.n);
    double worst = -1e300;
    Point x(n), y(n);
    for (int p = 0; p < pairs; ++p) {
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.next_double();
        for (std::size_t i = 0; i < n; ++i) y[i] = rng.next_double();
        const double lhs = std::abs(spec.eval(x) - spec.eval(y));
        const double rhs = spec.C * std::pow(dist(x, y), spec.alpha);
        worst = std::max(worst, lhs - rhs);
    }
    return worst;
}

inline std::string format_short(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// The certified default suite: constant-zero, the holder_norm grid
// {1,2,3} x {0.3,0.5,0.8} centered at the box midpoint, two needles, and the
// multi-basin function. Every member carries its known minimum.
inline std::vector<ObjectiveSpec> suite() {
    std::vector<ObjectiveSpec> out;
    out.push_back(constant_zero(2));
    for (int n : {1, 2, 3}) {
        for (double alpha : {0.3, 0.5, 0.8}) {
            ObjectiveSpec spec =
                holder_norm(n, 1.0, alpha, Point(static_cast<std::size_t>(n), 0.5));
            spec.name = "holder_norm:n=" + std::to_string(n) +
                        ",alpha=" + format_short(alpha);
            out.push_back(std::move(spec));
        }
    }
    {
        ObjectiveSpec s1 = needle(1, 1.0, 0.5, needle_default_center(1), 0.05);
        s1.name = "needle:n=1,eps=0.05";
        out.push_back(std::move(s1));
        ObjectiveSpec s2 = needle(2, 1.0, 0.5, needle_default_center(2), 0.1);
        s2.name = "needle:n=2,eps=0.1";
        out.push_back(std::move(s2));
    }
    out.push_back(multi_basin());
    return out;
}

namespace detail {

inline std::vector<std::string> split_str(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value for " + what + ": '" + s + "'");
    }
}

} // namespace detail

// Objective grammar: name[:key=value,...]. Known names: constant,
// holder_norm (keys alpha, C, c), needle (keys alpha, C, eps, c),
// multi_basin, nonfinite (diagnostic fixture that returns NaN).
// Vector values are semicolon-joined; c=center means the box midpoint.
inline ObjectiveSpec make_objective(const std::string& text, int n) {
    const std::size_t colon = text.find(':');
    const std::string name = text.substr(0, colon);
    double C = 1.0, alpha = 0.5, eps = 0.1;
    std::optional<Point> center;
    if (colon != std::string::npos) {
        for (const std::string& kv : detail::split_str(text.substr(colon + 1), ',')) {
            const std::size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("objective parameter without '=': '" + kv + "'");
            const std::string key = kv.substr(0, eq);
            const std::string val = kv.substr(eq + 1);
            if (key == "C") {
                C = detail::parse_double(val, "C");
            } else if (key == "alpha") {
                alpha = detail::parse_double(val, "alpha");
            } else if (key == "eps") {
                eps = detail::parse_double(val, "eps");
            } else if (key == "c") {
                if (val == "center") {
                    center = Point(static_cast<std::size_t>(n), 0.5);
                } else {
                    Point c;
                    for (const std::string& part : detail::split_str(val, ';'))
                        c.push_back(detail::parse_double(part, "c"));
                    center = std::move(c);
                }
            } else {
                throw std::invalid_argument("unknown objective parameter '" + key + "'");
            }
        }
    }
    if (name == "constant") return constant_zero(n);
    if (name == "holder_norm")
        return holder_norm(n, C, alpha,
                           center.value_or(Point(static_cast<std::size_t>(n), 0.5)));
    if (name == "needle")
        return needle(n, C, alpha, center.value_or(needle_default_center(n)), eps);
    if (name == "multi_basin") {
        if (n != 2) throw std::invalid_argument("multi_basin is two-dimensional");
        return multi_basin();
    }
    if (name == "nonfinite") {
        ObjectiveSpec spec = constant_zero(n);
        spec.name = "nonfinite";
        spec.eval = [](const Point&) { return std::nan(""); };
        spec.known_min_value.reset();
        spec.known_minimizer.reset();
        return spec;
    }
    throw std::invalid_argument("unknown objective '" + name + "'");
}

} // namespace holopt
