#pragma once
// Trace and report serialization. All floating-point output uses shortest
// round-trip decimal formatting (never more than 17 significant digits), so
// identical runs produce identical bytes and parsing the file recovers the
// exact doubles.

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "holopt/analysis.hpp"
#include "holopt/optimizer.hpp"

namespace holopt {

inline std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string join_vector(const std::vector<double>& v, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += fmt_double(v[i]);
    }
    return out;
}

inline constexpr const char* kTraceCsvHeader =
    "t,score,code,x_theta,x_omega,f,v,best_f,simple_regret,avg_regret";

// One row per query. Missing values (the first query's score, regrets without
// a known minimum, edge vectors of baseline traces) are the literal NA.
inline void write_trace_csv(std::ostream& os, const Trace& trace,
                            std::optional<double> f_min) {
    os << kTraceCsvHeader << '\n';
    double cumulative = 0.0;
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const QueryRecord& rec = trace.records[i];
        cumulative += rec.value;
        const double t = static_cast<double>(i + 1);
        os << rec.t << ',';
        os << (rec.score ? fmt_double(*rec.score) : "NA") << ',';
        os << rec.code << ',';
        os << join_vector(rec.x_theta) << ',';
        os << join_vector(rec.x_omega) << ',';
        os << fmt_double(rec.value) << ',';
        os << (rec.edge.empty() ? "NA" : join_vector(rec.edge)) << ',';
        os << fmt_double(trace.best_prefix[i]) << ',';
        if (f_min) {
            os << fmt_double(trace.best_prefix[i] - *f_min) << ','
               << fmt_double(cumulative / t - *f_min);
        } else {
            os << "NA,NA";
        }
        os << '\n';
    }
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string json_array(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += fmt_double(v[i]);
    }
    out.push_back(']');
    return out;
}

} // namespace detail

// One JSON object per query, same fields as the CSV (null where the CSV says NA).
inline void write_trace_jsonl(std::ostream& os, const Trace& trace,
                              std::optional<double> f_min) {
    double cumulative = 0.0;
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const QueryRecord& rec = trace.records[i];
        cumulative += rec.value;
        const double t = static_cast<double>(i + 1);
        os << "{\"t\":" << rec.t;
        os << ",\"score\":" << (rec.score ? fmt_double(*rec.score) : "null");
        os << ",\"code\":\"" << detail::json_escape(rec.code) << '"';
        os << ",\"x_theta\":" << detail::json_array(rec.x_theta);
        os << ",\"x_omega\":" << detail::json_array(rec.x_omega);
        os << ",\"f\":" << fmt_double(rec.value);
        os << ",\"v\":" << (rec.edge.empty() ? "null" : detail::json_array(rec.edge));
        os << ",\"best_f\":" << fmt_double(trace.best_prefix[i]);
        if (f_min) {
            os << ",\"simple_regret\":" << fmt_double(trace.best_prefix[i] - *f_min);
            os << ",\"avg_regret\":" << fmt_double(cumulative / t - *f_min);
        } else {
            os << ",\"simple_regret\":null,\"avg_regret\":null";
        }
        os << "}\n";
    }
}

inline void write_reports_jsonl(std::ostream& os,
                                const std::vector<BoundReport>& rows) {
    for (const BoundReport& r : rows) {
        os << "{\"name\":\"" << detail::json_escape(r.name) << '"'
           << ",\"measured\":" << fmt_double(r.measured)
           << ",\"bound\":" << fmt_double(r.bound)
           << ",\"satisfied\":" << (r.satisfied ? "true" : "false")
           << ",\"slack\":" << fmt_double(r.slack) << "}\n";
    }
}

inline void render_reports_table(std::ostream& os,
                                 const std::vector<BoundReport>& rows) {
    std::size_t width = 4;
    for (const BoundReport& r : rows) width = std::max(width, r.name.size());
    os << std::left << std::setw(static_cast<int>(width)) << "name"
       << "  " << std::setw(24) << "measured" << std::setw(24) << "bound"
       << std::setw(10) << "satisfied" << "slack\n";
    for (const BoundReport& r : rows) {
        os << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
           << std::setw(24) << fmt_double(r.measured) << std::setw(24)
           << fmt_double(r.bound) << std::setw(10)
           << (r.satisfied ? "yes" : "NO") << fmt_double(r.slack) << '\n';
    }
}

} // namespace holopt
