#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "holopt/trace_io.hpp"

using namespace holopt;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("fmt_double is shortest round-trip", "[trace_io]") {
    REQUIRE(fmt_double(0.0) == "0");
    REQUIRE(fmt_double(0.5) == "0.5");
    REQUIRE(fmt_double(-0.5) == "-0.5");
    REQUIRE(fmt_double(0.1) == "0.1");
    REQUIRE(fmt_double(0.7071067811865476) == "0.7071067811865476");

    for (double v : {0.7071067811865476, 1.0 / 3.0, -3.5, 12345.678, 1e-17,
                     4.298279727294168}) {
        REQUIRE(std::stod(fmt_double(v)) == v);
    }
}

TEST_CASE("join_vector uses semicolons", "[trace_io]") {
    REQUIRE(join_vector({0.5, 0.25}) == "0.5;0.25");
    REQUIRE(join_vector({1.0}) == "1");
    REQUIRE(join_vector({}) == "");
}

TEST_CASE("CSV golden rows for a three-step constant run", "[trace_io]") {
    AlgoParams p;
    p.n = 1;
    p.T = 3;
    p.c0 = 1.0;
    const Trace trace = optimize(constant_zero(1), p);

    std::ostringstream os;
    write_trace_csv(os, trace, 0.0);
    const std::vector<std::string> lines = lines_of(os.str());

    REQUIRE(lines.size() == 4);
    REQUIRE(lines[0] ==
            "t,score,code,x_theta,x_omega,f,v,best_f,simple_regret,avg_regret");
    REQUIRE(lines[1] == "1,NA,,0.5,0.5,0,0.5,0,0,0");
    REQUIRE(lines[2] == "2,-0.5,1,0.75,0.75,0,0.25,0,0,0");
    REQUIRE(lines[3] == "3,-0.5,0,0.25,0.25,0,0.25,0,0,0");
}

TEST_CASE("CSV without a known minimum leaves regrets NA", "[trace_io]") {
    AlgoParams p;
    p.n = 2;
    p.T = 2;
    p.c0 = 1.0;
    const Trace trace = optimize(constant_zero(2), p);

    std::ostringstream os;
    write_trace_csv(os, trace, std::nullopt);
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& l = lines[i];
        REQUIRE(l.substr(l.size() - 6) == ",NA,NA");
    }
    // vectors are semicolon-joined inside one comma field
    REQUIRE(lines[1].find("0.7071067811865476;0.5") != std::string::npos);
}

TEST_CASE("JSONL rows mirror the CSV with null for NA", "[trace_io]") {
    AlgoParams p;
    p.n = 1;
    p.T = 2;
    p.c0 = 1.0;
    const Trace trace = optimize(constant_zero(1), p);

    std::ostringstream os;
    write_trace_jsonl(os, trace, 0.0);
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 2);
    REQUIRE(lines[0] ==
            "{\"t\":1,\"score\":null,\"code\":\"\",\"x_theta\":[0.5],"
            "\"x_omega\":[0.5],\"f\":0,\"v\":[0.5],\"best_f\":0,"
            "\"simple_regret\":0,\"avg_regret\":0}");
    REQUIRE(lines[1] ==
            "{\"t\":2,\"score\":-0.5,\"code\":\"1\",\"x_theta\":[0.75],"
            "\"x_omega\":[0.75],\"f\":0,\"v\":[0.25],\"best_f\":0,"
            "\"simple_regret\":0,\"avg_regret\":0}");

    std::ostringstream os2;
    write_trace_jsonl(os2, trace, std::nullopt);
    REQUIRE(lines_of(os2.str())[0].find("\"simple_regret\":null,\"avg_regret\":null") !=
            std::string::npos);
}

TEST_CASE("baseline records serialize score and v as missing", "[trace_io]") {
    Trace t;
    t.dom = wrap_domain(1);
    QueryRecord r;
    r.t = 1;
    r.x_theta = {0.25};
    r.x_omega = {0.25};
    r.value = 1.5;
    t.records.push_back(r);
    t.best_prefix.push_back(1.5);

    std::ostringstream os;
    write_trace_csv(os, t, std::nullopt);
    REQUIRE(lines_of(os.str())[1] == "1,NA,,0.25,0.25,1.5,NA,1.5,NA,NA");

    std::ostringstream js;
    write_trace_jsonl(js, t, std::nullopt);
    REQUIRE(lines_of(js.str())[0].find("\"v\":null") != std::string::npos);
}

TEST_CASE("report serialization", "[trace_io]") {
    std::vector<BoundReport> rows;
    rows.push_back(BoundReport{"norm_sum[n=2]", 2.5, 5.9, true, 3.4});
    rows.push_back(BoundReport{"a\"b\\", 2.0, 1.0, false, -1.0});

    std::ostringstream os;
    write_reports_jsonl(os, rows);
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines[0] ==
            "{\"name\":\"norm_sum[n=2]\",\"measured\":2.5,\"bound\":5.9,"
            "\"satisfied\":true,\"slack\":3.4}");
    REQUIRE(lines[1] ==
            "{\"name\":\"a\\\"b\\\\\",\"measured\":2,\"bound\":1,"
            "\"satisfied\":false,\"slack\":-1}");

    std::ostringstream table;
    render_reports_table(table, rows);
    const std::string text = table.str();
    REQUIRE(text.find("name") != std::string::npos);
    REQUIRE(text.find("norm_sum[n=2]") != std::string::npos);
    REQUIRE(text.find("yes") != std::string::npos);
    REQUIRE(text.find("NO") != std::string::npos);
}

TEST_CASE("identical runs produce identical bytes", "[trace_io]") {
    AlgoParams p;
    p.n = 2;
    p.T = 64;
    p.c0 = compute_C0(1.0, 1.0, 0.5, 2, 64);
    const ObjectiveSpec obj = holder_norm(2, 1.0, 0.5, {0.5, 0.5});

    std::ostringstream a, b;
    write_trace_csv(a, optimize(obj, p), 0.0);
    write_trace_csv(b, optimize(obj, p), 0.0);
    REQUIRE(a.str() == b.str());
}
