// holopt command-line tool: run single optimizations, verify the bound
// battery, and sweep budgets for empirical convergence rates.
//
// Exit codes: 0 success; 1 verification found a violated bound; 2 bad
// configuration; 3 the objective returned a non-finite value.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holopt/analysis.hpp"
#include "holopt/baselines.hpp"
#include "holopt/battery.hpp"
#include "holopt/objective.hpp"
#include "holopt/optimizer.hpp"
#include "holopt/trace_io.hpp"

namespace {

struct CommonConfig {
    std::string objective;
    int dim = 1;
    std::uint64_t budget = 256;
    std::optional<double> c0;
    std::optional<double> lambda0;
    double holder_c = 1.0;
    double alpha = 0.5;
    std::vector<double> alpha_prime;
};

// Resolve the score coefficient for one run; enforces a single C0 mode.
double resolve_c0(const CommonConfig& cfg, std::uint64_t T, bool default_lambda0) {
    const int modes = (cfg.c0 ? 1 : 0) + (cfg.lambda0 ? 1 : 0) +
                      (cfg.alpha_prime.empty() ? 0 : 1);
    if (modes > 1)
        throw std::invalid_argument(
            "choose exactly one of --c0, --lambda0, --alpha-prime");
    if (cfg.c0) return *cfg.c0;
    if (cfg.lambda0)
        return holopt::compute_C0(*cfg.lambda0, cfg.holder_c, cfg.alpha, cfg.dim, T);
    if (cfg.alpha_prime.size() == 1)
        return holopt::misspec_C0(cfg.alpha_prime.front(), cfg.dim, T);
    if (default_lambda0)
        return holopt::compute_C0(1.0, cfg.holder_c, cfg.alpha, cfg.dim, T);
    throw std::invalid_argument("choose one of --c0, --lambda0, --alpha-prime");
}

int cmd_run(const CommonConfig& cfg, const std::string& out_path,
            const std::string& format) {
    if (cfg.alpha_prime.size() > 1)
        throw std::invalid_argument("run accepts a single --alpha-prime");
    const holopt::ObjectiveSpec obj = holopt::make_objective(cfg.objective, cfg.dim);
    holopt::AlgoParams params;
    params.n = cfg.dim;
    params.T = cfg.budget;
    params.c0 = resolve_c0(cfg, cfg.budget, false);
    const holopt::Trace trace = holopt::optimize(obj, params);

    std::string path = out_path;
    if (path.empty()) path = format == "jsonl" ? "trace.jsonl" : "trace.csv";
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    if (format == "jsonl")
        holopt::write_trace_jsonl(out, trace, obj.known_min_value);
    else
        holopt::write_trace_csv(out, trace, obj.known_min_value);

    const auto [x, f] = holopt::best_so_far(trace, trace.records.size());
    std::cout << "wrote " << trace.records.size() << " rows to " << path << "\n";
    std::cout << "best point (" << holopt::join_vector(x, ',')
              << ") value " << holopt::fmt_double(f) << "\n";
    if (obj.known_min_value) {
        const holopt::RegretReport rr = holopt::regrets(trace, *obj.known_min_value);
        std::cout << "simple regret " << holopt::fmt_double(rr.simple)
                  << ", average regret " << holopt::fmt_double(rr.average) << "\n";
    }
    return 0;
}

int cmd_verify(std::optional<double> tolerance, bool inject_bad_split,
               const std::string& out_path) {
    holopt::BatteryOptions opt;
    opt.tolerance = tolerance;
    opt.rule = inject_bad_split ? holopt::SplitRule::smallest_edge
                                : holopt::SplitRule::largest_edge;
    const std::vector<holopt::BoundReport> rows = holopt::build_battery(opt);
    holopt::render_reports_table(std::cout, rows);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw std::invalid_argument("cannot open output file '" + out_path + "'");
        holopt::write_reports_jsonl(out, rows);
    }
    int bad = 0;
    for (const holopt::BoundReport& r : rows) {
        if (!r.satisfied) {
            ++bad;
            std::cout << "violated: " << r.name << "\n";
        }
    }
    std::cout << "battery: " << rows.size() - bad << "/" << rows.size()
              << " checks satisfied\n";
    return bad == 0 ? 0 : 1;
}

std::vector<std::uint64_t> bench_budgets() {
    std::vector<std::uint64_t> Ts;
    for (int k = 4; k <= 14; ++k) Ts.push_back(std::uint64_t{1} << k);
    return Ts;
}

struct BenchRow {
    std::string strategy;
    std::string alpha_prime; // "NA" outside the sweep
    std::uint64_t T;
    double simple;
    double average;
};

void print_sweep(std::ostream& os, const std::string& label,
                 const std::vector<std::pair<double, double>>& simple_avg,
                 const std::vector<std::uint64_t>& Ts) {
    std::vector<std::pair<double, double>> fit_pairs;
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        os << label << " T=" << Ts[i]
           << " simple=" << holopt::fmt_double(simple_avg[i].first)
           << " average=" << holopt::fmt_double(simple_avg[i].second) << "\n";
        fit_pairs.emplace_back(static_cast<double>(Ts[i]), simple_avg[i].second);
    }
    try {
        const holopt::RateFit fit = holopt::rate_fit(fit_pairs);
        os << label << " slope(average)=" << holopt::fmt_double(fit.slope)
           << " used=" << fit.used << "/" << fit_pairs.size() << "\n";
        if (fit.used < fit_pairs.size())
            os << label << " warning: nonpositive regret values excluded from fit\n";
    } catch (const std::exception& e) {
        os << label << " slope(average)=NA (" << e.what() << ")\n";
    }
}

int cmd_bench(const CommonConfig& cfg, bool baselines, std::uint64_t seed,
              const std::string& out_path) {
    const holopt::ObjectiveSpec obj = holopt::make_objective(cfg.objective, cfg.dim);
    if (!obj.known_min_value)
        throw std::invalid_argument(
            "bench needs an objective with a known minimum for regret");
    const double f_min = *obj.known_min_value;
    const std::vector<std::uint64_t> Ts = bench_budgets();
    std::vector<BenchRow> table;

    std::cout << "objective " << cfg.objective << " dim " << cfg.dim << "\n";

    std::vector<double> alpha_primes = cfg.alpha_prime;
    if (alpha_primes.empty()) alpha_primes.push_back(-1.0); // tuned-C0 sentinel

    for (double ap : alpha_primes) {
        std::vector<std::pair<double, double>> vals;
        for (std::uint64_t T : Ts) {
            holopt::AlgoParams params;
            params.n = cfg.dim;
            params.T = T;
            params.c0 = ap < 0.0 ? resolve_c0(cfg, T, true)
                                 : holopt::misspec_C0(ap, cfg.dim, T);
            const holopt::Trace trace = holopt::optimize(obj, params);
            const holopt::RegretReport rr = holopt::regrets(trace, f_min);
            vals.emplace_back(rr.simple, rr.average);
            table.push_back({"optimizer",
                             ap < 0.0 ? "NA" : holopt::fmt_double(ap), T, rr.simple,
                             rr.average});
        }
        const std::string label =
            ap < 0.0 ? "optimizer"
                     : "optimizer[alpha'=" + holopt::fmt_double(ap) + "]";
        print_sweep(std::cout, label, vals, Ts);
    }

    if (baselines) {
        std::vector<std::pair<double, double>> grid_vals, rand_vals;
        for (std::uint64_t T : Ts) {
            const holopt::Trace g = holopt::grid_search(obj, T);
            const holopt::RegretReport gr = holopt::regrets(g, f_min);
            grid_vals.emplace_back(gr.simple, gr.average);
            table.push_back({"grid", "NA", T, gr.simple, gr.average});
            const holopt::Trace r = holopt::random_search(obj, T, seed);
            const holopt::RegretReport rr = holopt::regrets(r, f_min);
            rand_vals.emplace_back(rr.simple, rr.average);
            table.push_back({"random", "NA", T, rr.simple, rr.average});
        }
        print_sweep(std::cout, "grid", grid_vals, Ts);
        print_sweep(std::cout, "random", rand_vals, Ts);
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << "strategy,alpha_prime,T,simple_regret,avg_regret\n";
        for (const BenchRow& row : table)
            out << row.strategy << ',' << row.alpha_prime << ',' << row.T << ','
                << holopt::fmt_double(row.simple) << ','
                << holopt::fmt_double(row.average) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hölder-continuous global optimizer and bound-verification harness"};
    app.require_subcommand(1);

    CommonConfig cfg;
    std::string out_path;
    std::string format = "csv";
    std::optional<double> tolerance;
    bool inject_bad_split = false;
    bool baselines = false;
    std::uint64_t seed = 12345;

    CLI::App* run = app.add_subcommand("run", "one optimization run; writes a trace");
    run->add_option("--objective", cfg.objective, "objective, grammar name[:key=value,...]")
        ->required();
    run->add_option("--dim", cfg.dim, "dimension n");
    run->add_option("--budget", cfg.budget, "query budget T")->required();
    run->add_option("--c0", cfg.c0, "explicit score coefficient C0");
    run->add_option("--lambda0", cfg.lambda0, "tuned rule: C0 = lambda0*C*V^(a-1)*T^((1-a)/n)");
    run->add_option("--holder-c", cfg.holder_c, "Hölder constant C for the tuned rule");
    run->add_option("--alpha", cfg.alpha, "Hölder exponent for the tuned rule");
    run->add_option("--alpha-prime", cfg.alpha_prime,
                    "misspecified rule: C0 = T^((1-a')/n)")
        ->delimiter(',');
    run->add_option("--out", out_path, "trace output path (default trace.csv/.jsonl)");
    run->add_option("--format", format, "trace format")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    CLI::App* verify = app.add_subcommand("verify", "run the bound battery");
    verify->add_option("--tolerance", tolerance,
                       "override every check's slack tolerance");
    verify->add_flag("--inject-bad-split", inject_bad_split,
                     "fault hook: split the smallest edge instead of the largest");
    verify->add_option("--out", out_path, "also write the report rows as JSONL");

    CLI::App* bench = app.add_subcommand("bench", "budget sweep T=2^4..2^14 with rate fits");
    bench->add_option("--objective", cfg.objective, "objective, grammar name[:key=value,...]")
        ->required();
    bench->add_option("--dim", cfg.dim, "dimension n");
    bench->add_option("--c0", cfg.c0, "explicit C0, fixed across the sweep");
    bench->add_option("--lambda0", cfg.lambda0,
                      "tuned rule (default: lambda0=1 when no mode is given)");
    bench->add_option("--holder-c", cfg.holder_c, "Hölder constant C for the tuned rule");
    bench->add_option("--alpha", cfg.alpha, "Hölder exponent for the tuned rule");
    bench->add_option("--alpha-prime", cfg.alpha_prime,
                      "comma list of alpha' values to sweep")
        ->delimiter(',');
    bench->add_flag("--baselines", baselines, "also run grid and random search");
    bench->add_option("--seed", seed, "seed for the random-search baseline");
    bench->add_option("--out", out_path, "write the sweep table as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (run->parsed()) return cmd_run(cfg, out_path, format);
        if (verify->parsed()) return cmd_verify(tolerance, inject_bad_split, out_path);
        return cmd_bench(cfg, baselines, seed, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "objective failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
