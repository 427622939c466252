#include "mmagg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "mmagg/error.hpp"
#include "mmagg/exact.hpp"
#include "mmagg/io.hpp"
#include "mmagg/runner.hpp"

namespace mmagg {

namespace {

SetDistanceKind parse_setdist(const std::string& s) {
    return s == "min" ? SetDistanceKind::Minimum : SetDistanceKind::Median;
}

void print_costs(std::ostream& out, const ParsedInstance& parsed, const std::vector<double>& costs) {
    out << "class costs:\n";
    for (std::size_t k = 0; k < costs.size(); ++k)
        out << "  " << parsed.class_labels[k] << " (lambda=" << parsed.instance.classes[k].weight
            << "): " << format_fixed(costs[k], 6) << '\n';
}

int cmd_aggregate(const std::string& file, const std::string& format, const std::string& family,
                  const std::string& setdist, const std::string& algo_name, std::uint64_t seed,
                  bool deterministic_ties, std::ostream& out) {
    const ParsedInstance parsed = read_instance_file(file, format);
    const auto algo = parse_algorithm(algo_name);
    if (!algo) throw Error(ErrorCode::KindMismatch, "unknown algorithm '" + algo_name + "'");
    const DistanceKind d = distance_for(parsed.instance, family);
    const SetDistanceKind s = parse_setdist(setdist);
    const AggregationResult r = run_algorithm(*algo, parsed.instance, d, s, {seed, deterministic_ties});

    out << "algorithm: " << to_string(*algo) << '\n';
    out << "distance: " << to_string(d) << " (" << to_string(s) << ")\n";
    out << "n: " << parsed.instance.n << "  classes: " << parsed.instance.num_classes() << '\n';
    out << "ranking: " << format_ranking(r.ranking, parsed.element_names) << '\n';
    out << "objective: " << format_fixed(r.objective, 6) << '\n';
    print_costs(out, parsed, r.class_costs);
    if (r.certificate) out << "lp certificate: " << format_fixed(*r.certificate, 6) << '\n';
    if (r.chosen_class >= 0)
        out << "selected: class " << parsed.class_labels[r.chosen_class] << " member " << r.chosen_member + 1 << '\n';
    return kExitOk;
}

int cmd_exact(const std::string& file, const std::string& format, const std::string& family,
              const std::string& setdist, int limit, std::ostream& out) {
    const ParsedInstance parsed = read_instance_file(file, format);
    const DistanceKind d = distance_for(parsed.instance, family);
    const SetDistanceKind s = parse_setdist(setdist);
    const OptimalSolution opt = brute_force(parsed.instance, d, s, limit);
    const PartialRanking best = PartialRanking::from_permutation(opt.ranking);

    out << "distance: " << to_string(d) << " (" << to_string(s) << ")\n";
    out << "W: " << format_fixed(opt.value, 6) << '\n';
    out << "optimum: " << format_ranking(best, parsed.element_names) << '\n';
    print_costs(out, parsed, class_costs(best, parsed.instance, d, s));
    if (s == SetDistanceKind::Median) {
        const double relaxed = relaxation_value(parsed.instance, d);
        out << "relaxation: " << format_fixed(relaxed, 6) << '\n';
        out << "lp gap: " << format_fixed(lp_gap(parsed.instance, d, limit), 6) << '\n';
    } else {
        out << "lp gap: n/a (minimum set distance)\n";
    }
    return kExitOk;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        std::istringstream is(item);
        is.imbue(std::locale::classic());
        if (!(is >> v)) throw Error(ErrorCode::KindMismatch, "bad number in list: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiclass MinMax rank aggregation"};
    app.require_subcommand(1);

    std::string file, format = "auto", family = "kt", setdist = "med", algo = "mmkt";
    std::uint64_t seed = 0;
    bool deterministic_ties = false;
    int limit = kDefaultExactLimit;

    auto* agg = app.add_subcommand("aggregate", "Aggregate the rankings of an instance file");
    agg->add_option("file", file, "Instance or gene-order file")->required();
    agg->add_option("--format", format, "auto, instance or gene")->check(CLI::IsMember({"auto", "instance", "gene"}));
    agg->add_option("--distance", family, "kt or sf")->check(CLI::IsMember({"kt", "sf"}));
    agg->add_option("--setdist", setdist, "med or min")->check(CLI::IsMember({"med", "min"}));
    agg->add_option("--algo", algo, "mmkt, mmsp, pick-rnd, pick-opt, min-pick, min-mmkt, min-mmsp, "
                                    "pivot-baseline, matching-baseline");
    agg->add_option("--seed", seed, "Random seed");
    agg->add_flag("--deterministic-ties", deterministic_ties, "Break footrule ties by element id");

    BenchmarkConfig bench;
    std::string phi1_list = "0.5,0.7,0.9,1.0", output;
    std::string bench_family = "kt", bench_setdist = "med";
    auto* bm = app.add_subcommand("benchmark", "Two-level Mallows benchmark, CSV output");
    bm->add_option("--n", bench.n, "Ground-set size");
    bm->add_option("--classes", bench.classes, "Number of classes");
    bm->add_option("--per-class", bench.per_class, "Rankings per class");
    bm->add_option("--phi1-list", phi1_list, "Comma-separated center dispersions");
    bm->add_option("--phi2", bench.phi2, "Member dispersion");
    bm->add_option("--trials", bench.trials, "Trials per dispersion");
    bm->add_option("--seed", bench.seed, "Random seed");
    bm->add_option("--distance", bench_family, "kt or sf")->check(CLI::IsMember({"kt", "sf"}));
    bm->add_option("--setdist", bench_setdist, "med or min")->check(CLI::IsMember({"med", "min"}));
    bm->add_option("--threads", bench.threads, "Worker threads");
    bm->add_flag("--timing", bench.timing, "Fill the seconds column with wall time");
    bm->add_option("--output", output, "Write the CSV here instead of stdout");

    auto* ex = app.add_subcommand("exact", "Exact optimum by enumeration");
    ex->add_option("file", file, "Instance or gene-order file")->required();
    ex->add_option("--format", format, "auto, instance or gene")->check(CLI::IsMember({"auto", "instance", "gene"}));
    ex->add_option("--distance", family, "kt or sf")->check(CLI::IsMember({"kt", "sf"}));
    ex->add_option("--setdist", setdist, "med or min")->check(CLI::IsMember({"med", "min"}));
    ex->add_option("--limit", limit, "Largest n to enumerate");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIncompatible;
    }

    try {
        if (*agg) return cmd_aggregate(file, format, family, setdist, algo, seed, deterministic_ties, out);
        if (*ex) return cmd_exact(file, format, family, setdist, limit, out);
        if (*bm) {
            bench.phi1_list = parse_list(phi1_list);
            bench.footrule = bench_family == "sf";
            bench.setdist = parse_setdist(bench_setdist);
            const auto rows = run_benchmark(bench);
            if (output.empty()) {
                write_benchmark_csv(out, bench, rows);
            } else {
                std::ofstream f(output, std::ios::binary);
                if (!f) throw Error(ErrorCode::ParseError, "cannot write " + output);
                write_benchmark_csv(f, bench, rows);
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::ParseError:
            case ErrorCode::InvalidRanking:
            case ErrorCode::InvalidInstance: return kExitParse;
            case ErrorCode::KindMismatch:
            case ErrorCode::SingleClass: return kExitIncompatible;
            case ErrorCode::TooLarge: return kExitTooLarge;
            default: return kExitFailure;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace mmagg
