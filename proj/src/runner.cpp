#include "mmagg/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <thread>

#include "mmagg/error.hpp"
#include "mmagg/random.hpp"

namespace mmagg {

namespace {

struct AlgorithmName {
    Algorithm algo;
    std::string_view name;
};

constexpr AlgorithmName kNames[] = {
    {Algorithm::MmKT, "mmkt"},
    {Algorithm::MmSP, "mmsp"},
    {Algorithm::PickRnd, "pick-rnd"},
    {Algorithm::PickOpt, "pick-opt"},
    {Algorithm::MinPick, "min-pick"},
    {Algorithm::MinMmKT, "min-mmkt"},
    {Algorithm::MinMmSP, "min-mmsp"},
    {Algorithm::PivotBaseline, "pivot-baseline"},
    {Algorithm::MatchingBaseline, "matching-baseline"},
};

}  // namespace

std::string_view to_string(Algorithm a) {
    for (const auto& e : kNames)
        if (e.algo == a) return e.name;
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (const auto& e : kNames)
        if (e.name == name) return e.algo;
    return std::nullopt;
}

DistanceKind distance_for(const Instance& inst, std::string_view family) {
    const bool ties = !inst.all_total();
    if (family == "kt") return ties ? DistanceKind::Kemeny : DistanceKind::KendallTau;
    if (family == "sf") return ties ? DistanceKind::PartialFootrule : DistanceKind::SpearmanFootrule;
    throw Error(ErrorCode::KindMismatch, "unknown distance family '" + std::string(family) + "'");
}

void check_compatible(Algorithm a, DistanceKind d, SetDistanceKind s) {
    const bool pairwise = is_pairwise(d);
    auto fail = [&](const char* why) {
        throw Error(ErrorCode::KindMismatch, std::string(to_string(a)) + " " + why);
    };
    switch (a) {
        case Algorithm::MmKT:
            if (!pairwise) fail("optimizes Kendall tau / Kemeny only");
            if (s != SetDistanceKind::Median) fail("optimizes the median set distance only");
            break;
        case Algorithm::MmSP:
            if (pairwise) fail("optimizes footrule distances only");
            if (s != SetDistanceKind::Median) fail("optimizes the median set distance only");
            break;
        case Algorithm::MinPick:
            if (s != SetDistanceKind::Minimum) fail("optimizes the minimum set distance only");
            break;
        case Algorithm::MinMmKT:
            if (!pairwise) fail("optimizes Kendall tau / Kemeny only");
            if (s != SetDistanceKind::Minimum) fail("optimizes the minimum set distance only");
            break;
        case Algorithm::MinMmSP:
            if (pairwise) fail("optimizes footrule distances only");
            if (s != SetDistanceKind::Minimum) fail("optimizes the minimum set distance only");
            break;
        case Algorithm::PickRnd:
        case Algorithm::PickOpt:
        case Algorithm::PivotBaseline:
        case Algorithm::MatchingBaseline: break;
    }
}

AggregationResult run_algorithm(Algorithm a, const Instance& inst, DistanceKind d, SetDistanceKind s,
                                const RunOptions& options) {
    check_compatible(a, d, s);
    const FootruleRoundingOptions rounding{options.seed, options.deterministic_ties};
    const bool single = inst.num_classes() < 2;
    switch (a) {
        case Algorithm::MmKT: return mmkt_conv(inst, d);
        case Algorithm::MmSP: return mmsp_conv(inst, d, rounding);
        case Algorithm::PickRnd: return pick_rnd_perm(inst, d, s, options.seed);
        case Algorithm::PickOpt: return pick_opt_perm(inst, d, s);
        case Algorithm::MinPick: return single ? pick_opt_perm(inst, d, s) : min_pick_perm(inst, d);
        case Algorithm::MinMmKT: return single ? pick_opt_perm(inst, d, s) : min_mmkt_conv(inst, d);
        case Algorithm::MinMmSP: return single ? pick_opt_perm(inst, d, s) : min_mmsp_conv(inst, d, rounding);
        case Algorithm::PivotBaseline: return median_pivot_baseline(inst, d, s, options.seed);
        case Algorithm::MatchingBaseline: return median_footrule_matching_baseline(inst, d, s);
    }
    throw Error(ErrorCode::KindMismatch, "unknown algorithm");
}

std::vector<Algorithm> benchmark_algorithms(bool footrule, SetDistanceKind s) {
    if (s == SetDistanceKind::Median) {
        if (footrule) return {Algorithm::MmSP, Algorithm::PickRnd, Algorithm::PickOpt, Algorithm::MatchingBaseline};
        return {Algorithm::MmKT, Algorithm::PickRnd, Algorithm::PickOpt, Algorithm::PivotBaseline};
    }
    if (footrule) return {Algorithm::MinMmSP, Algorithm::MinPick, Algorithm::MatchingBaseline};
    return {Algorithm::MinMmKT, Algorithm::MinPick, Algorithm::PivotBaseline};
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& cfg) {
    if (cfg.n < 1 || cfg.classes < 1 || cfg.per_class < 1 || cfg.trials < 1 || cfg.phi1_list.empty())
        throw Error(ErrorCode::InvalidInstance, "benchmark sizes must be positive");
    const auto algos = benchmark_algorithms(cfg.footrule, cfg.setdist);
    const DistanceKind d = cfg.footrule ? DistanceKind::SpearmanFootrule : DistanceKind::KendallTau;
    const std::size_t phis = cfg.phi1_list.size();
    const std::size_t jobs = static_cast<std::size_t>(cfg.trials) * phis;
    std::vector<BenchmarkRow> rows(jobs * algos.size());

    auto run_job = [&](std::size_t job) {
        const int trial = static_cast<int>(job / phis);
        const double phi1 = cfg.phi1_list[job % phis];
        TwoLevelConfig tl;
        tl.n = cfg.n;
        tl.per_class.assign(cfg.classes, cfg.per_class);
        tl.phi1 = phi1;
        tl.phi2 = cfg.phi2;
        const std::uint64_t trial_seed = Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial));
        const Instance inst = sample_instance(tl, trial_seed);
        for (std::size_t a = 0; a < algos.size(); ++a) {
            const RunOptions opts{Rng::derive(trial_seed, 1000 + a), false};
            const auto start = std::chrono::steady_clock::now();
            const AggregationResult r = run_algorithm(algos[a], inst, d, cfg.setdist, opts);
            const auto stop = std::chrono::steady_clock::now();
            rows[job * algos.size() + a] = {trial, phi1, algos[a], r.objective,
                                            cfg.timing ? std::chrono::duration<double>(stop - start).count() : 0.0};
        }
    };

    const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(jobs)));
    if (threads == 1) {
        for (std::size_t j = 0; j < jobs; ++j) run_job(j);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t j; (j = next.fetch_add(1)) < jobs;) {
                try {
                    run_job(j);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<std::vector<SummaryCell>> summarize(const BenchmarkConfig& cfg, const std::vector<BenchmarkRow>& rows) {
    const auto algos = benchmark_algorithms(cfg.footrule, cfg.setdist);
    std::vector<std::vector<SummaryCell>> out(algos.size(), std::vector<SummaryCell>(cfg.phi1_list.size()));
    for (std::size_t a = 0; a < algos.size(); ++a)
        for (std::size_t p = 0; p < cfg.phi1_list.size(); ++p) {
            std::vector<double> values;
            for (const auto& r : rows)
                if (r.algo == algos[a] && r.phi1 == cfg.phi1_list[p]) values.push_back(r.objective);
            if (values.empty()) continue;
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= static_cast<double>(values.size());
            double var = 0.0;
            for (double v : values) var += (v - mean) * (v - mean);
            if (values.size() > 1) var /= static_cast<double>(values.size() - 1);
            out[a][p] = {mean, std::sqrt(var)};
        }
    return out;
}

std::string format_fixed(double v, int precision) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
    return std::string(buf, ptr);
}

void write_benchmark_csv(std::ostream& out, const BenchmarkConfig& cfg, const std::vector<BenchmarkRow>& rows) {
    out << "trial,phi1,algo,objective,seconds\n";
    for (const auto& r : rows)
        out << r.trial << ',' << format_fixed(r.phi1, 3) << ',' << to_string(r.algo) << ','
            << format_fixed(r.objective, 6) << ',' << format_fixed(r.seconds, 6) << '\n';

    const auto algos = benchmark_algorithms(cfg.footrule, cfg.setdist);
    const auto summary = summarize(cfg, rows);
    out << "# summary: mean objective (standard deviation)\n# algo";
    for (double phi : cfg.phi1_list) out << ",phi1=" << format_fixed(phi, 3);
    out << '\n';
    for (std::size_t a = 0; a < algos.size(); ++a) {
        out << "# " << to_string(algos[a]);
        for (const auto& cell : summary[a]) out << ',' << format_fixed(cell.mean, 2) << " (" << format_fixed(cell.stddev, 2) << ')';
        out << '\n';
    }
}

}  // namespace mmagg
