#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mmagg/aggregators.hpp"
#include "mmagg/mallows.hpp"

namespace mmagg {

enum class Algorithm {
    MmKT,
    MmSP,
    PickRnd,
    PickOpt,
    MinPick,
    MinMmKT,
    MinMmSP,
    PivotBaseline,
    MatchingBaseline,
};

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Chooses the tie-aware variant when the instance has partial rankings.
/// `family` is "kt" or "sf".
DistanceKind distance_for(const Instance& inst, std::string_view family);

/// Throws KindMismatch when the algorithm cannot optimize (d, s).
void check_compatible(Algorithm a, DistanceKind d, SetDistanceKind s);

struct RunOptions {
    std::uint64_t seed = 0;
    bool deterministic_ties = false;
};

/// Runs one algorithm and scores the output under (d, s). Single-class
/// instances fall back to pick_opt_perm for the min-* selection rules.
AggregationResult run_algorithm(Algorithm a, const Instance& inst, DistanceKind d, SetDistanceKind s,
                                const RunOptions& options = {});

/// The algorithms compared for each (distance family, set distance) table.
std::vector<Algorithm> benchmark_algorithms(bool footrule, SetDistanceKind s);

struct BenchmarkConfig {
    int n = 10;
    int classes = 3;
    int per_class = 10;
    std::vector<double> phi1_list{0.5, 0.7, 0.9, 1.0};
    double phi2 = 0.7;
    int trials = 100;
    std::uint64_t seed = 0;
    bool footrule = false;
    SetDistanceKind setdist = SetDistanceKind::Median;
    /// Record wall time per run; off keeps the CSV byte-reproducible.
    bool timing = false;
    int threads = 1;
};

struct BenchmarkRow {
    int trial = 0;
    double phi1 = 0.0;
    Algorithm algo = Algorithm::MmKT;
    double objective = 0.0;
    double seconds = 0.0;
};

/// Rows ordered by (trial, phi1, algorithm). The instance of a trial is seeded
/// by (seed, trial) alone, so every phi1 reuses the same random stream.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& cfg);

struct SummaryCell {
    double mean = 0.0;
    double stddev = 0.0;
};

/// summary[a][p]: statistics of algorithm a at cfg.phi1_list[p].
std::vector<std::vector<SummaryCell>> summarize(const BenchmarkConfig& cfg, const std::vector<BenchmarkRow>& rows);

/// CSV "trial,phi1,algo,objective,seconds" plus a '#'-prefixed summary footer.
void write_benchmark_csv(std::ostream& out, const BenchmarkConfig& cfg, const std::vector<BenchmarkRow>& rows);

std::string format_fixed(double v, int precision = 6);

}  // namespace mmagg
