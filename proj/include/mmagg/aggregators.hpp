#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmagg/distances.hpp"
#include "mmagg/lp.hpp"
#include "mmagg/rankings.hpp"

namespace mmagg {

/// One pivot decision of the LP rounding.
struct PivotStep {
    int pivot = 0;  ///< 1-based element
    int subproblem_size = 0;
    /// max_k A_k / B_k at the chosen pivot (0 if A = B = 0, +inf if only B = 0).
    double max_ratio = 0.0;
    /// Class attaining max_ratio (0-based).
    int worst_class = 0;
    std::vector<double> rounding_cost;  ///< A_k per class
    std::vector<double> lp_cost;        ///< B_k per class
};

struct AggregationResult {
    /// A permutation, except for the selection rules on tied inputs.
    PartialRanking ranking;
    double objective = 0.0;
    /// Relaxation optimum bounding the optimal objective from below, when known.
    std::optional<double> certificate;
    std::vector<double> class_costs;
    /// Pivot decisions of mmkt_conv, in recursion order.
    std::vector<PivotStep> pivots;
    /// Fractional optimum used by the LP-based rules.
    std::optional<FractionalSolution> relaxation;
    /// Selection rules: (class, member) that was returned, 0-based.
    int chosen_class = -1;
    int chosen_member = -1;

    Permutation permutation() const { return ranking.to_permutation(); }
};

/// Rounded pair matrix: h(x, y) = [u(x, y) >= 1/2] for x > y, 1 - h(y, x) for x < y.
SquareMatrix round_pairs(const SquareMatrix& u, double tol = 1e-7);

/// Uniform draw from the members of the maximum-weight classes.
AggregationResult pick_rnd_perm(const Instance& inst, DistanceKind d, SetDistanceKind s, std::uint64_t seed);
/// Average objective over every candidate pick_rnd_perm can return.
double pick_rnd_expectation(const Instance& inst, DistanceKind d, SetDistanceKind s);
/// Best member of the maximum-weight classes; ties go to the lowest (class, member).
AggregationResult pick_opt_perm(const Instance& inst, DistanceKind d, SetDistanceKind s);

/// LP relaxation plus deterministic pivot rounding; d is KendallTau or Kemeny.
AggregationResult mmkt_conv(const Instance& inst, DistanceKind d, const SolverOptions& options = {});

/// Rounds a given pair solution; exposed for testing the rounding on its own.
std::vector<PivotStep> pivot_round(const SquareMatrix& u, const PairwiseWeights& w, std::vector<int>& order_out);

struct FootruleRoundingOptions {
    std::uint64_t seed = 0;
    /// Break ties in the fractional positions by element id instead of at random.
    bool deterministic_ties = false;
    /// Positions within this distance count as tied.
    double tie_tol = 1e-7;
};

/// Footrule relaxation then ordering by fractional position; d is SpearmanFootrule or PartialFootrule.
AggregationResult mmsp_conv(const Instance& inst, DistanceKind d, const FootruleRoundingOptions& rounding = {},
                            const SolverOptions& options = {});

/// Elements ordered by ascending position; ties resolved per `rounding`.
Permutation order_by_position(const std::vector<double>& position, const FootruleRoundingOptions& rounding);

/// min over permutations pi of sum_x |u(x) - pi(x)|, through an assignment.
double nearest_permutation_l1(const std::vector<double>& u);

/// Member minimizing max_{j != k} weight_j * min_s d(member, sigma_s^j). Throws SingleClass.
AggregationResult min_pick_perm(const Instance& inst, DistanceKind d);

/// Singleton of the min_pick_perm choice plus, for every other class, its
/// members at minimum distance from that choice.
Instance restrict_to_min_witnesses(const Instance& inst, DistanceKind d);

/// mmkt_conv / mmsp_conv on the restricted instance, scored under the
/// original instance's minimum set distance.
AggregationResult min_mmkt_conv(const Instance& inst, DistanceKind d = DistanceKind::KendallTau,
                                const SolverOptions& options = {});
AggregationResult min_mmsp_conv(const Instance& inst, DistanceKind d = DistanceKind::SpearmanFootrule,
                                const FootruleRoundingOptions& rounding = {}, const SolverOptions& options = {});

/// Pooled random-pivot quicksort on majority comparisons, classes ignored.
AggregationResult median_pivot_baseline(const Instance& inst, DistanceKind d, SetDistanceKind s,
                                        std::uint64_t seed);

/// Pooled footrule median via an element-to-position assignment.
AggregationResult median_footrule_matching_baseline(const Instance& inst, DistanceKind d, SetDistanceKind s);

}  // namespace mmagg
