#pragma once

#include <vector>

#include "mmagg/distances.hpp"
#include "mmagg/lp.hpp"
#include "mmagg/rankings.hpp"

namespace mmagg {

struct OptimalSolution {
    /// Lexicographically smallest optimal rank vector.
    Permutation ranking;
    double value = 0.0;
    /// Every optimal permutation, filled when requested.
    std::vector<Permutation> all_optima;
};

inline constexpr int kDefaultExactLimit = 8;

/// Exact MinMax optimum by enumerating all n! permutations. Throws TooLarge when n > n_limit.
OptimalSolution brute_force(const Instance& inst, DistanceKind d, SetDistanceKind s,
                            int n_limit = kDefaultExactLimit, bool collect_all = false);

/// Relaxation optimum for the median problem: the Kendall LP for pairwise
/// distances, the footrule program otherwise.
double relaxation_value(const Instance& inst, DistanceKind d, const SolverOptions& options = {});

/// Exact median optimum over the relaxation optimum; 1 when both vanish.
double lp_gap(const Instance& inst, DistanceKind d, int n_limit = kDefaultExactLimit);

}  // namespace mmagg
