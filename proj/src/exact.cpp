#include "mmagg/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mmagg/error.hpp"

namespace mmagg {

OptimalSolution brute_force(const Instance& inst, DistanceKind d, SetDistanceKind s, int n_limit,
                            bool collect_all) {
    inst.validate();
    if (inst.n > n_limit)
        throw Error(ErrorCode::TooLarge,
                    "n = " + std::to_string(inst.n) + " exceeds the enumeration limit " + std::to_string(n_limit));

    std::vector<int> ranks(inst.n);
    std::iota(ranks.begin(), ranks.end(), 1);
    OptimalSolution best;
    best.value = std::numeric_limits<double>::infinity();
    do {
        const Permutation p = Permutation::from_ranks(ranks);
        const double value = minmax_objective(p, inst, d, s);
        if (value < best.value) {
            best.value = value;
            best.ranking = p;
            if (collect_all) best.all_optima.clear();
        }
        if (collect_all && value == best.value) best.all_optima.push_back(p);
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return best;
}

double relaxation_value(const Instance& inst, DistanceKind d, const SolverOptions& options) {
    if (is_pairwise(d)) return solve(build_kendall_lp(inst), options).objective;
    return solve(build_footrule_program(inst), options).objective;
}

double lp_gap(const Instance& inst, DistanceKind d, int n_limit) {
    const double exact = brute_force(inst, d, SetDistanceKind::Median, n_limit).value;
    const double relaxed = relaxation_value(inst, d);
    constexpr double eps = 1e-9;
    if (relaxed <= eps) return exact <= eps ? 1.0 : std::numeric_limits<double>::infinity();
    return exact / relaxed;
}

}  // namespace mmagg
