#pragma once

#include <cstdint>
#include <vector>

#include "mmagg/random.hpp"
#include "mmagg/rankings.hpp"

namespace mmagg {

/// P(sigma) proportional to phi^{kendall_tau(sigma, reference)}, phi in (0, 1].
struct MallowsParams {
    double phi = 1.0;
    Permutation reference;
};

/// Draws by repeated insertion: the i-th reference item is inserted j slots
/// above the bottom with probability proportional to phi^j, j < i, which
/// adds exactly j inversions. This is an exact sampler for the law above.
Permutation sample_mallows(const MallowsParams& params, Rng& rng);
Permutation sample_mallows(const MallowsParams& params, std::uint64_t seed);

/// Normalizer prod_{i=1..n} (1 - phi^i) / (1 - phi).
double mallows_normalizer(int n, double phi);

/// Class centers from Mallows(phi1, identity); class members from Mallows(phi2, center).
struct TwoLevelConfig {
    int n = 10;
    std::vector<int> per_class{10, 10, 10};
    double phi1 = 0.5;
    double phi2 = 0.7;
    /// Empty means every class weighs 1.
    std::vector<double> weights;

    void validate() const;
};

/// Stream 0 of the seed draws the centers; stream k + 1 draws class k's members.
Instance sample_instance(const TwoLevelConfig& cfg, std::uint64_t seed);

}  // namespace mmagg
