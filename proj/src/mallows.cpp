#include "mmagg/mallows.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmagg/error.hpp"

namespace mmagg {

namespace {

// j in {0..count-1} with P(j) proportional to phi^j, by inverting the CDF.
int truncated_geometric(double phi, int count, double u) {
    if (phi >= 1.0) return std::min(count - 1, static_cast<int>(u * count));
    const double tail = 1.0 - u * (1.0 - std::pow(phi, count));
    const double j = std::ceil(std::log(tail) / std::log(phi)) - 1.0;
    return std::clamp(static_cast<int>(j), 0, count - 1);
}

}  // namespace

Permutation sample_mallows(const MallowsParams& params, Rng& rng) {
    if (!(params.phi > 0.0 && params.phi <= 1.0))
        throw Error(ErrorCode::InvalidInstance, "Mallows dispersion must lie in (0, 1]");
    const int n = params.reference.size();
    const std::vector<int> ref_order = params.reference.order();

    // Items are named by reference rank; the list is top to bottom.
    std::vector<int> ranked;
    ranked.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const int below = truncated_geometric(params.phi, i, rng.uniform());
        ranked.insert(ranked.end() - below, i);
    }
    std::vector<int> order(n);
    for (int t = 0; t < n; ++t) order[t] = ref_order[ranked[t] - 1];
    return Permutation::from_order(order);
}

Permutation sample_mallows(const MallowsParams& params, std::uint64_t seed) {
    Rng rng(seed);
    return sample_mallows(params, rng);
}

double mallows_normalizer(int n, double phi) {
    double z = 1.0;
    for (int i = 1; i <= n; ++i) z *= phi == 1.0 ? static_cast<double>(i) : (1.0 - std::pow(phi, i)) / (1.0 - phi);
    return z;
}

void TwoLevelConfig::validate() const {
    if (n < 1) throw Error(ErrorCode::InvalidInstance, "n must be positive");
    if (per_class.empty()) throw Error(ErrorCode::InvalidInstance, "at least one class is required");
    for (int m : per_class)
        if (m < 1) throw Error(ErrorCode::InvalidInstance, "class sizes must be positive");
    for (double phi : {phi1, phi2})
        if (!(phi > 0.0 && phi <= 1.0)) throw Error(ErrorCode::InvalidInstance, "dispersions must lie in (0, 1]");
    if (!weights.empty() && weights.size() != per_class.size())
        throw Error(ErrorCode::InvalidInstance, "one weight per class is required");
}

Instance sample_instance(const TwoLevelConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const int classes = static_cast<int>(cfg.per_class.size());
    Rng center_rng(Rng::derive(seed, 0));
    Instance inst;
    inst.n = cfg.n;
    for (int k = 0; k < classes; ++k) {
        const Permutation center = sample_mallows({cfg.phi1, Permutation::identity(cfg.n)}, center_rng);
        Rng member_rng(Rng::derive(seed, static_cast<std::uint64_t>(k) + 1));
        RankingClass cls;
        cls.weight = cfg.weights.empty() ? 1.0 : cfg.weights[k];
        for (int i = 0; i < cfg.per_class[k]; ++i)
            cls.members.push_back(PartialRanking::from_permutation(sample_mallows({cfg.phi2, center}, member_rng)));
        inst.classes.push_back(std::move(cls));
    }
    inst.validate();
    return inst;
}

}  // namespace mmagg
