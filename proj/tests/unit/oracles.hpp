#pragma once

// Slow, direct reference implementations used to check the library.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mmagg/random.hpp"
#include "mmagg/rankings.hpp"

namespace oracle {

using Ranks = std::vector<int>;

inline std::vector<Ranks> all_permutations(int n) {
    Ranks r(n);
    std::iota(r.begin(), r.end(), 1);
    std::vector<Ranks> out;
    do out.push_back(r);
    while (std::next_permutation(r.begin(), r.end()));
    return out;
}

inline long kendall(const Ranks& a, const Ranks& b) {
    long d = 0;
    const int n = static_cast<int>(a.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if ((a[x] - a[y]) * (b[x] - b[y]) < 0) ++d;
    return d;
}

inline long footrule(const Ranks& a, const Ranks& b) {
    long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

// Fractional positions of a bucket order, counted by hand.
inline std::vector<double> positions(const std::vector<std::vector<int>>& buckets, int n) {
    std::vector<double> pos(n, 0.0);
    int above = 0;
    for (const auto& b : buckets) {
        for (int x : b) pos[x - 1] = above + (static_cast<double>(b.size()) + 1.0) / 2.0;
        above += static_cast<int>(b.size());
    }
    return pos;
}

inline double kemeny(const std::vector<double>& p, const std::vector<double>& q) {
    double d = 0.0;
    const int n = static_cast<int>(p.size());
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const double a = p[x] - p[y], b = q[x] - q[y];
            if (a * b < 0)
                d += 1.0;
            else if ((a == 0) != (b == 0))
                d += 0.5;
        }
    return d;
}

inline double l1(const std::vector<double>& p, const std::vector<double>& q) {
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
    return d;
}

inline std::vector<double> as_double(const Ranks& r) { return {r.begin(), r.end()}; }

inline std::vector<double> member_positions(const mmagg::PartialRanking& r) {
    return positions(r.buckets(), r.size());
}

// MinMax objective of a permutation given as ranks, median or minimum set distance.
inline double objective(const Ranks& ranks, const mmagg::Instance& inst, bool pairwise, bool minimum) {
    const auto p = as_double(ranks);
    double worst = 0.0;
    for (const auto& cls : inst.classes) {
        double agg = minimum ? 1e300 : 0.0;
        for (const auto& m : cls.members) {
            const auto q = member_positions(m);
            const double d = pairwise ? kemeny(p, q) : l1(p, q);
            agg = minimum ? std::min(agg, d) : agg + d;
        }
        if (!minimum) agg /= static_cast<double>(cls.members.size());
        worst = std::max(worst, cls.weight * agg);
    }
    return worst;
}

inline double optimum(const mmagg::Instance& inst, bool pairwise, bool minimum) {
    double best = 1e300;
    for (const auto& r : all_permutations(inst.n)) best = std::min(best, objective(r, inst, pairwise, minimum));
    return best;
}

inline Ranks random_ranks(mmagg::Rng& rng, int n) {
    Ranks r(n);
    std::iota(r.begin(), r.end(), 1);
    rng.shuffle(std::span<int>(r));
    return r;
}

inline std::vector<std::vector<int>> random_buckets(mmagg::Rng& rng, int n) {
    Ranks order(n);
    std::iota(order.begin(), order.end(), 1);
    rng.shuffle(std::span<int>(order));
    std::vector<std::vector<int>> buckets;
    for (int x : order) {
        if (buckets.empty() || rng.uniform() < 0.6)
            buckets.push_back({x});
        else
            buckets.back().push_back(x);
    }
    return buckets;
}

inline mmagg::Instance random_instance(mmagg::Rng& rng, int n, int classes, bool partial = false) {
    static const double kWeights[] = {0.5, 1.0, 2.0};
    mmagg::Instance inst;
    inst.n = n;
    for (int k = 0; k < classes; ++k) {
        mmagg::RankingClass cls;
        cls.weight = kWeights[rng.below(3)];
        const int m = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < m; ++i) {
            if (partial)
                cls.members.push_back(mmagg::PartialRanking::from_buckets(random_buckets(rng, n)));
            else
                cls.members.push_back(mmagg::PartialRanking::from_permutation(
                    mmagg::Permutation::from_ranks(random_ranks(rng, n))));
        }
        inst.classes.push_back(std::move(cls));
    }
    return inst;
}

}  // namespace oracle
