#include "mmagg/exact.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace mmagg;

TEST(BruteForce, Examples) {
    const auto p = make_permutation({2, 4, 1, 3});
    const auto single = make_instance({{p}}, {1.0});
    const auto opt = brute_force(single, DistanceKind::KendallTau, SetDistanceKind::Median);
    EXPECT_EQ(opt.ranking, p);
    EXPECT_EQ(opt.value, 0.0);

    const auto gap = make_instance({{Permutation::identity(4)}, {make_permutation({2, 1, 3, 4})}}, {1.0, 1.0});
    EXPECT_EQ(brute_force(gap, DistanceKind::KendallTau, SetDistanceKind::Median).value, 1.0);

    const auto opposite = make_instance({{Permutation::identity(3)}, {Permutation::reversal(3)}}, {1.0, 1.0});
    const auto o = brute_force(opposite, DistanceKind::KendallTau, SetDistanceKind::Median, 8, true);
    EXPECT_EQ(o.value, oracle::optimum(opposite, true, false));
    EXPECT_EQ(o.value, minmax_objective(o.ranking, opposite, DistanceKind::KendallTau, SetDistanceKind::Median));
    EXPECT_FALSE(o.all_optima.empty());
    for (const auto& q : o.all_optima) EXPECT_FALSE(std::lexicographical_compare(q.ranks().begin(), q.ranks().end(),
                                                                                 o.ranking.ranks().begin(),
                                                                                 o.ranking.ranks().end()));
}

TEST(BruteForce, TooLarge) {
    const auto inst = make_instance({{Permutation::identity(9)}}, {1.0});
    EXPECT_CODE(brute_force(inst, DistanceKind::KendallTau, SetDistanceKind::Median), ErrorCode::TooLarge);
    EXPECT_NO_THROW(brute_force(make_instance({{Permutation::identity(4)}}, {1.0}), DistanceKind::KendallTau,
                                SetDistanceKind::Median, 4));
}

TEST(LpGap, Examples) {
    const auto gap = make_instance({{Permutation::identity(4)}, {make_permutation({2, 1, 3, 4})}}, {1.0, 1.0});
    EXPECT_NEAR(relaxation_value(gap, DistanceKind::KendallTau), 0.5, 1e-7);
    EXPECT_NEAR(lp_gap(gap, DistanceKind::KendallTau), 2.0, 1e-6);
    EXPECT_EQ(lp_gap(make_instance({{Permutation::identity(4)}}, {1.0}), DistanceKind::KendallTau), 1.0);
}

TEST(ExactProperty, MatchesOracleAndGapInRange) {
    Rng rng(51);
    for (int t = 0; t < 80; ++t) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto inst = oracle::random_instance(rng, n, 2 + static_cast<int>(rng.below(2)));
        for (bool minimum : {false, true}) {
            const auto s = minimum ? SetDistanceKind::Minimum : SetDistanceKind::Median;
            EXPECT_NEAR(brute_force(inst, DistanceKind::KendallTau, s).value, oracle::optimum(inst, true, minimum), 1e-9);
            EXPECT_NEAR(brute_force(inst, DistanceKind::SpearmanFootrule, s).value,
                        oracle::optimum(inst, false, minimum), 1e-9);
        }
        const double g = lp_gap(inst, DistanceKind::KendallTau);
        EXPECT_GE(g, 1.0 - 1e-6);
        EXPECT_LE(g, 2.0 + 1e-6);
    }
}

TEST(ExactProperty, RelabelingInvariance) {
    Rng rng(52);
    for (int t = 0; t < 40; ++t) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto inst = oracle::random_instance(rng, n, 2);
        const auto relabel = oracle::random_ranks(rng, n);  // element x becomes relabel[x-1]
        Instance moved = inst;
        for (auto& cls : moved.classes)
            for (auto& m : cls.members) {
                auto buckets = m.buckets();
                for (auto& b : buckets)
                    for (int& x : b) x = relabel[x - 1];
                m = PartialRanking::from_buckets(buckets);
            }
        const auto a = brute_force(inst, DistanceKind::KendallTau, SetDistanceKind::Median);
        const auto b = brute_force(moved, DistanceKind::KendallTau, SetDistanceKind::Median);
        EXPECT_EQ(a.value, b.value);
        std::vector<int> image(n);
        for (int x = 1; x <= n; ++x) image[relabel[x - 1] - 1] = a.ranking.rank(x);
        EXPECT_EQ(minmax_objective(make_permutation(image), moved, DistanceKind::KendallTau, SetDistanceKind::Median),
                  b.value);
    }
}
