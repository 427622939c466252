#include "mmagg/aggregators.hpp"

#include <gtest/gtest.h>

#include <set>

#include "mmagg/exact.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace mmagg;

namespace {

const DistanceKind kKT = DistanceKind::KendallTau;
const DistanceKind kSF = DistanceKind::SpearmanFootrule;
const SetDistanceKind kMed = SetDistanceKind::Median;
const SetDistanceKind kMin = SetDistanceKind::Minimum;

Instance two_singletons(std::vector<int> a, std::vector<int> b) {
    return make_instance({{make_permutation(std::move(a))}, {make_permutation(std::move(b))}}, {1.0, 1.0});
}

std::vector<int> ranks_of(const AggregationResult& r) {
    const auto p = r.permutation();
    return {p.ranks().begin(), p.ranks().end()};
}

// Smallest l1 distance from u to any permutation, by enumeration.
double nearest_by_enumeration(const std::vector<double>& u) {
    double best = 1e300;
    for (const auto& r : oracle::all_permutations(static_cast<int>(u.size())))
        best = std::min(best, oracle::l1(u, oracle::as_double(r)));
    return best;
}

}  // namespace

TEST(RoundPairs, HalfGoesToLargerIndex) {
    SquareMatrix u(3, 0.5);
    const auto h = round_pairs(u);
    EXPECT_EQ(h(1, 0), 1.0);
    EXPECT_EQ(h(0, 1), 0.0);
    EXPECT_EQ(h(2, 1), 1.0);
    EXPECT_EQ(h(0, 0), 0.0);
}

TEST(PickRnd, DrawsFromHeaviestClasses) {
    const auto inst = make_instance({{Permutation::identity(4)}, {make_permutation({2, 1, 3, 4}), Permutation::reversal(4)}},
                                    {1.0, 2.0});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = pick_rnd_perm(inst, kKT, kMed, seed);
        EXPECT_EQ(r.chosen_class, 1);
        EXPECT_EQ(r.objective, minmax_objective(r.ranking, inst, kKT, kMed));
        EXPECT_EQ(r.chosen_member, pick_rnd_perm(inst, kKT, kMed, seed).chosen_member);
    }
    const double both = (minmax_objective(make_permutation({2, 1, 3, 4}), inst, kKT, kMed) +
                         minmax_objective(Permutation::reversal(4), inst, kKT, kMed)) /
                        2.0;
    EXPECT_DOUBLE_EQ(pick_rnd_expectation(inst, kKT, kMed), both);
}

TEST(PickOpt, BestCandidateLowestIndexOnTies) {
    const auto inst = two_singletons({1, 2, 3}, {3, 2, 1});
    const auto r = pick_opt_perm(inst, kKT, kMed);
    EXPECT_EQ(r.chosen_class, 0);
    EXPECT_EQ(r.objective, 3.0);
}

TEST(PickOpt, AcceptsTiedMembers) {
    Instance inst;
    inst.n = 3;
    inst.classes.push_back({{PartialRanking::from_buckets({{1, 2}, {3}})}, 1.0});
    inst.classes.push_back({{PartialRanking::from_buckets({{1}, {2}, {3}})}, 1.0});
    const auto r = pick_opt_perm(inst, DistanceKind::Kemeny, kMed);
    EXPECT_EQ(r.objective, 0.5);
    EXPECT_CODE(pick_opt_perm(inst, kKT, kMed), ErrorCode::KindMismatch);
}

TEST(MmKT, GapInstance) {
    const auto r = mmkt_conv(two_singletons({1, 2, 3, 4}, {2, 1, 3, 4}), kKT);
    EXPECT_EQ(r.objective, 1.0);
    ASSERT_TRUE(r.certificate);
    EXPECT_NEAR(*r.certificate, 0.5, 1e-7);
}

TEST(MmKT, IntegralSolutionIsReturned) {
    const auto p = make_permutation({4, 2, 1, 3, 5});
    const auto r = mmkt_conv(make_instance({{p, p}}, {1.0}), kKT);
    EXPECT_EQ(r.permutation(), p);
    EXPECT_EQ(r.objective, 0.0);
}

TEST(MmKT, RejectsFootrule) {
    EXPECT_CODE(mmkt_conv(two_singletons({1, 2}, {2, 1}), kSF), ErrorCode::KindMismatch);
    EXPECT_CODE(mmsp_conv(two_singletons({1, 2}, {2, 1}), kKT), ErrorCode::KindMismatch);
}

TEST(MmKTProperty, PivotRatiosAndLpBound) {
    Rng rng(41);
    for (int t = 0; t < 150; ++t) {
        const int n = 3 + static_cast<int>(rng.below(5));
        const auto inst = oracle::random_instance(rng, n, 2 + static_cast<int>(rng.below(2)), t % 4 == 0);
        const DistanceKind d = inst.all_total() ? kKT : DistanceKind::Kemeny;
        const auto r = mmkt_conv(inst, d);
        for (const auto& step : r.pivots) {
            EXPECT_LE(step.max_ratio, 2.0 + 1e-9);
            for (std::size_t k = 0; k < step.lp_cost.size(); ++k)
                EXPECT_LE(step.rounding_cost[k], 2.0 * step.lp_cost[k] + 1e-9);
        }
        EXPECT_LE(r.objective, 2.0 * *r.certificate + 1e-6);
        EXPECT_NEAR(r.objective, oracle::objective(ranks_of(r), inst, true, false), 1e-9);
    }
}

TEST(MmSP, TwoClassExample) {
    FootruleRoundingOptions rounding;
    rounding.deterministic_ties = true;
    const auto r = mmsp_conv(two_singletons({1, 2, 3}, {2, 1, 3}), kSF, rounding);
    EXPECT_NEAR(*r.certificate, 1.0, 1e-7);
    EXPECT_LE(r.objective, 2.0);
}

TEST(MmSP, SeededTieBreaking) {
    const std::vector<double> u{2.0, 2.0, 2.0, 1.0};
    FootruleRoundingOptions rounding;
    rounding.deterministic_ties = true;
    EXPECT_EQ(order_by_position(u, rounding).order(), (std::vector<int>{4, 1, 2, 3}));
    rounding.deterministic_ties = false;
    std::set<std::vector<int>> seen;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        rounding.seed = seed;
        const auto order = order_by_position(u, rounding).order();
        EXPECT_EQ(order.front(), 4);
        EXPECT_EQ(order, order_by_position(u, rounding).order());
        seen.insert(order);
    }
    EXPECT_GT(seen.size(), 1u);
}

TEST(MmSPProperty, OutputIsNearestPermutation) {
    Rng rng(42);
    for (int t = 0; t < 150; ++t) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto inst = oracle::random_instance(rng, n, 2 + static_cast<int>(rng.below(2)));
        FootruleRoundingOptions rounding;
        rounding.seed = t;
        const auto r = mmsp_conv(inst, kSF, rounding);
        const auto& u = r.relaxation->position;
        const auto out = oracle::as_double(ranks_of(r));
        const double best = nearest_by_enumeration(u);
        EXPECT_NEAR(oracle::l1(u, out), best, 1e-6);
        EXPECT_NEAR(nearest_permutation_l1(u), best, 1e-9);
        EXPECT_LE(r.objective, 2.0 * *r.certificate + 1e-6);
    }
}

TEST(MinPick, Examples) {
    const auto r = min_pick_perm(two_singletons({1, 2, 3}, {3, 2, 1}), kKT);
    EXPECT_EQ(ranks_of(r), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(r.objective, 3.0);

    const auto shared = make_permutation({2, 3, 1});
    const auto inst = make_instance({{Permutation::identity(3), shared}, {shared, Permutation::reversal(3)}}, {1.0, 1.0});
    const auto s = min_pick_perm(inst, kKT);
    EXPECT_EQ(s.permutation(), shared);
    EXPECT_EQ(s.objective, 0.0);

    EXPECT_CODE(min_pick_perm(make_instance({{shared}}, {1.0}), kKT), ErrorCode::SingleClass);
}

TEST(MinWitnesses, KeepsOnlyClosestMembers) {
    const auto id = Permutation::identity(4);
    const auto one = make_permutation({2, 1, 3, 4});
    const auto two = make_permutation({2, 3, 1, 4});
    const auto other = make_permutation({1, 2, 4, 3});
    const auto inst = make_instance({{id}, {one, two}, {one, other}}, {1.0, 1.0, 1.0});
    const auto restricted = restrict_to_min_witnesses(inst, kKT);
    ASSERT_EQ(restricted.num_classes(), 3);
    EXPECT_EQ(restricted.classes[0].members.size(), 1u);
    ASSERT_EQ(restricted.classes[1].members.size(), 1u);
    EXPECT_EQ(restricted.classes[1].members[0].to_permutation(), one);
    EXPECT_EQ(restricted.classes[2].members.size(), 2u);

    const auto pair = two_singletons({1, 2, 3}, {3, 1, 2});
    const auto same = restrict_to_min_witnesses(pair, kKT);
    EXPECT_EQ(same.classes[0].members, pair.classes[0].members);
    EXPECT_EQ(same.classes[1].members, pair.classes[1].members);
}

TEST(MinMmKT, SingletonsReduceToMmKT) {
    const auto inst = two_singletons({1, 2, 3, 4, 5}, {3, 1, 5, 2, 4});
    const auto a = min_mmkt_conv(inst);
    const auto b = mmkt_conv(inst, kKT);
    EXPECT_EQ(a.ranking, b.ranking);
    EXPECT_FALSE(a.certificate);
    EXPECT_EQ(a.objective, minmax_objective(a.ranking, inst, kKT, kMin));
}

TEST(SelectionProperty, MinimumBounds) {
    Rng rng(43);
    for (int t = 0; t < 120; ++t) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto inst = oracle::random_instance(rng, n, 2 + static_cast<int>(rng.below(2)));
        const double w_kt = oracle::optimum(inst, true, true);
        const double w_sf = oracle::optimum(inst, false, true);
        EXPECT_LE(min_mmkt_conv(inst, kKT).objective, 4.0 * w_kt + 1e-6);
        EXPECT_LE(min_mmsp_conv(inst, kSF).objective, 4.0 * w_sf + 1e-6);
        EXPECT_LE(pick_rnd_expectation(inst, kKT, kMed), 2.0 * oracle::optimum(inst, true, false) + 1e-6);
    }
}

TEST(PivotBaseline, Examples) {
    const auto p = make_permutation({3, 1, 4, 2, 5});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(median_pivot_baseline(make_instance({{p}}, {1.0}), kKT, kMed, seed).permutation(), p);
        EXPECT_EQ(median_pivot_baseline(make_instance({{p, p}, {p}}, {1.0, 2.0}), kKT, kMed, seed).permutation(), p);
    }
    const auto inst = make_instance({{Permutation::identity(5)}, {Permutation::reversal(5)}, {p}}, {1, 1, 1});
    EXPECT_EQ(median_pivot_baseline(inst, kKT, kMed, 5).ranking, median_pivot_baseline(inst, kKT, kMed, 5).ranking);
}

TEST(MatchingBaseline, Examples) {
    const auto p = make_permutation({3, 1, 4, 2});
    const auto single = median_footrule_matching_baseline(make_instance({{p}}, {1.0}), kSF, kMed);
    EXPECT_EQ(single.permutation(), p);
    EXPECT_EQ(single.objective, 0.0);

    const auto inst = make_instance({{Permutation::identity(3), Permutation::reversal(3)}}, {1.0});
    const auto r = median_footrule_matching_baseline(inst, kSF, kMed);
    const auto pooled = spearman_footrule(r.permutation(), Permutation::identity(3)) +
                        spearman_footrule(r.permutation(), Permutation::reversal(3));
    EXPECT_EQ(pooled, 4);
}

TEST(MatchingBaseline, CanLoseToMmSP) {
    Rng rng(44);
    bool found = false;
    for (int t = 0; t < 300 && !found; ++t) {
        const auto inst = oracle::random_instance(rng, 5, 3);
        FootruleRoundingOptions rounding;
        rounding.deterministic_ties = true;
        found = median_footrule_matching_baseline(inst, kSF, kMed).objective > mmsp_conv(inst, kSF, rounding).objective;
    }
    EXPECT_TRUE(found);
}
