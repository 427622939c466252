#include "mmagg/rankings.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace mmagg;

namespace {

std::vector<int> ranks_of(const Permutation& p) { return {p.ranks().begin(), p.ranks().end()}; }

}  // namespace

TEST(Permutation, FromRanks) {
    EXPECT_EQ(make_permutation({1, 2, 3}), Permutation::identity(3));
    const auto p = make_permutation({2, 1, 3});
    EXPECT_EQ(p.rank(1), 2);
    EXPECT_EQ(p.rank(2), 1);
    EXPECT_EQ(p.rank(3), 3);
}

TEST(Permutation, Errors) {
    EXPECT_CODE(make_permutation({1, 1, 3}), ErrorCode::DuplicateRank);
    EXPECT_CODE(make_permutation({1, 4, 3}), ErrorCode::RankOutOfRange);
    EXPECT_CODE(make_permutation({0, 1, 2}), ErrorCode::RankOutOfRange);
    EXPECT_CODE(Permutation::identity(3).rank(4), ErrorCode::ElementOutOfRange);
}

TEST(Permutation, Inverse) {
    EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
    EXPECT_EQ(ranks_of(inverse(make_permutation({2, 1, 3}))), (std::vector<int>{2, 1, 3}));
    EXPECT_EQ(ranks_of(inverse(make_permutation({2, 3, 1}))), (std::vector<int>{3, 1, 2}));
}

TEST(Permutation, OrderAndReversal) {
    const auto p = make_permutation({3, 1, 2});
    EXPECT_EQ(p.order(), (std::vector<int>{2, 3, 1}));
    const std::vector<int> order{2, 3, 1};
    EXPECT_EQ(Permutation::from_order(order), p);
    EXPECT_EQ(ranks_of(Permutation::reversal(3)), (std::vector<int>{3, 2, 1}));
}

TEST(PartialRanking, Positions) {
    const auto a = PartialRanking::from_buckets({{1, 2}, {3}});
    EXPECT_EQ(a.position(1).value(), 1.5);
    const auto b = PartialRanking::from_buckets({{1}, {2}, {3}});
    EXPECT_EQ(b.position(2).value(), 2.0);
    const auto c = PartialRanking::from_buckets({{1, 2, 3}});
    EXPECT_EQ(c.position(3).value(), 2.0);
    EXPECT_CODE(c.position(4), ErrorCode::ElementOutOfRange);
}

TEST(PartialRanking, InvalidBuckets) {
    EXPECT_CODE(PartialRanking::from_buckets({{1, 2}, {2}}), ErrorCode::InvalidRanking);
    EXPECT_CODE(PartialRanking::from_buckets({{1}, {}, {2}}), ErrorCode::InvalidRanking);
    EXPECT_CODE(PartialRanking::from_buckets({{1}, {3}}), ErrorCode::InvalidRanking);
}

TEST(PartialRanking, TotalConversion) {
    const auto p = make_permutation({2, 3, 1});
    const auto r = PartialRanking::from_permutation(p);
    EXPECT_TRUE(r.is_total());
    EXPECT_EQ(r.to_permutation(), p);
    for (int x = 1; x <= 3; ++x) EXPECT_EQ(r.position(x).value(), p.rank(x));
    EXPECT_CODE(PartialRanking::from_buckets({{1, 2}}).to_permutation(), ErrorCode::KindMismatch);
    EXPECT_EQ(PartialRanking::from_buckets({{1, 2, 3}, {4}}).tied_pairs(), 3);
}

TEST(InstanceValidation, Rejects) {
    Instance empty;
    EXPECT_CODE(empty.validate(), ErrorCode::InvalidInstance);
    const auto id = Permutation::identity(3);
    EXPECT_CODE(make_instance({{id}, {}}, {1.0, 1.0}), ErrorCode::InvalidInstance);
    EXPECT_CODE(make_instance({{id}}, {0.0}), ErrorCode::InvalidInstance);
    EXPECT_CODE(make_instance({{id}, {Permutation::identity(4)}}, {1.0, 1.0}), ErrorCode::InvalidInstance);
    EXPECT_CODE(make_instance({{id}}, {1.0, 2.0}), ErrorCode::InvalidInstance);
}

TEST(InstanceValidation, MaxWeightClasses) {
    const auto id = Permutation::identity(3);
    const auto inst = make_instance({{id}, {id}, {id}}, {2.0, 1.0, 2.0});
    EXPECT_EQ(inst.max_weight(), 2.0);
    EXPECT_EQ(inst.max_weight_classes(), (std::vector<int>{0, 2}));
}

TEST(RankingsProperty, InverseIsInvolution) {
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + static_cast<int>(rng.below(30));
        const auto p = Permutation::from_ranks(oracle::random_ranks(rng, n));
        EXPECT_EQ(inverse(inverse(p)), p);
        const auto q = inverse(p);
        for (int x = 1; x <= n; ++x) EXPECT_EQ(q.rank(p.rank(x)), x);
    }
}

TEST(RankingsProperty, PositionsSumAndMatchHandCount) {
    Rng rng(12);
    for (int t = 0; t < 500; ++t) {
        const int n = 1 + static_cast<int>(rng.below(25));
        const auto buckets = oracle::random_buckets(rng, n);
        const auto r = PartialRanking::from_buckets(buckets);
        const auto expected = oracle::positions(buckets, n);
        double sum = 0.0;
        for (int x = 1; x <= n; ++x) {
            EXPECT_EQ(r.position(x).value(), expected[x - 1]);
            sum += r.position(x).value();
        }
        EXPECT_EQ(sum, n * (n + 1) / 2.0);
    }
}
