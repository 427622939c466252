#include "mmagg/assignment.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mmagg;

TEST(Assignment, Small) {
    const auto a = min_cost_assignment({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}});
    EXPECT_EQ(a.cost, 5.0);
    EXPECT_EQ(a.column_of, (std::vector<int>{1, 0, 2}));
    EXPECT_EQ(min_cost_assignment({}).cost, 0.0);
}

TEST(AssignmentProperty, MatchesEnumeration) {
    Rng rng(81);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng.below(6));
        std::vector<std::vector<double>> cost(n, std::vector<double>(n));
        for (auto& row : cost)
            for (auto& c : row) c = static_cast<double>(rng.below(20)) - 5.0;
        double best = 1e300;
        for (const auto& r : oracle::all_permutations(n)) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += cost[i][r[i] - 1];
            best = std::min(best, s);
        }
        const auto a = min_cost_assignment(cost);
        EXPECT_DOUBLE_EQ(a.cost, best);
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += cost[i][a.column_of[i]];
        EXPECT_DOUBLE_EQ(s, best);
    }
}
