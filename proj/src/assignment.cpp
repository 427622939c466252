#include "mmagg/assignment.hpp"

#include <algorithm>
#include <limits>

#include "mmagg/error.hpp"

namespace mmagg {

Assignment min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::SizeMismatch, "assignment costs must be square");
    Assignment out;
    if (n == 0) return out;

    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based arrays; column 0 is the virtual start.
    std::vector<double> row_pot(n + 1, 0.0), col_pot(n + 1, 0.0), min_slack(n + 1);
    std::vector<int> row_of(n + 1, 0), prev(n + 1, 0);
    std::vector<char> used(n + 1);

    for (int i = 1; i <= n; ++i) {
        row_of[0] = i;
        int j0 = 0;
        std::fill(min_slack.begin(), min_slack.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = row_of[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - row_pot[i0] - col_pot[j];
                if (cur < min_slack[j]) {
                    min_slack[j] = cur;
                    prev[j] = j0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    row_pot[row_of[j]] += delta;
                    col_pot[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
        } while (row_of[j0] != 0);
        do {
            const int j1 = prev[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    out.column_of.assign(n, -1);
    for (int j = 1; j <= n; ++j) out.column_of[row_of[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) out.cost += cost[i][out.column_of[i]];
    return out;
}

}  // namespace mmagg
