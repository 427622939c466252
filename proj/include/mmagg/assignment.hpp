#pragma once

#include <vector>

namespace mmagg {

/// Minimum-cost perfect matching of rows to columns of a square cost matrix
/// (Hungarian method with potentials, O(n^3)).
struct Assignment {
    /// column_of[row] = assigned column.
    std::vector<int> column_of;
    double cost = 0.0;
};

Assignment min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace mmagg
