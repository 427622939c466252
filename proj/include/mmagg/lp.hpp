#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "mmagg/rankings.hpp"

namespace mmagg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Minimize c'x subject to row_lower <= A x <= row_upper and var bounds.
/// Equalities use row_lower == row_upper; either side may be infinite.
struct LinearProgram {
    struct Variable {
        double lower = 0.0;
        double upper = kInf;
        double cost = 0.0;
        /// Initial nonbasic value sits at the upper bound instead of the lower one.
        bool start_at_upper = false;
    };
    struct Row {
        std::vector<std::pair<int, double>> terms;
        double lower = -kInf;
        double upper = kInf;
    };

    std::vector<Variable> variables;
    std::vector<Row> rows;

    int add_variable(double lower, double upper, double cost = 0.0, bool start_at_upper = false);
    int add_row(std::vector<std::pair<int, double>> terms, double lower, double upper);

    int num_variables() const { return static_cast<int>(variables.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    /// Largest bound or row violation of x.
    double max_violation(const std::vector<double>& x) const;
    double objective(const std::vector<double>& x) const;
};

struct SolverOptions {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    long max_iterations = 200000;
    /// Pivots between refactorizations of the active-set inverse; 0 picks one from the size.
    int refactor_interval = 0;
    /// Scale of the random bound widening used against degeneracy; 0 disables it.
    double perturbation = 1e-7;
};

struct LpSolution {
    std::vector<double> x;
    double objective = 0.0;
    long iterations = 0;
};

/// Two-phase primal simplex on the active set of a vertex. Throws
/// Infeasible, Unbounded or IterationLimit.
LpSolution solve(const LinearProgram& lp, const SolverOptions& options = {});

/// w[k][x][y] = (weight_k / m_k) * #{members of class k ranking x strictly above y}.
class PairwiseWeights {
public:
    PairwiseWeights() = default;
    PairwiseWeights(int classes, int n) : classes_(classes), n_(n), w_(static_cast<std::size_t>(classes) * n * n, 0.0) {}

    int num_classes() const { return classes_; }
    int size() const { return n_; }
    /// 0-based class and element indices.
    double operator()(int k, int x, int y) const { return w_[(static_cast<std::size_t>(k) * n_ + x) * n_ + y]; }
    double& operator()(int k, int x, int y) { return w_[(static_cast<std::size_t>(k) * n_ + x) * n_ + y]; }

private:
    int classes_ = 0;
    int n_ = 0;
    std::vector<double> w_;
};

PairwiseWeights pairwise_weights(const Instance& inst);

/// t[k] = average number of tied pairs per member of class k.
std::vector<double> tie_mass(const Instance& inst);

/// Dense n x n matrix with 0-based indices.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, double fill = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}
    int size() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

enum class SolutionKind { Pairwise, Positional };

struct FractionalSolution {
    SolutionKind kind = SolutionKind::Pairwise;
    /// Pairwise: pair(x, y) is the fraction of "x before y", 0-based.
    SquareMatrix pair;
    /// Positional: fractional position of each element, 0-based.
    std::vector<double> position;
    double objective = 0.0;
    long iterations = 0;
};

/// Kendall/Kemeny relaxation with u[y][x] eliminated as 1 - u[x][y] (x < y).
///
/// Each unordered triple x < y < z contributes the ranged row
/// 0 <= u[x][y] + u[y][z] - u[x][z] <= 1, which is the pair of cyclic
/// constraints u[x][y] + u[y][z] + u[z][x] >= 1 and u[x][z] + u[z][y] + u[y][x] >= 1.
/// Class k contributes constant_k + sum_{x<y} (w[k][y][x] - w[k][x][y]) u[x][y] <= q,
/// where constant_k = weight_k * T_k / 2 + sum_{x<y} w[k][x][y].
struct KendallProgram {
    LinearProgram lp;
    int n = 0;
    int q_index = 0;
    PairwiseWeights weights;
    std::vector<double> ties;
    std::vector<double> class_weight;
    std::vector<double> class_constant;

    /// Column of u[x][y] for 0-based x < y.
    int pair_index(int x, int y) const { return x * n - x * (x + 1) / 2 + (y - x - 1); }
    /// Class costs weight_k * T_k/2 + sum_{x != y} w[k][x][y] u[y][x] for a full pair matrix.
    std::vector<double> class_costs(const SquareMatrix& u) const;
};

KendallProgram build_kendall_lp(const Instance& inst);

/// min q s.t. (weight_k / m_k) sum_g sum_h e[k][g][h] <= q, e >= |u(h) - sigma_g^k(h)|.
/// u is boxed to [1, n], which leaves the optimum unchanged.
struct FootruleProgram {
    LinearProgram lp;
    int n = 0;
    int q_index = 0;
    Instance instance;
    /// Column of u(h) is h (0-based); e variables follow.
    std::vector<double> class_costs(const std::vector<double>& u) const;
};

FootruleProgram build_footrule_program(const Instance& inst);

FractionalSolution solve(const KendallProgram& program, const SolverOptions& options = {});
FractionalSolution solve(const FootruleProgram& program, const SolverOptions& options = {});

/// Footrule class costs at an arbitrary real position vector (0-based elements).
std::vector<double> footrule_class_costs(const std::vector<double>& u, const Instance& inst);

}  // namespace mmagg
