#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "mmagg/error.hpp"
#include "mmagg/lp.hpp"
#include "mmagg/random.hpp"

namespace mmagg {

int LinearProgram::add_variable(double lower, double upper, double cost, bool start_at_upper) {
    variables.push_back({lower, upper, cost, start_at_upper});
    return num_variables() - 1;
}

int LinearProgram::add_row(std::vector<std::pair<int, double>> terms, double lower, double upper) {
    rows.push_back({std::move(terms), lower, upper});
    return num_rows() - 1;
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
    double worst = 0.0;
    for (int j = 0; j < num_variables(); ++j) {
        worst = std::max(worst, variables[j].lower - x[j]);
        worst = std::max(worst, x[j] - variables[j].upper);
    }
    for (const auto& row : rows) {
        double activity = 0.0;
        for (auto [j, a] : row.terms) activity += a * x[j];
        worst = std::max(worst, row.lower - activity);
        worst = std::max(worst, activity - row.upper);
    }
    return worst;
}

double LinearProgram::objective(const std::vector<double>& x) const {
    double z = 0.0;
    for (int j = 0; j < num_variables(); ++j) z += variables[j].cost * x[j];
    return z;
}

namespace {

// Primal simplex that walks between vertices. A vertex is described by nv
// active constraints (variable bounds or row bounds) whose normals form the
// square matrix N; x solves N x = b. The solver keeps N^{-1} explicitly,
// which is cheap because nv is much smaller than the number of rows.
class ActiveSetSimplex {
public:
    ActiveSetSimplex(const LinearProgram& lp, const SolverOptions& options)
        : lp_(lp), opt_(options), nv_(lp.num_variables()), nr_(lp.num_rows()) {
        const int total = nv_ + nr_;
        lo_.resize(total);
        hi_.resize(total);
        for (int j = 0; j < nv_; ++j) {
            lo_[j] = lp.variables[j].lower;
            hi_[j] = lp.variables[j].upper;
        }
        for (int i = 0; i < nr_; ++i) {
            lo_[nv_ + i] = lp.rows[i].lower;
            hi_[nv_ + i] = lp.rows[i].upper;
            for (auto [j, a] : lp.rows[i].terms)
                if (j < 0 || j >= nv_) throw Error(ErrorCode::InvalidInstance, "row references unknown variable");
        }
        for (int c = 0; c < total; ++c)
            if (lo_[c] > hi_[c]) throw Error(ErrorCode::Infeasible, "empty bound range");
        orig_lo_ = lo_;
        orig_hi_ = hi_;
        cost_.resize(nv_);
        for (int j = 0; j < nv_; ++j) cost_[j] = lp.variables[j].cost;

        if (opt_.perturbation > 0) {
            Rng rng(0x5eed);
            for (int c = 0; c < total; ++c) {
                if (lo_[c] == hi_[c]) continue;
                const double a = opt_.perturbation * (1.0 + rng.uniform());
                const double b = opt_.perturbation * (1.0 + rng.uniform());
                if (std::isfinite(lo_[c])) lo_[c] -= a * (1.0 + std::abs(lo_[c]));
                if (std::isfinite(hi_[c])) hi_[c] += b * (1.0 + std::abs(hi_[c]));
            }
        }

        // Start with every variable on a bound.
        slot_of_.assign(total, -1);
        active_.resize(nv_);
        target_.resize(nv_);
        for (int j = 0; j < nv_; ++j) {
            const auto& v = lp.variables[j];
            double t = 0.0;
            if (v.start_at_upper && std::isfinite(hi_[j]))
                t = hi_[j];
            else if (std::isfinite(lo_[j]))
                t = lo_[j];
            else if (std::isfinite(hi_[j]))
                t = hi_[j];
            active_[j] = j;
            target_[j] = t;
            slot_of_[j] = j;
        }
        binv_.assign(static_cast<std::size_t>(nv_) * nv_, 0.0);
        for (int j = 0; j < nv_; ++j) col(j)[j] = 1.0;
        interval_ = opt_.refactor_interval > 0 ? opt_.refactor_interval : std::max(64, nv_ / 2);
        recompute_point();
    }

    LpSolution run() {
        long iterations = 0;
        bool perturbed = opt_.perturbation > 0;
        while (true) {
            iterate(iterations);
            if (!perturbed) break;
            // Restore the true bounds on the same active set and clean up.
            perturbed = false;
            lo_ = orig_lo_;
            hi_ = orig_hi_;
            for (int i = 0; i < nv_; ++i) target_[i] = snap(active_[i], target_[i]);
            refactor();
        }

        LpSolution sol;
        sol.x.resize(nv_);
        for (int j = 0; j < nv_; ++j) sol.x[j] = std::clamp(x_[j], lo_[j], hi_[j]);
        sol.objective = lp_.objective(sol.x);
        sol.iterations = iterations;
        return sol;
    }

private:
    double* col(int i) { return &binv_[static_cast<std::size_t>(i) * nv_]; }
    const double* col(int i) const { return &binv_[static_cast<std::size_t>(i) * nv_]; }

    // Value of constraint c at the current point.
    double value(int c) const { return c < nv_ ? x_[c] : act_[c - nv_]; }

    // Bound of c nearest to v, or v itself for a constraint without bounds.
    double snap(int c, double v) const {
        const bool fl = std::isfinite(lo_[c]), fh = std::isfinite(hi_[c]);
        if (fl && fh) return std::abs(v - lo_[c]) <= std::abs(v - hi_[c]) ? lo_[c] : hi_[c];
        if (fl) return lo_[c];
        if (fh) return hi_[c];
        return v;
    }

    // Adds a * (normal of constraint c) to the dense vector g.
    void add_normal(int c, double a, std::vector<double>& g) const {
        if (c < nv_) {
            g[c] += a;
            return;
        }
        for (auto [j, coef] : lp_.rows[c - nv_].terms) g[j] += a * coef;
    }

    bool infeasible(int c, double tol) const {
        const double v = value(c);
        return v < lo_[c] - tol || v > hi_[c] + tol;
    }

    void iterate(long& iterations) {
        const double ftol = opt_.feasibility_tol;
        const double otol = opt_.optimality_tol;
        std::vector<double> g(nv_), y(nv_), dx(nv_), rate(nr_);
        int since_refactor = 0;
        int degenerate_run = 0;
        bool bland = false;

        while (true) {
            if (iterations >= opt_.max_iterations)
                throw Error(ErrorCode::IterationLimit, std::to_string(iterations) + " simplex iterations");

            // Gradient: sum of infeasibilities in phase one, else the cost.
            std::fill(g.begin(), g.end(), 0.0);
            bool phase1 = false;
            for (int c = 0; c < nv_ + nr_; ++c) {
                if (slot_of_[c] >= 0) continue;
                const double v = value(c);
                if (v < lo_[c] - ftol) {
                    add_normal(c, -1.0, g);
                    phase1 = true;
                } else if (v > hi_[c] + ftol) {
                    add_normal(c, 1.0, g);
                    phase1 = true;
                }
            }
            if (!phase1) g = cost_;

            // y[i]: rate of change of the objective when constraint i rises.
            for (int i = 0; i < nv_; ++i) {
                const double* ci = col(i);
                double s = 0.0;
                for (int j = 0; j < nv_; ++j) s += g[j] * ci[j];
                y[i] = s;
            }

            int leave = -1;
            int dir = 0;
            double best = 0.0;
            for (int i = 0; i < nv_; ++i) {
                const int c = active_[i];
                if (lo_[c] == hi_[c]) continue;
                int cand = 0;
                const bool at_lo = std::isfinite(lo_[c]) && target_[i] == lo_[c];
                const bool at_hi = std::isfinite(hi_[c]) && target_[i] == hi_[c];
                if (y[i] < -otol && !at_hi) cand = 1;
                else if (y[i] > otol && !at_lo) cand = -1;
                if (cand == 0) continue;
                if (bland) {
                    if (leave < 0 || c < active_[leave]) {
                        leave = i;
                        dir = cand;
                    }
                    continue;
                }
                double norm = 0.0;
                const double* ci = col(i);
                for (int j = 0; j < nv_; ++j) norm += ci[j] * ci[j];
                const double score = y[i] * y[i] / norm;
                if (score > best) {
                    best = score;
                    leave = i;
                    dir = cand;
                }
            }

            if (leave < 0) {
                if (since_refactor > 0) {
                    refactor();
                    since_refactor = 0;
                    continue;
                }
                if (phase1) throw Error(ErrorCode::Infeasible, "no feasible point");
                return;
            }

            const double* cl = col(leave);
            for (int j = 0; j < nv_; ++j) dx[j] = dir * cl[j];
            for (int r = 0; r < nr_; ++r) {
                double s = 0.0;
                for (auto [j, a] : lp_.rows[r].terms) s += a * dx[j];
                rate[r] = s;
            }

            const int leaving = active_[leave];
            slot_of_[leaving] = -1;
            const auto [enter, step, enter_target] = ratio_test(dx, rate, phase1, bland);
            if (enter < 0) {
                slot_of_[leaving] = leave;
                if (phase1) throw Error(ErrorCode::Infeasible, "phase one failed to make progress");
                throw Error(ErrorCode::Unbounded, "objective decreases without limit");
            }

            for (int j = 0; j < nv_; ++j) x_[j] += step * dx[j];
            for (int r = 0; r < nr_; ++r) act_[r] += step * rate[r];

            replace(leave, enter, enter_target);
            ++iterations;
            ++since_refactor;
            if (step <= 1e-12) {
                if (++degenerate_run > 50) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }
            if (since_refactor >= interval_) {
                refactor();
                since_refactor = 0;
            }
        }
    }

    struct Step {
        int enter;
        double step;
        double target;
    };

    // Bound at which constraint c blocks when its value moves at rate rho,
    // or NaN if it never does.
    double blocking_bound(int c, double rho, bool phase1) const {
        const double v = value(c);
        const double tol = opt_.feasibility_tol;
        if (rho > 0) {
            if (phase1 && v < lo_[c] - tol) return lo_[c];
            if (v > hi_[c] + tol) return std::nan("");
            return std::isfinite(hi_[c]) ? hi_[c] : std::nan("");
        }
        if (phase1 && v > hi_[c] + tol) return hi_[c];
        if (v < lo_[c] - tol) return std::nan("");
        return std::isfinite(lo_[c]) ? lo_[c] : std::nan("");
    }

    template <typename F>
    void for_each_candidate(const std::vector<double>& dx, const std::vector<double>& rate, F&& f) const {
        constexpr double kPivotTol = 1e-9;
        for (int c = 0; c < nv_ + nr_; ++c) {
            if (slot_of_[c] >= 0) continue;
            const double rho = c < nv_ ? dx[c] : rate[c - nv_];
            if (std::abs(rho) <= kPivotTol) continue;
            f(c, rho);
        }
    }

    Step ratio_test(const std::vector<double>& dx, const std::vector<double>& rate, bool phase1, bool bland) const {
        const double tol = opt_.feasibility_tol;
        if (bland) {
            Step best{-1, kInf, 0.0};
            for_each_candidate(dx, rate, [&](int c, double rho) {
                const double bound = blocking_bound(c, rho, phase1);
                if (std::isnan(bound)) return;
                const double t = std::max(0.0, (bound - value(c)) / rho);
                if (t < best.step) best = {c, t, bound};
            });
            return best;
        }

        // Harris: relaxed step first, then the largest rate under it.
        double t_relaxed = kInf;
        for_each_candidate(dx, rate, [&](int c, double rho) {
            const double bound = blocking_bound(c, rho, phase1);
            if (std::isnan(bound)) return;
            const double slack = rho > 0 ? tol : -tol;
            t_relaxed = std::min(t_relaxed, (bound + slack - value(c)) / rho);
        });
        if (!std::isfinite(t_relaxed)) return {-1, kInf, 0.0};

        Step best{-1, 0.0, 0.0};
        double best_rate = 0.0;
        for_each_candidate(dx, rate, [&](int c, double rho) {
            const double bound = blocking_bound(c, rho, phase1);
            if (std::isnan(bound)) return;
            const double t = (bound - value(c)) / rho;
            if (t <= t_relaxed && std::abs(rho) > best_rate) {
                best_rate = std::abs(rho);
                best = {c, std::max(0.0, t), bound};
            }
        });
        return best;
    }

    // Swaps the constraint in slot i for c held at target t (rank-one update).
    void replace(int i, int c, double t) {
        std::vector<double> w(nv_, 0.0);
        if (c < nv_) {
            for (int k = 0; k < nv_; ++k) w[k] = col(k)[c];
        } else {
            for (auto [j, a] : lp_.rows[c - nv_].terms)
                for (int k = 0; k < nv_; ++k) w[k] += a * col(k)[j];
        }
        double* ci = col(i);
        const double p = w[i];
        for (int j = 0; j < nv_; ++j) ci[j] /= p;
        for (int k = 0; k < nv_; ++k) {
            if (k == i || w[k] == 0.0) continue;
            double* ck = col(k);
            const double f = w[k];
            for (int j = 0; j < nv_; ++j) ck[j] -= f * ci[j];
        }
        active_[i] = c;
        target_[i] = t;
        slot_of_[c] = i;
    }

    void refactor() {
        Eigen::MatrixXd n = Eigen::MatrixXd::Zero(nv_, nv_);
        for (int i = 0; i < nv_; ++i) {
            const int c = active_[i];
            if (c < nv_)
                n(i, c) = 1.0;
            else
                for (auto [j, a] : lp_.rows[c - nv_].terms) n(i, j) += a;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(n);
        const Eigen::MatrixXd inv = lu.inverse();
        if (!inv.allFinite()) throw Error(ErrorCode::IterationLimit, "singular active set");
        for (int i = 0; i < nv_; ++i)
            for (int j = 0; j < nv_; ++j) col(i)[j] = inv(j, i);
        recompute_point();
    }

    void recompute_point() {
        x_.assign(nv_, 0.0);
        for (int i = 0; i < nv_; ++i) {
            if (target_[i] == 0.0) continue;
            const double* ci = col(i);
            for (int j = 0; j < nv_; ++j) x_[j] += target_[i] * ci[j];
        }
        act_.assign(nr_, 0.0);
        for (int r = 0; r < nr_; ++r) {
            double s = 0.0;
            for (auto [j, a] : lp_.rows[r].terms) s += a * x_[j];
            act_[r] = s;
        }
    }

    const LinearProgram& lp_;
    SolverOptions opt_;
    int nv_;
    int nr_;
    int interval_ = 64;
    std::vector<double> lo_, hi_, orig_lo_, orig_hi_, cost_;
    // Constraint ids: j < nv is the bound of variable j, nv + r is row r.
    std::vector<int> active_;
    std::vector<double> target_;
    std::vector<int> slot_of_;
    // Column i of N^{-1}: the move of x per unit rise of active constraint i.
    std::vector<double> binv_;
    std::vector<double> x_, act_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolverOptions& options) {
    if (lp.num_variables() == 0) return {};
    ActiveSetSimplex simplex(lp, options);
    return simplex.run();
}

}  // namespace mmagg
