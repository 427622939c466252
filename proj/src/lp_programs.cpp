#include <algorithm>
#include <cmath>

#include "mmagg/error.hpp"
#include "mmagg/lp.hpp"

namespace mmagg {

PairwiseWeights pairwise_weights(const Instance& inst) {
    inst.validate();
    const int n = inst.n;
    PairwiseWeights w(inst.num_classes(), n);
    for (int k = 0; k < inst.num_classes(); ++k) {
        const auto& cls = inst.classes[k];
        const double unit = cls.weight / static_cast<double>(cls.members.size());
        for (const auto& m : cls.members) {
            const auto pos = m.doubled_positions();
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (pos[x] < pos[y]) w(k, x, y) += unit;
        }
    }
    return w;
}

std::vector<double> tie_mass(const Instance& inst) {
    std::vector<double> t;
    t.reserve(inst.classes.size());
    for (const auto& cls : inst.classes) {
        std::int64_t tied = 0;
        for (const auto& m : cls.members) tied += m.tied_pairs();
        t.push_back(static_cast<double>(tied) / static_cast<double>(cls.members.size()));
    }
    return t;
}

std::vector<double> KendallProgram::class_costs(const SquareMatrix& u) const {
    std::vector<double> out(weights.num_classes(), 0.0);
    for (int k = 0; k < weights.num_classes(); ++k) {
        double c = 0.5 * class_weight[k] * ties[k];
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) c += weights(k, x, y) * u(y, x);
        out[k] = c;
    }
    return out;
}

KendallProgram build_kendall_lp(const Instance& inst) {
    KendallProgram prog;
    prog.n = inst.n;
    prog.weights = pairwise_weights(inst);
    prog.ties = tie_mass(inst);
    for (const auto& cls : inst.classes) prog.class_weight.push_back(cls.weight);
    const int n = inst.n;
    auto& lp = prog.lp;

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) lp.add_variable(0.0, 1.0);
    prog.q_index = lp.add_variable(0.0, kInf, 1.0);

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                lp.add_row({{prog.pair_index(x, y), 1.0}, {prog.pair_index(y, z), 1.0}, {prog.pair_index(x, z), -1.0}},
                           0.0, 1.0);

    for (int k = 0; k < inst.num_classes(); ++k) {
        double constant = 0.5 * prog.class_weight[k] * prog.ties[k];
        std::vector<std::pair<int, double>> terms;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                const double wxy = prog.weights(k, x, y);
                const double wyx = prog.weights(k, y, x);
                constant += wxy;
                if (wyx != wxy) terms.emplace_back(prog.pair_index(x, y), wyx - wxy);
            }
        terms.emplace_back(prog.q_index, -1.0);
        lp.add_row(std::move(terms), -kInf, -constant);
        prog.class_constant.push_back(constant);
    }
    return prog;
}

std::vector<double> footrule_class_costs(const std::vector<double>& u, const Instance& inst) {
    std::vector<double> out;
    for (const auto& cls : inst.classes) {
        double total = 0.0;
        for (const auto& m : cls.members) {
            const auto pos = m.doubled_positions();
            for (int h = 0; h < inst.n; ++h) total += std::abs(u[h] - 0.5 * static_cast<double>(pos[h]));
        }
        out.push_back(cls.weight * total / static_cast<double>(cls.members.size()));
    }
    return out;
}

std::vector<double> FootruleProgram::class_costs(const std::vector<double>& u) const {
    return footrule_class_costs(u, instance);
}

FootruleProgram build_footrule_program(const Instance& inst) {
    inst.validate();
    FootruleProgram prog;
    prog.n = inst.n;
    prog.instance = inst;
    const int n = inst.n;
    auto& lp = prog.lp;
    for (int h = 0; h < n; ++h) lp.add_variable(1.0, static_cast<double>(n));
    prog.q_index = lp.add_variable(0.0, kInf, 1.0);

    for (const auto& cls : inst.classes) {
        const double unit = cls.weight / static_cast<double>(cls.members.size());
        std::vector<std::pair<int, double>> budget;
        for (const auto& m : cls.members) {
            const auto pos = m.doubled_positions();
            for (int h = 0; h < n; ++h) {
                const double sigma = 0.5 * static_cast<double>(pos[h]);
                const int e = lp.add_variable(0.0, static_cast<double>(n - 1), 0.0, true);
                lp.add_row({{e, 1.0}, {h, -1.0}}, -sigma, kInf);
                lp.add_row({{e, 1.0}, {h, 1.0}}, sigma, kInf);
                budget.emplace_back(e, unit);
            }
        }
        budget.emplace_back(prog.q_index, -1.0);
        lp.add_row(std::move(budget), -kInf, 0.0);
    }
    return prog;
}

FractionalSolution solve(const KendallProgram& program, const SolverOptions& options) {
    const LpSolution sol = solve(program.lp, options);
    FractionalSolution out;
    out.kind = SolutionKind::Pairwise;
    out.iterations = sol.iterations;
    const int n = program.n;
    out.pair = SquareMatrix(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const double v = std::clamp(sol.x[program.pair_index(x, y)], 0.0, 1.0);
            out.pair(x, y) = v;
            out.pair(y, x) = 1.0 - v;
        }
    const auto costs = program.class_costs(out.pair);
    out.objective = costs.empty() ? 0.0 : *std::max_element(costs.begin(), costs.end());
    return out;
}

FractionalSolution solve(const FootruleProgram& program, const SolverOptions& options) {
    const LpSolution sol = solve(program.lp, options);
    FractionalSolution out;
    out.kind = SolutionKind::Positional;
    out.iterations = sol.iterations;
    out.position.assign(sol.x.begin(), sol.x.begin() + program.n);
    const auto costs = program.class_costs(out.position);
    out.objective = *std::max_element(costs.begin(), costs.end());
    return out;
}

}  // namespace mmagg
