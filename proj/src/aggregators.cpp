#include "mmagg/aggregators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mmagg/assignment.hpp"
#include "mmagg/error.hpp"
#include "mmagg/random.hpp"

namespace mmagg {

namespace {

AggregationResult score(PartialRanking ranking, const Instance& inst, DistanceKind d, SetDistanceKind s) {
    AggregationResult r;
    r.class_costs = class_costs(ranking, inst, d, s);
    r.objective = r.class_costs.empty() ? 0.0 : *std::max_element(r.class_costs.begin(), r.class_costs.end());
    r.ranking = std::move(ranking);
    return r;
}

void require_permutations(const Instance& inst, DistanceKind d) {
    if ((d == DistanceKind::KendallTau || d == DistanceKind::SpearmanFootrule) && !inst.all_total())
        throw Error(ErrorCode::KindMismatch, std::string(to_string(d)) + " needs permutation inputs");
}

struct Candidate {
    int cls;
    int member;
};

std::vector<Candidate> heaviest_members(const Instance& inst) {
    std::vector<Candidate> out;
    for (int k : inst.max_weight_classes())
        for (int i = 0; i < static_cast<int>(inst.classes[k].members.size()); ++i) out.push_back({k, i});
    return out;
}

double ratio(double a, double b) {
    if (b > 0.0) return a / b;
    return a > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

void round_recursive(const std::vector<int>& V, const SquareMatrix& u, const SquareMatrix& h,
                     const PairwiseWeights& w, std::vector<int>& order, std::vector<PivotStep>& steps) {
    if (V.size() <= 1) {
        order.insert(order.end(), V.begin(), V.end());
        return;
    }
    const int C = w.num_classes();
    PivotStep best;
    best.max_ratio = std::numeric_limits<double>::infinity();
    best.pivot = -1;
    std::vector<int> best_left, best_right;
    std::vector<double> A(C), B(C);
    std::vector<int> left, right;

    for (int v : V) {
        left.clear();
        right.clear();
        std::fill(A.begin(), A.end(), 0.0);
        std::fill(B.begin(), B.end(), 0.0);
        for (int x : V) {
            if (x == v) continue;
            (h(x, v) == 1.0 ? left : right).push_back(x);
            for (int k = 0; k < C; ++k) {
                A[k] += h(x, v) * w(k, v, x) + h(v, x) * w(k, x, v);
                B[k] += u(x, v) * w(k, v, x) + u(v, x) * w(k, x, v);
            }
        }
        // Pairs split by the pivot: y goes left, x goes right.
        for (int x : right)
            for (int y : left)
                for (int k = 0; k < C; ++k) {
                    A[k] += w(k, x, y);
                    B[k] += u(x, y) * w(k, y, x) + u(y, x) * w(k, x, y);
                }
        double worst = 0.0;
        int worst_class = 0;
        for (int k = 0; k < C; ++k) {
            const double r = ratio(A[k], B[k]);
            if (r > worst) {
                worst = r;
                worst_class = k;
            }
        }
        if (best.pivot < 0 || worst < best.max_ratio) {
            best.pivot = v;
            best.max_ratio = worst;
            best.worst_class = worst_class;
            best.rounding_cost = A;
            best.lp_cost = B;
            best_left = left;
            best_right = right;
        }
    }

    best.subproblem_size = static_cast<int>(V.size());
    const int pivot = best.pivot;
    best.pivot = pivot + 1;
    steps.push_back(std::move(best));
    round_recursive(best_left, u, h, w, order, steps);
    order.push_back(pivot);
    round_recursive(best_right, u, h, w, order, steps);
}

AggregationResult select_min(const Instance& inst, const std::vector<Candidate>& candidates, DistanceKind d,
                             SetDistanceKind s) {
    AggregationResult best;
    bool have = false;
    for (const auto& c : candidates) {
        AggregationResult r = score(inst.classes[c.cls].members[c.member], inst, d, s);
        if (!have || r.objective < best.objective) {
            best = std::move(r);
            best.chosen_class = c.cls;
            best.chosen_member = c.member;
            have = true;
        }
    }
    return best;
}

}  // namespace

SquareMatrix round_pairs(const SquareMatrix& u, double tol) {
    const int n = u.size();
    SquareMatrix h(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < x; ++y) {
            h(x, y) = u(x, y) >= 0.5 - tol ? 1.0 : 0.0;
            h(y, x) = 1.0 - h(x, y);
        }
    return h;
}

AggregationResult pick_rnd_perm(const Instance& inst, DistanceKind d, SetDistanceKind s, std::uint64_t seed) {
    inst.validate();
    const auto candidates = heaviest_members(inst);
    Rng rng(seed);
    const Candidate c = candidates[rng.below(candidates.size())];
    AggregationResult r = score(inst.classes[c.cls].members[c.member], inst, d, s);
    r.chosen_class = c.cls;
    r.chosen_member = c.member;
    return r;
}

double pick_rnd_expectation(const Instance& inst, DistanceKind d, SetDistanceKind s) {
    inst.validate();
    const auto candidates = heaviest_members(inst);
    double total = 0.0;
    for (const auto& c : candidates) total += minmax_objective(inst.classes[c.cls].members[c.member], inst, d, s);
    return total / static_cast<double>(candidates.size());
}

AggregationResult pick_opt_perm(const Instance& inst, DistanceKind d, SetDistanceKind s) {
    inst.validate();
    return select_min(inst, heaviest_members(inst), d, s);
}

std::vector<PivotStep> pivot_round(const SquareMatrix& u, const PairwiseWeights& w, std::vector<int>& order_out) {
    std::vector<int> V(u.size());
    std::iota(V.begin(), V.end(), 0);
    const SquareMatrix h = round_pairs(u);
    std::vector<PivotStep> steps;
    order_out.clear();
    round_recursive(V, u, h, w, order_out, steps);
    return steps;
}

AggregationResult mmkt_conv(const Instance& inst, DistanceKind d, const SolverOptions& options) {
    if (!is_pairwise(d)) throw Error(ErrorCode::KindMismatch, "mmkt_conv needs Kendall tau or Kemeny");
    inst.validate();
    require_permutations(inst, d);
    const KendallProgram program = build_kendall_lp(inst);
    FractionalSolution relaxed = solve(program, options);

    std::vector<int> order;
    auto steps = pivot_round(relaxed.pair, program.weights, order);
    for (int& x : order) ++x;

    AggregationResult r = score(PartialRanking::from_permutation(Permutation::from_order(order)), inst, d,
                                SetDistanceKind::Median);
    r.certificate = relaxed.objective;
    r.pivots = std::move(steps);
    r.relaxation = std::move(relaxed);
    return r;
}

Permutation order_by_position(const std::vector<double>& position, const FootruleRoundingOptions& rounding) {
    const int n = static_cast<int>(position.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return position[a] < position[b]; });

    Rng rng(rounding.seed);
    std::vector<int> order;
    order.reserve(n);
    for (int start = 0; start < n;) {
        int end = start + 1;
        while (end < n && position[idx[end]] - position[idx[end - 1]] <= rounding.tie_tol) ++end;
        std::vector<int> group(idx.begin() + start, idx.begin() + end);
        std::sort(group.begin(), group.end());
        if (!rounding.deterministic_ties) rng.shuffle(std::span<int>(group));
        for (int x : group) order.push_back(x + 1);
        start = end;
    }
    return Permutation::from_order(order);
}

double nearest_permutation_l1(const std::vector<double>& u) {
    const int n = static_cast<int>(u.size());
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (int x = 0; x < n; ++x)
        for (int t = 0; t < n; ++t) cost[x][t] = std::abs(u[x] - static_cast<double>(t + 1));
    return min_cost_assignment(cost).cost;
}

AggregationResult mmsp_conv(const Instance& inst, DistanceKind d, const FootruleRoundingOptions& rounding,
                            const SolverOptions& options) {
    if (d != DistanceKind::SpearmanFootrule && d != DistanceKind::PartialFootrule)
        throw Error(ErrorCode::KindMismatch, "mmsp_conv needs a footrule distance");
    inst.validate();
    require_permutations(inst, d);
    const FootruleProgram program = build_footrule_program(inst);
    FractionalSolution relaxed = solve(program, options);
    const Permutation out = order_by_position(relaxed.position, rounding);

    AggregationResult r = score(PartialRanking::from_permutation(out), inst, d, SetDistanceKind::Median);
    r.certificate = relaxed.objective;
    r.relaxation = std::move(relaxed);
    return r;
}

AggregationResult min_pick_perm(const Instance& inst, DistanceKind d) {
    inst.validate();
    const int C = inst.num_classes();
    if (C < 2) throw Error(ErrorCode::SingleClass, "min_pick_perm needs at least two classes");

    double best_score = std::numeric_limits<double>::infinity();
    Candidate best{-1, -1};
    for (int k = 0; k < C; ++k) {
        const auto& members = inst.classes[k].members;
        for (int i = 0; i < static_cast<int>(members.size()); ++i) {
            double worst = 0.0;
            for (int j = 0; j < C; ++j) {
                if (j == k) continue;
                const double gap = set_distance(members[i], inst.classes[j], d, SetDistanceKind::Minimum).value();
                worst = std::max(worst, inst.classes[j].weight * gap);
            }
            if (worst < best_score) {
                best_score = worst;
                best = {k, i};
            }
        }
    }
    AggregationResult r = score(inst.classes[best.cls].members[best.member], inst, d, SetDistanceKind::Minimum);
    r.chosen_class = best.cls;
    r.chosen_member = best.member;
    return r;
}

Instance restrict_to_min_witnesses(const Instance& inst, DistanceKind d) {
    const AggregationResult pick = min_pick_perm(inst, d);
    const PartialRanking& chosen = inst.classes[pick.chosen_class].members[pick.chosen_member];
    Instance out;
    out.n = inst.n;
    for (int j = 0; j < inst.num_classes(); ++j) {
        RankingClass cls;
        cls.weight = inst.classes[j].weight;
        if (j == pick.chosen_class) {
            cls.members.push_back(chosen);
        } else {
            const auto& members = inst.classes[j].members;
            std::vector<HalfInt> dist;
            dist.reserve(members.size());
            for (const auto& m : members) dist.push_back(distance(chosen, m, d));
            const HalfInt closest = *std::min_element(dist.begin(), dist.end());
            for (std::size_t i = 0; i < members.size(); ++i)
                if (dist[i] == closest) cls.members.push_back(members[i]);
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

AggregationResult min_mmkt_conv(const Instance& inst, DistanceKind d, const SolverOptions& options) {
    const Instance restricted = restrict_to_min_witnesses(inst, d);
    AggregationResult inner = mmkt_conv(restricted, d, options);
    AggregationResult r = score(inner.ranking, inst, d, SetDistanceKind::Minimum);
    r.pivots = std::move(inner.pivots);
    r.relaxation = std::move(inner.relaxation);
    return r;
}

AggregationResult min_mmsp_conv(const Instance& inst, DistanceKind d, const FootruleRoundingOptions& rounding,
                                const SolverOptions& options) {
    const Instance restricted = restrict_to_min_witnesses(inst, d);
    AggregationResult inner = mmsp_conv(restricted, d, rounding, options);
    AggregationResult r = score(inner.ranking, inst, d, SetDistanceKind::Minimum);
    r.relaxation = std::move(inner.relaxation);
    return r;
}

AggregationResult median_pivot_baseline(const Instance& inst, DistanceKind d, SetDistanceKind s,
                                        std::uint64_t seed) {
    inst.validate();
    const int n = inst.n;
    // above[x][y]: pooled number of rankings placing x strictly above y.
    std::vector<std::vector<int>> above(n, std::vector<int>(n, 0));
    for (const auto& cls : inst.classes)
        for (const auto& m : cls.members) {
            const auto pos = m.doubled_positions();
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (pos[x] < pos[y]) ++above[x][y];
        }

    Rng rng(seed);
    std::vector<int> order;
    order.reserve(n);
    auto sort = [&](auto&& self, std::vector<int> V) -> void {
        if (V.size() <= 1) {
            for (int x : V) order.push_back(x + 1);
            return;
        }
        const int v = V[rng.below(V.size())];
        std::vector<int> left, right;
        for (int x : V) {
            if (x == v) continue;
            const bool before = above[x][v] != above[v][x] ? above[x][v] > above[v][x] : x < v;
            (before ? left : right).push_back(x);
        }
        self(self, std::move(left));
        order.push_back(v + 1);
        self(self, std::move(right));
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    sort(sort, std::move(all));
    return score(PartialRanking::from_permutation(Permutation::from_order(order)), inst, d, s);
}

AggregationResult median_footrule_matching_baseline(const Instance& inst, DistanceKind d, SetDistanceKind s) {
    inst.validate();
    const int n = inst.n;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (const auto& cls : inst.classes)
        for (const auto& m : cls.members) {
            const auto pos = m.doubled_positions();
            for (int x = 0; x < n; ++x)
                for (int t = 0; t < n; ++t) cost[x][t] += 0.5 * static_cast<double>(std::llabs(pos[x] - 2 * (t + 1)));
        }
    const Assignment a = min_cost_assignment(cost);
    std::vector<int> ranks(n);
    for (int x = 0; x < n; ++x) ranks[x] = a.column_of[x] + 1;
    return score(PartialRanking::from_permutation(Permutation::from_ranks(ranks)), inst, d, s);
}

}  // namespace mmagg
