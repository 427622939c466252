#include "mmagg/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mmagg/error.hpp"

namespace mmagg {

namespace {

void require_same_size(int a, int b) {
    if (a != b)
        throw Error(ErrorCode::SizeMismatch, "rankings over " + std::to_string(a) + " and " +
                                                 std::to_string(b) + " elements");
}

// Counts inversions of `seq` while merge sorting it in place.
std::int64_t count_inversions(std::vector<int>& seq, std::vector<int>& scratch, std::size_t lo,
                              std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t inv = count_inversions(seq, scratch, lo, mid) + count_inversions(seq, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (seq[j] < seq[i]) {
            inv += static_cast<std::int64_t>(mid - i);
            scratch[k++] = seq[j++];
        } else {
            scratch[k++] = seq[i++];
        }
    }
    while (i < mid) scratch[k++] = seq[i++];
    while (j < hi) scratch[k++] = seq[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, seq.begin() + lo);
    return inv;
}

// Kendall tau from doubled positions of two total orders.
std::int64_t kendall_from_doubled(std::span<const std::int64_t> p, std::span<const std::int64_t> q) {
    const std::size_t n = p.size();
    std::vector<int> seq(n), scratch(n);
    for (std::size_t x = 0; x < n; ++x) seq[(p[x] / 2) - 1] = static_cast<int>(q[x] / 2);
    return count_inversions(seq, scratch, 0, n);
}

}  // namespace

std::string_view to_string(DistanceKind d) {
    switch (d) {
        case DistanceKind::KendallTau: return "kendall-tau";
        case DistanceKind::SpearmanFootrule: return "spearman-footrule";
        case DistanceKind::Kemeny: return "kemeny";
        case DistanceKind::PartialFootrule: return "partial-footrule";
    }
    return "?";
}

std::string_view to_string(SetDistanceKind s) { return s == SetDistanceKind::Median ? "median" : "minimum"; }

bool is_pairwise(DistanceKind d) { return d == DistanceKind::KendallTau || d == DistanceKind::Kemeny; }

std::int64_t kendall_tau(const Permutation& p, const Permutation& q) {
    require_same_size(p.size(), q.size());
    // Walk p's order and record q's ranks; discordant pairs are inversions.
    std::vector<int> seq;
    seq.reserve(p.size());
    for (int x : p.order()) seq.push_back(q.rank(x));
    std::vector<int> scratch(seq.size());
    return count_inversions(seq, scratch, 0, seq.size());
}

std::int64_t spearman_footrule(const Permutation& p, const Permutation& q) {
    require_same_size(p.size(), q.size());
    std::int64_t total = 0;
    for (int i = 0; i < p.size(); ++i) total += std::abs(p.ranks()[i] - q.ranks()[i]);
    return total;
}

HalfInt kemeny(const PartialRanking& p, const PartialRanking& q) {
    require_same_size(p.size(), q.size());
    const auto a = p.doubled_positions();
    const auto b = q.doubled_positions();
    const std::size_t n = a.size();
    std::int64_t twice = 0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const auto sa = (a[x] > a[y]) - (a[x] < a[y]);
            const auto sb = (b[x] > b[y]) - (b[x] < b[y]);
            if (sa * sb < 0)
                twice += 2;
            else if ((sa == 0) != (sb == 0))
                twice += 1;
        }
    }
    return HalfInt{twice};
}

HalfInt partial_footrule(const PartialRanking& p, const PartialRanking& q) {
    require_same_size(p.size(), q.size());
    const auto a = p.doubled_positions();
    const auto b = q.doubled_positions();
    std::int64_t doubled = 0;
    for (std::size_t x = 0; x < a.size(); ++x) doubled += std::llabs(a[x] - b[x]);
    // doubled positions: the difference sum is already twice the distance
    return HalfInt{doubled};
}

HalfInt distance(const PartialRanking& p, const PartialRanking& q, DistanceKind d) {
    require_same_size(p.size(), q.size());
    switch (d) {
        case DistanceKind::KendallTau:
            if (!p.is_total() || !q.is_total())
                throw Error(ErrorCode::KindMismatch, "Kendall tau needs permutations; use Kemeny for ties");
            return HalfInt::from_int(kendall_from_doubled(p.doubled_positions(), q.doubled_positions()));
        case DistanceKind::SpearmanFootrule:
            if (!p.is_total() || !q.is_total())
                throw Error(ErrorCode::KindMismatch,
                            "Spearman footrule needs permutations; use the partial footrule for ties");
            return partial_footrule(p, q);
        case DistanceKind::Kemeny: return kemeny(p, q);
        case DistanceKind::PartialFootrule: return partial_footrule(p, q);
    }
    return {};
}

Rational set_distance(const PartialRanking& p, const RankingClass& cls, DistanceKind d,
                      SetDistanceKind s) {
    if (cls.members.empty()) throw Error(ErrorCode::InvalidInstance, "empty ranking class");
    if (s == SetDistanceKind::Median) {
        std::int64_t twice = 0;
        for (const auto& m : cls.members) twice += distance(p, m, d).twice;
        return Rational(twice, 2 * static_cast<std::int64_t>(cls.members.size()));
    }
    HalfInt best = distance(p, cls.members.front(), d);
    for (std::size_t i = 1; i < cls.members.size(); ++i) best = std::min(best, distance(p, cls.members[i], d));
    return Rational(best);
}

std::vector<double> class_costs(const PartialRanking& p, const Instance& inst, DistanceKind d,
                                SetDistanceKind s) {
    std::vector<double> out;
    out.reserve(inst.classes.size());
    for (const auto& cls : inst.classes) out.push_back(cls.weight * set_distance(p, cls, d, s).value());
    return out;
}

double minmax_objective(const PartialRanking& p, const Instance& inst, DistanceKind d,
                        SetDistanceKind s) {
    double best = 0.0;
    for (const auto& cls : inst.classes) best = std::max(best, cls.weight * set_distance(p, cls, d, s).value());
    return best;
}

double minmax_objective(const Permutation& p, const Instance& inst, DistanceKind d,
                        SetDistanceKind s) {
    return minmax_objective(PartialRanking::from_permutation(p), inst, d, s);
}

}  // namespace mmagg
