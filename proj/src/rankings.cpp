#include "mmagg/rankings.hpp"

#include <algorithm>
#include <string>

#include "mmagg/error.hpp"

namespace mmagg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateRank: return "DuplicateRank";
        case ErrorCode::RankOutOfRange: return "RankOutOfRange";
        case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
        case ErrorCode::InvalidRanking: return "InvalidRanking";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::InvalidInstance: return "InvalidInstance";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::IterationLimit: return "IterationLimit";
        case ErrorCode::SingleClass: return "SingleClass";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Permutation Permutation::from_ranks(std::vector<int> ranks) {
    const int n = static_cast<int>(ranks.size());
    if (n < 1) throw Error(ErrorCode::RankOutOfRange, "a permutation needs at least one element");
    std::vector<bool> seen(n + 1, false);
    for (int r : ranks) {
        if (r < 1 || r > n)
            throw Error(ErrorCode::RankOutOfRange,
                        "rank " + std::to_string(r) + " outside 1.." + std::to_string(n));
        if (seen[r]) throw Error(ErrorCode::DuplicateRank, "rank " + std::to_string(r) + " repeated");
        seen[r] = true;
    }
    return Permutation(std::move(ranks));
}

Permutation Permutation::from_order(std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    if (n < 1) throw Error(ErrorCode::ElementOutOfRange, "empty order");
    std::vector<int> ranks(n, 0);
    for (int t = 0; t < n; ++t) {
        const int x = order[t];
        if (x < 1 || x > n)
            throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(x) + " outside 1.." + std::to_string(n));
        if (ranks[x - 1] != 0)
            throw Error(ErrorCode::DuplicateRank, "element " + std::to_string(x) + " listed twice");
        ranks[x - 1] = t + 1;
    }
    return Permutation(std::move(ranks));
}

Permutation Permutation::identity(int n) {
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) ranks[i] = i + 1;
    return from_ranks(std::move(ranks));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> ranks(n);
    for (int i = 0; i < n; ++i) ranks[i] = n - i;
    return from_ranks(std::move(ranks));
}

int Permutation::rank(Element x) const {
    if (x < 1 || x > size())
        throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(x));
    return ranks_[x - 1];
}

std::vector<int> Permutation::order() const {
    std::vector<int> out(ranks_.size());
    for (std::size_t x = 0; x < ranks_.size(); ++x) out[ranks_[x] - 1] = static_cast<int>(x) + 1;
    return out;
}

Permutation Permutation::inverse() const { return Permutation(order()); }

Permutation make_permutation(std::vector<int> ranks) { return Permutation::from_ranks(std::move(ranks)); }

Permutation inverse(const Permutation& p) { return p.inverse(); }

PartialRanking PartialRanking::from_buckets(std::vector<std::vector<int>> buckets) {
    std::size_t n = 0;
    for (const auto& b : buckets) {
        if (b.empty()) throw Error(ErrorCode::InvalidRanking, "empty tie bucket");
        n += b.size();
    }
    if (n == 0) throw Error(ErrorCode::InvalidRanking, "no elements");

    PartialRanking r;
    r.doubled_.assign(n, 0);
    std::int64_t higher = 0;
    for (auto& b : buckets) {
        const auto size = static_cast<std::int64_t>(b.size());
        for (int x : b) {
            if (x < 1 || static_cast<std::size_t>(x) > n)
                throw Error(ErrorCode::InvalidRanking, "element " + std::to_string(x) + " outside 1.." + std::to_string(n));
            if (r.doubled_[x - 1] != 0)
                throw Error(ErrorCode::InvalidRanking, "element " + std::to_string(x) + " appears twice");
            r.doubled_[x - 1] = 2 * higher + size + 1;
        }
        std::sort(b.begin(), b.end());
        higher += size;
    }
    r.buckets_ = std::move(buckets);
    return r;
}

PartialRanking PartialRanking::from_permutation(const Permutation& p) {
    std::vector<std::vector<int>> buckets;
    buckets.reserve(p.size());
    for (int x : p.order()) buckets.push_back({x});
    return from_buckets(std::move(buckets));
}

HalfInt PartialRanking::position(Element x) const {
    if (x < 1 || x > size()) throw Error(ErrorCode::ElementOutOfRange, "element " + std::to_string(x));
    return HalfInt{doubled_[x - 1]};
}

Permutation PartialRanking::to_permutation() const {
    if (!is_total()) throw Error(ErrorCode::KindMismatch, "partial ranking has ties");
    std::vector<int> order;
    order.reserve(size());
    for (const auto& b : buckets_) order.push_back(b.front());
    return Permutation::from_order(order);
}

std::int64_t PartialRanking::tied_pairs() const {
    std::int64_t total = 0;
    for (const auto& b : buckets_) {
        const auto s = static_cast<std::int64_t>(b.size());
        total += s * (s - 1) / 2;
    }
    return total;
}

HalfInt position(const PartialRanking& r, Element x) { return r.position(x); }

bool RankingClass::all_total() const {
    return std::all_of(members.begin(), members.end(), [](const auto& m) { return m.is_total(); });
}

void Instance::validate() const {
    if (n < 1) throw Error(ErrorCode::InvalidInstance, "ground set is empty");
    if (classes.empty()) throw Error(ErrorCode::InvalidInstance, "no ranking classes");
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& cls = classes[k];
        if (cls.members.empty())
            throw Error(ErrorCode::InvalidInstance, "class " + std::to_string(k + 1) + " has no rankings");
        if (!(cls.weight > 0.0))
            throw Error(ErrorCode::InvalidInstance, "class " + std::to_string(k + 1) + " has a nonpositive weight");
        for (const auto& m : cls.members)
            if (m.size() != n)
                throw Error(ErrorCode::InvalidInstance,
                            "class " + std::to_string(k + 1) + " ranks " + std::to_string(m.size()) +
                                " elements, expected " + std::to_string(n));
    }
}

bool Instance::all_total() const {
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.all_total(); });
}

double Instance::max_weight() const {
    double best = 0.0;
    for (const auto& c : classes) best = std::max(best, c.weight);
    return best;
}

std::vector<int> Instance::max_weight_classes() const {
    const double best = max_weight();
    std::vector<int> out;
    for (int k = 0; k < num_classes(); ++k)
        if (classes[k].weight == best) out.push_back(k);
    return out;
}

Instance make_instance(const std::vector<std::vector<Permutation>>& classes,
                       const std::vector<double>& weights) {
    if (weights.size() != classes.size())
        throw Error(ErrorCode::InvalidInstance, "one weight per class is required");
    Instance inst;
    inst.n = classes.empty() || classes.front().empty() ? 0 : classes.front().front().size();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        RankingClass cls;
        cls.weight = weights[k];
        for (const auto& p : classes[k]) cls.members.push_back(PartialRanking::from_permutation(p));
        inst.classes.push_back(std::move(cls));
    }
    inst.validate();
    return inst;
}

}  // namespace mmagg
