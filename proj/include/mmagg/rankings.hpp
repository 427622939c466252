#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mmagg/rational.hpp"

namespace mmagg {

/// Elements are the integers 1..n.
using Element = int;

/// A bijection from elements to ranks; rank(x) is the position of x (1 = top).
class Permutation {
public:
    Permutation() = default;

    /// ranks[x-1] = rank of element x. Throws DuplicateRank / RankOutOfRange.
    static Permutation from_ranks(std::vector<int> ranks);
    /// order[t] = element placed at rank t+1.
    static Permutation from_order(std::span<const int> order);
    static Permutation identity(int n);
    static Permutation reversal(int n);

    int size() const { return static_cast<int>(ranks_.size()); }
    int rank(Element x) const;
    std::span<const int> ranks() const { return ranks_; }
    /// Elements listed from rank 1 to rank n.
    std::vector<int> order() const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> ranks) : ranks_(std::move(ranks)) {}
    std::vector<int> ranks_;
};

Permutation make_permutation(std::vector<int> ranks);
Permutation inverse(const Permutation& p);

/// An ordered partition of 1..n into tie buckets (a weak order).
///
/// Positions follow the fractional-rank convention: an element in a bucket
/// of size b preceded by h elements sits at h + (b + 1) / 2. They are kept
/// doubled so they stay integral.
class PartialRanking {
public:
    PartialRanking() = default;

    /// Throws InvalidRanking if the buckets are empty, overlap or miss an element of 1..n.
    static PartialRanking from_buckets(std::vector<std::vector<int>> buckets);
    static PartialRanking from_permutation(const Permutation& p);

    int size() const { return static_cast<int>(doubled_.size()); }
    const std::vector<std::vector<int>>& buckets() const { return buckets_; }
    /// Throws ElementOutOfRange.
    HalfInt position(Element x) const;
    /// doubled_positions()[x-1] = 2 * position(x).
    std::span<const std::int64_t> doubled_positions() const { return doubled_; }
    bool is_total() const { return static_cast<int>(buckets_.size()) == size(); }
    /// Throws KindMismatch if the ranking has ties.
    Permutation to_permutation() const;
    /// Number of unordered tied pairs.
    std::int64_t tied_pairs() const;

    friend bool operator==(const PartialRanking& a, const PartialRanking& b) {
        return a.doubled_ == b.doubled_;
    }

private:
    std::vector<std::vector<int>> buckets_;
    std::vector<std::int64_t> doubled_;
};

HalfInt position(const PartialRanking& r, Element x);

/// A weighted set of rankings over a common ground set.
struct RankingClass {
    std::vector<PartialRanking> members;
    double weight = 1.0;

    /// True when every member is a permutation.
    bool all_total() const;
};

struct Instance {
    int n = 0;
    std::vector<RankingClass> classes;

    /// Throws InvalidInstance on an empty instance, empty classes, nonpositive
    /// weights or rankings over a different ground set.
    void validate() const;

    int num_classes() const { return static_cast<int>(classes.size()); }
    bool all_total() const;
    double max_weight() const;
    /// Indices of the classes whose weight equals max_weight().
    std::vector<int> max_weight_classes() const;
};

/// Builds and validates an instance from classes of permutations.
Instance make_instance(const std::vector<std::vector<Permutation>>& classes,
                       const std::vector<double>& weights);

}  // namespace mmagg
