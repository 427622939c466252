#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mmagg/rankings.hpp"
#include "mmagg/rational.hpp"

namespace mmagg {

/// KendallTau and SpearmanFootrule are defined on permutations; Kemeny and
/// PartialFootrule accept rankings with ties.
enum class DistanceKind { KendallTau, SpearmanFootrule, Kemeny, PartialFootrule };

enum class SetDistanceKind { Median, Minimum };

std::string_view to_string(DistanceKind d);
std::string_view to_string(SetDistanceKind s);

/// True for KendallTau and Kemeny.
bool is_pairwise(DistanceKind d);

/// Number of discordant pairs, O(n log n). Throws SizeMismatch.
std::int64_t kendall_tau(const Permutation& p, const Permutation& q);
/// Sum of absolute rank differences. Throws SizeMismatch.
std::int64_t spearman_footrule(const Permutation& p, const Permutation& q);
/// Discordant pairs plus one half per pair tied in exactly one ranking.
HalfInt kemeny(const PartialRanking& p, const PartialRanking& q);
/// Sum of absolute differences of fractional positions.
HalfInt partial_footrule(const PartialRanking& p, const PartialRanking& q);

/// Dispatches on `d`. KendallTau/SpearmanFootrule throw KindMismatch on ties.
HalfInt distance(const PartialRanking& p, const PartialRanking& q, DistanceKind d);

Rational set_distance(const PartialRanking& p, const RankingClass& cls, DistanceKind d,
                      SetDistanceKind s);

/// weight_k * set_distance(p, class k) for every class.
std::vector<double> class_costs(const PartialRanking& p, const Instance& inst, DistanceKind d,
                                SetDistanceKind s);

/// max_k weight_k * set_distance(p, class k).
double minmax_objective(const PartialRanking& p, const Instance& inst, DistanceKind d,
                        SetDistanceKind s);
double minmax_objective(const Permutation& p, const Instance& inst, DistanceKind d,
                        SetDistanceKind s);

}  // namespace mmagg
