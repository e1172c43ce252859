#ifndef PCENTER_LADDER_HPP
#define PCENTER_LADDER_HPP

#include <vector>

#include "pcenter/instance.hpp"

namespace pcenter {

/// The sorted distinct distance values D^0 < D^1 < ... < D^K of an
/// instance matrix. Rank k identifies D^k; K = max_rank(). Comparisons
/// are exact, so instances must carry noise-free distances (integers for
/// the OR-Library data).
class DistanceLadder {
public:
    /// `values` must be strictly increasing and nonempty.
    explicit DistanceLadder(std::vector<double> values);

    int max_rank() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }

    /// D^k. Throws std::out_of_range unless 0 <= k <= K.
    double value(int k) const;

    /// Rank of an exact ladder member. Throws std::out_of_range if `d`
    /// is not one of the values.
    int rank_of(double d) const;

private:
    std::vector<double> values_;
};

DistanceLadder build_ladder(const Instance& inst);

/// Smallest ladder value >= v. Throws std::out_of_range when v > D^K
/// (no feasible radius at or above v).
double next_distance_at_least(const DistanceLadder& ladder, double v);

/// N_i^k = { j : d_ij < D^k }, facilities within (strictly) D^k of
/// client i. 0-based indices, sorted ascending. Requires 1 <= k <= K.
std::vector<int> coverage_set(const Instance& inst, const DistanceLadder& ladder, int client,
                              int k);

/// Per-client critical indices S_i = { k in 1..K-1 : some d_ij = D^k },
/// the ranks where N_i^k != N_i^{k+1}. Constraint generation uses
/// S_i together with the sentinel K.
class CriticalIndexSet {
public:
    CriticalIndexSet(std::vector<std::vector<int>> sets, int max_rank);

    int max_rank() const { return max_rank_; }

    /// S_i, sorted ascending. |S_i| <= min(M, K).
    const std::vector<int>& of(int client) const { return sets_[static_cast<std::size_t>(client)]; }

    /// S_i together with K, sorted ascending; empty when K = 0 (a single
    /// distance value needs no covering constraints).
    std::vector<int> constraint_indices(int client) const;

private:
    std::vector<std::vector<int>> sets_;
    int max_rank_;
};

CriticalIndexSet critical_indices(const Instance& inst, const DistanceLadder& ladder);

/// Replace every distance by its ladder rank (Assumption 1): the
/// transformed ladder is 0,1,...,K, so consecutive gaps are 1 and the
/// smallest distance is 0. Optimal center subsets are preserved; an
/// optimal rank r* maps back through D^{r*}.
Instance rank_transform(const Instance& inst);

} // namespace pcenter

#endif
