#include "pcenter/ladder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pcenter {

DistanceLadder::DistanceLadder(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("ladder needs at least one value");
    for (std::size_t k = 1; k < values_.size(); ++k)
        if (!(values_[k - 1] < values_[k]))
            throw std::invalid_argument("ladder values must be strictly increasing");
}

double DistanceLadder::value(int k) const {
    if (k < 0 || k > max_rank())
        throw std::out_of_range("ladder rank " + std::to_string(k) + " outside [0, " +
                                std::to_string(max_rank()) + "]");
    return values_[static_cast<std::size_t>(k)];
}

int DistanceLadder::rank_of(double d) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), d);
    if (it == values_.end() || *it != d)
        throw std::out_of_range("value " + std::to_string(d) + " is not a ladder member");
    return static_cast<int>(it - values_.begin());
}

DistanceLadder build_ladder(const Instance& inst) {
    auto d = inst.distances();
    std::vector<double> values(d.begin(), d.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return DistanceLadder(std::move(values));
}

double next_distance_at_least(const DistanceLadder& ladder, double v) {
    const auto& values = ladder.values();
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end())
        throw std::out_of_range("no ladder value >= " + std::to_string(v));
    return *it;
}

std::vector<int> coverage_set(const Instance& inst, const DistanceLadder& ladder, int client,
                              int k) {
    if (client < 0 || client >= inst.n_clients())
        throw std::out_of_range("client index out of range");
    if (k < 1 || k > ladder.max_rank())
        throw std::out_of_range("coverage_set needs 1 <= k <= K");
    const double dk = ladder.value(k);
    std::vector<int> out;
    auto row = inst.row(client);
    for (int j = 0; j < inst.n_facilities(); ++j)
        if (row[static_cast<std::size_t>(j)] < dk) out.push_back(j);
    return out;
}

CriticalIndexSet::CriticalIndexSet(std::vector<std::vector<int>> sets, int max_rank)
    : sets_(std::move(sets)), max_rank_(max_rank) {}

std::vector<int> CriticalIndexSet::constraint_indices(int client) const {
    if (max_rank_ == 0) return {};
    std::vector<int> out = of(client);
    out.push_back(max_rank_);
    return out;
}

CriticalIndexSet critical_indices(const Instance& inst, const DistanceLadder& ladder) {
    const int K = ladder.max_rank();
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(inst.n_clients()));
    for (int i = 0; i < inst.n_clients(); ++i) {
        auto row = inst.row(i);
        std::vector<int> ranks;
        ranks.reserve(row.size());
        for (double d : row) ranks.push_back(ladder.rank_of(d));
        std::sort(ranks.begin(), ranks.end());
        ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
        auto& s = sets[static_cast<std::size_t>(i)];
        for (int k : ranks)
            if (k >= 1 && k <= K - 1) s.push_back(k);
    }
    return CriticalIndexSet(std::move(sets), K);
}

Instance rank_transform(const Instance& inst) {
    DistanceLadder ladder = build_ladder(inst);
    auto d = inst.distances();
    std::vector<double> ranks(d.size());
    for (std::size_t idx = 0; idx < d.size(); ++idx)
        ranks[idx] = static_cast<double>(ladder.rank_of(d[idx]));
    return inst.with_distances(std::move(ranks));
}

} // namespace pcenter
