#include "pcenter/reduction.hpp"

#include <algorithm>

namespace pcenter {

namespace {

// b beats a when b's vector is entrywise <= a's and either somewhere
// strictly smaller or (on a full tie) b carries the lower label.
bool beats(const std::vector<double>& b_vec, int b_label, const std::vector<double>& a_vec,
           int a_label) {
    bool strict = false;
    for (std::size_t i = 0; i < a_vec.size(); ++i) {
        if (b_vec[i] > a_vec[i]) return false;
        if (b_vec[i] < a_vec[i]) strict = true;
    }
    return strict || b_label < a_label;
}

// Sequential elimination over vectors: index a dies when some alive b
// beats it. Returns the set of dead indices.
std::vector<int> eliminate(const std::vector<std::vector<double>>& vecs,
                           const std::vector<int>& labels) {
    const int n = static_cast<int>(vecs.size());
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> dead;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b == a || !alive[static_cast<std::size_t>(b)]) continue;
            if (beats(vecs[static_cast<std::size_t>(b)], labels[static_cast<std::size_t>(b)],
                      vecs[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(a)])) {
                alive[static_cast<std::size_t>(a)] = false;
                dead.push_back(a);
                break;
            }
        }
    }
    return dead;
}

std::vector<std::vector<double>> columns_of(const Instance& inst) {
    std::vector<std::vector<double>> cols(
        static_cast<std::size_t>(inst.n_facilities()),
        std::vector<double>(static_cast<std::size_t>(inst.n_clients())));
    for (int i = 0; i < inst.n_clients(); ++i)
        for (int j = 0; j < inst.n_facilities(); ++j)
            cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = inst.distance(i, j);
    return cols;
}

std::vector<std::vector<double>> rows_of(const Instance& inst) {
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(inst.n_clients()));
    for (int i = 0; i < inst.n_clients(); ++i) {
        auto r = inst.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

// For clients the dominated one is the entrywise-smaller row, so the
// beat test runs with the roles swapped.
std::vector<int> dominated_client_positions(const Instance& inst) {
    auto rows = rows_of(inst);
    const int n = static_cast<int>(rows.size());
    const auto& labels = inst.client_labels();
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    std::vector<int> dead;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b == a || !alive[static_cast<std::size_t>(b)]) continue;
            if (beats(rows[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)],
                      rows[static_cast<std::size_t>(b)], labels[static_cast<std::size_t>(a)])) {
                alive[static_cast<std::size_t>(a)] = false;
                dead.push_back(a);
                break;
            }
        }
    }
    return dead;
}

Instance drop(const Instance& inst, const std::vector<int>& dead_clients,
              const std::vector<int>& dead_facilities) {
    std::vector<bool> client_dead(static_cast<std::size_t>(inst.n_clients()), false);
    std::vector<bool> facility_dead(static_cast<std::size_t>(inst.n_facilities()), false);
    for (int i : dead_clients) client_dead[static_cast<std::size_t>(i)] = true;
    for (int j : dead_facilities) facility_dead[static_cast<std::size_t>(j)] = true;

    std::vector<double> dist;
    std::vector<int> client_labels;
    std::vector<int> facility_labels;
    for (int j = 0; j < inst.n_facilities(); ++j)
        if (!facility_dead[static_cast<std::size_t>(j)])
            facility_labels.push_back(inst.facility_labels()[static_cast<std::size_t>(j)]);
    for (int i = 0; i < inst.n_clients(); ++i) {
        if (client_dead[static_cast<std::size_t>(i)]) continue;
        client_labels.push_back(inst.client_labels()[static_cast<std::size_t>(i)]);
        for (int j = 0; j < inst.n_facilities(); ++j)
            if (!facility_dead[static_cast<std::size_t>(j)]) dist.push_back(inst.distance(i, j));
    }
    const int n = static_cast<int>(client_labels.size());
    const int m = static_cast<int>(facility_labels.size());
    return Instance(n, m, std::min(inst.p(), m), std::move(dist), std::move(client_labels),
                    std::move(facility_labels));
}

} // namespace

std::vector<int> dominated_facilities(const Instance& inst) {
    auto dead = eliminate(columns_of(inst), inst.facility_labels());
    std::vector<int> labels;
    labels.reserve(dead.size());
    for (int j : dead) labels.push_back(inst.facility_labels()[static_cast<std::size_t>(j)]);
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::vector<int> dominated_clients(const Instance& inst) {
    auto dead = dominated_client_positions(inst);
    std::vector<int> labels;
    labels.reserve(dead.size());
    for (int i : dead) labels.push_back(inst.client_labels()[static_cast<std::size_t>(i)]);
    std::sort(labels.begin(), labels.end());
    return labels;
}

ReductionResult reduce(const Instance& inst) {
    Instance current = inst;
    ReductionReport report;
    for (;;) {
        ++report.rounds;
        auto dead_facilities = eliminate(columns_of(current), current.facility_labels());
        Instance after_facilities =
            dead_facilities.empty() ? current : drop(current, {}, dead_facilities);
        auto dead_clients = dominated_client_positions(after_facilities);
        for (int j : dead_facilities)
            report.removed_facilities.push_back(
                current.facility_labels()[static_cast<std::size_t>(j)]);
        for (int i : dead_clients)
            report.removed_clients.push_back(
                after_facilities.client_labels()[static_cast<std::size_t>(i)]);
        Instance next =
            dead_clients.empty() ? after_facilities : drop(after_facilities, dead_clients, {});
        current = std::move(next);
        if (dead_facilities.empty() && dead_clients.empty()) break;
    }
    std::sort(report.removed_clients.begin(), report.removed_clients.end());
    std::sort(report.removed_facilities.begin(), report.removed_facilities.end());
    return {std::move(current), std::move(report)};
}

} // namespace pcenter
