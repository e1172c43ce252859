#include "pcenter/formulations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pcenter {

namespace {

std::string idx(std::string_view stem, int a) {
    return std::string(stem) + "_" + std::to_string(a);
}

std::string idx(std::string_view stem, int a, int b) {
    return std::string(stem) + "_" + std::to_string(a) + "_" + std::to_string(b);
}

// y_1..y_M; returns the index of y_j for 0-based j.
void add_y_block(Model& m, int n_facilities) {
    for (int j = 0; j < n_facilities; ++j)
        m.variables.push_back({idx("y", j + 1), VarKind::binary, 0.0, 1.0});
}

// 1 <= sum y_j <= p as two rows; every formulation except P1 carries it.
void add_cardinality_rows(Model& m, int n_facilities, int p) {
    Constraint lo{"card_lo", {}, Sense::ge, 1.0};
    Constraint hi{"card_hi", {}, Sense::le, static_cast<double>(p)};
    for (int j = 0; j < n_facilities; ++j) {
        lo.terms.push_back({j, 1.0});
        hi.terms.push_back({j, 1.0});
    }
    m.constraints.push_back(std::move(lo));
    m.constraints.push_back(std::move(hi));
}

ModelMeta meta_of(const Instance& inst, double d_min, double d_max) {
    return {inst.n_clients(), inst.n_facilities(), inst.p(), d_min, d_max};
}

} // namespace

Model build_p1(const Instance& inst, std::optional<double> forbid_above) {
    const int n = inst.n_clients();
    const int m_fac = inst.n_facilities();
    Model m;
    m.id = FormulationId::p1;
    m.name = "P1";
    add_y_block(m, m_fac);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m_fac; ++j) {
            const bool banned = forbid_above && inst.distance(i, j) > *forbid_above;
            m.variables.push_back(
                {idx("x", i + 1, j + 1), VarKind::binary, 0.0, banned ? 0.0 : 1.0});
        }
    const int r_var = static_cast<int>(m.variables.size());
    m.variables.push_back(
        {"R", VarKind::continuous, 0.0, std::numeric_limits<double>::infinity()});
    auto x_var = [m_fac](int i, int j) { return m_fac + i * m_fac + j; };

    m.objective.terms.push_back({r_var, 1.0});

    Constraint budget{"budget", {}, Sense::le, static_cast<double>(inst.p())};
    for (int j = 0; j < m_fac; ++j) budget.terms.push_back({j, 1.0});
    m.constraints.push_back(std::move(budget));

    for (int i = 0; i < n; ++i) {
        Constraint assign{idx("assign", i + 1), {}, Sense::eq, 1.0};
        for (int j = 0; j < m_fac; ++j) assign.terms.push_back({x_var(i, j), 1.0});
        m.constraints.push_back(std::move(assign));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m_fac; ++j)
            m.constraints.push_back(
                {idx("link", i + 1, j + 1), {{x_var(i, j), 1.0}, {j, -1.0}}, Sense::le, 0.0});
    for (int i = 0; i < n; ++i) {
        Constraint radius{idx("radius", i + 1), {}, Sense::le, 0.0};
        for (int j = 0; j < m_fac; ++j) {
            double d = inst.distance(i, j);
            if (d != 0.0) radius.terms.push_back({x_var(i, j), d});
        }
        radius.terms.push_back({r_var, -1.0});
        m.constraints.push_back(std::move(radius));
    }

    double d_min = std::numeric_limits<double>::infinity();
    double d_max = 0.0;
    for (double d : inst.distances()) {
        d_min = std::min(d_min, d);
        d_max = std::max(d_max, d);
    }
    m.meta = meta_of(inst, d_min, d_max);
    return m;
}

namespace {

// Shared skeleton of P2 and P2': y block, z block, ladder objective,
// cardinality rows, full cover rows; ordering rows optional.
Model ladder_model(const Instance& inst, const DistanceLadder& ladder, bool ordered,
                   FormulationId id, std::string name) {
    const int n = inst.n_clients();
    const int m_fac = inst.n_facilities();
    const int K = ladder.max_rank();
    Model m;
    m.id = id;
    m.name = std::move(name);
    add_y_block(m, m_fac);
    for (int k = 1; k <= K; ++k)
        m.variables.push_back({idx("z", k), VarKind::binary, 0.0, 1.0});
    auto z_var = [m_fac](int k) { return m_fac + k - 1; };

    m.objective.offset = ladder.value(0);
    for (int k = 1; k <= K; ++k)
        m.objective.terms.push_back({z_var(k), ladder.value(k) - ladder.value(k - 1)});

    add_cardinality_rows(m, m_fac, inst.p());
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= K; ++k) {
            Constraint cover{idx("cover", i + 1, k), {}, Sense::ge, 1.0};
            for (int j : coverage_set(inst, ladder, i, k)) cover.terms.push_back({j, 1.0});
            cover.terms.push_back({z_var(k), 1.0});
            m.constraints.push_back(std::move(cover));
        }
    if (ordered)
        for (int k = 1; k <= K - 1; ++k)
            m.constraints.push_back(
                {idx("order", k), {{z_var(k), 1.0}, {z_var(k + 1), -1.0}}, Sense::ge, 0.0});

    m.meta = meta_of(inst, ladder.value(0), ladder.value(K));
    return m;
}

// Shared skeleton of P3 and P4: y block, level block u_0..u_K, level
// objective, cardinality rows, cover rows for k in 0..K-1, pick-one row.
Model level_model(const Instance& inst, const DistanceLadder& ladder, bool cumulative,
                  FormulationId id, std::string name) {
    const int n = inst.n_clients();
    const int m_fac = inst.n_facilities();
    const int K = ladder.max_rank();
    Model m;
    m.id = id;
    m.name = std::move(name);
    add_y_block(m, m_fac);
    for (int k = 0; k <= K; ++k)
        m.variables.push_back({idx("u", k), VarKind::binary, 0.0, 1.0});
    auto u_var = [m_fac](int k) { return m_fac + k; };

    for (int k = 0; k <= K; ++k)
        if (ladder.value(k) != 0.0) m.objective.terms.push_back({u_var(k), ladder.value(k)});

    add_cardinality_rows(m, m_fac, inst.p());
    for (int i = 0; i < n; ++i) {
        auto row = inst.row(i);
        for (int k = 0; k <= K - 1; ++k) {
            Constraint cover{idx("cover", i + 1, k), {}, Sense::ge, 0.0};
            const double dk = ladder.value(k);
            for (int j = 0; j < m_fac; ++j)
                if (row[static_cast<std::size_t>(j)] <= dk) cover.terms.push_back({j, 1.0});
            if (cumulative)
                for (int q = 0; q <= k; ++q) cover.terms.push_back({u_var(q), -1.0});
            else
                cover.terms.push_back({u_var(k), -1.0});
            m.constraints.push_back(std::move(cover));
        }
    }
    Constraint pick{"pick_one", {}, Sense::eq, 1.0};
    for (int k = 0; k <= K; ++k) pick.terms.push_back({u_var(k), 1.0});
    m.constraints.push_back(std::move(pick));

    m.meta = meta_of(inst, ladder.value(0), ladder.value(K));
    return m;
}

} // namespace

Model build_p2(const Instance& inst, const DistanceLadder& ladder) {
    return ladder_model(inst, ladder, false, FormulationId::p2, "P2");
}

Model build_p2_prime(const Instance& inst, const DistanceLadder& ladder) {
    return ladder_model(inst, ladder, true, FormulationId::p2_prime, "P2p");
}

Model build_p3(const Instance& inst, const DistanceLadder& ladder) {
    return level_model(inst, ladder, false, FormulationId::p3, "P3");
}

Model build_p4(const Instance& inst, const DistanceLadder& ladder) {
    return level_model(inst, ladder, true, FormulationId::p4, "P4");
}

Model build_cp1(const Instance& inst, const DistanceLadder& ladder,
                const CriticalIndexSet& critical) {
    const int n = inst.n_clients();
    const int m_fac = inst.n_facilities();
    const int K = ladder.max_rank();
    Model m;
    m.id = FormulationId::cp1;
    m.name = "CP1";
    add_y_block(m, m_fac);
    for (int k = 1; k <= K; ++k)
        m.variables.push_back({idx("z", k), VarKind::binary, 0.0, 1.0});
    auto z_var = [m_fac](int k) { return m_fac + k - 1; };

    m.objective.offset = ladder.value(0);
    for (int k = 1; k <= K; ++k)
        m.objective.terms.push_back({z_var(k), ladder.value(k) - ladder.value(k - 1)});

    add_cardinality_rows(m, m_fac, inst.p());
    for (int i = 0; i < n; ++i)
        for (int k : critical.constraint_indices(i)) {
            Constraint cover{idx("cover", i + 1, k), {}, Sense::ge, 1.0};
            for (int j : coverage_set(inst, ladder, i, k)) cover.terms.push_back({j, 1.0});
            cover.terms.push_back({z_var(k), 1.0});
            m.constraints.push_back(std::move(cover));
        }
    for (int k = 1; k <= K - 1; ++k)
        m.constraints.push_back(
            {idx("order", k), {{z_var(k), 1.0}, {z_var(k + 1), -1.0}}, Sense::ge, 0.0});

    m.meta = meta_of(inst, ladder.value(0), ladder.value(K));
    return m;
}

Model build_cp2(const Instance& inst, const DistanceLadder& ladder,
                const CriticalIndexSet& critical) {
    const int n = inst.n_clients();
    const int m_fac = inst.n_facilities();
    const int K = ladder.max_rank();
    Model m;
    m.id = FormulationId::cp2;
    m.name = "CP2";
    add_y_block(m, m_fac);
    const int r_var = static_cast<int>(m.variables.size());
    m.variables.push_back({"r", VarKind::general_integer, 0.0, static_cast<double>(K)});

    m.objective.terms.push_back({r_var, 1.0});

    add_cardinality_rows(m, m_fac, inst.p());
    for (int i = 0; i < n; ++i)
        for (int k : critical.constraint_indices(i)) {
            Constraint rank{idx("rank", i + 1, k), {}, Sense::ge, static_cast<double>(k)};
            rank.terms.push_back({r_var, 1.0});
            for (int j : coverage_set(inst, ladder, i, k))
                rank.terms.push_back({j, static_cast<double>(k)});
            m.constraints.push_back(std::move(rank));
        }

    m.meta = meta_of(inst, ladder.value(0), ladder.value(K));
    return m;
}

Model build_formulation(FormulationId id, const Instance& inst,
                        std::optional<double> forbid_above) {
    if (id == FormulationId::p1) return build_p1(inst, forbid_above);
    DistanceLadder ladder = build_ladder(inst);
    switch (id) {
        case FormulationId::p2: return build_p2(inst, ladder);
        case FormulationId::p2_prime: return build_p2_prime(inst, ladder);
        case FormulationId::p3: return build_p3(inst, ladder);
        case FormulationId::p4: return build_p4(inst, ladder);
        case FormulationId::cp1: return build_cp1(inst, ladder, critical_indices(inst, ladder));
        case FormulationId::cp2: return build_cp2(inst, ladder, critical_indices(inst, ladder));
        default: throw std::invalid_argument("unknown formulation id");
    }
}

double extract_radius(const Model& m, const std::map<std::string, double>& solution,
                      const DistanceLadder& ladder) {
    if (m.id == FormulationId::cp2) {
        auto it = solution.find("r");
        const double r = it == solution.end() ? 0.0 : it->second;
        const double rounded = std::round(r);
        if (std::abs(r - rounded) > 1e-6)
            throw std::runtime_error("CP2 rank variable is not integral: r = " +
                                     std::to_string(r));
        return ladder.value(static_cast<int>(rounded));
    }
    // Solver tolerances leave z variables at 1 - eps, so the evaluated
    // objective drifts below the true radius; snap to the nearest ladder
    // value, which every integral solution attains exactly.
    const double raw = evaluate_objective(m, solution);
    const auto& vals = ladder.values();
    auto it = std::lower_bound(vals.begin(), vals.end(), raw);
    double best = it == vals.end() ? vals.back() : *it;
    if (it != vals.begin() && raw - *(it - 1) < best - raw) best = *(it - 1);
    if (std::abs(best - raw) <= 1e-4 * std::max(1.0, std::abs(raw))) return best;
    return raw;
}

double lp_value_as_distance(const Model& m, double lp_value, const DistanceLadder& ladder) {
    if (m.id == FormulationId::cp2) return ladder.value(0) + lp_value;
    return lp_value;
}

} // namespace pcenter
