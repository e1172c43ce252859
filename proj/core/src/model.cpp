#include "pcenter/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

namespace pcenter {

std::string_view formulation_name(FormulationId id) {
    switch (id) {
        case FormulationId::p1: return "P1";
        case FormulationId::p2: return "P2";
        case FormulationId::p2_prime: return "P2p";
        case FormulationId::p3: return "P3";
        case FormulationId::p4: return "P4";
        case FormulationId::cp1: return "CP1";
        case FormulationId::cp2: return "CP2";
    }
    throw std::invalid_argument("unknown formulation id");
}

FormulationId parse_formulation(std::string_view name) {
    std::string lower;
    lower.reserve(name.size());
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "p1") return FormulationId::p1;
    if (lower == "p2") return FormulationId::p2;
    if (lower == "p2p" || lower == "p2'" || lower == "p2prime") return FormulationId::p2_prime;
    if (lower == "p3") return FormulationId::p3;
    if (lower == "p4") return FormulationId::p4;
    if (lower == "cp1") return FormulationId::cp1;
    if (lower == "cp2") return FormulationId::cp2;
    throw std::invalid_argument("unknown formulation '" + std::string(name) +
                                "' (expected one of p1, p2, p2p, p3, p4, cp1, cp2)");
}

ModelStats model_stats(const Model& m) {
    std::set<std::string> names;
    for (const auto& v : m.variables)
        if (!names.insert(v.name).second)
            throw std::logic_error("duplicate variable name: " + v.name);
    const int n_vars = static_cast<int>(m.variables.size());
    auto check_terms = [&](const std::vector<LinearTerm>& terms, const std::string& where) {
        for (const auto& t : terms)
            if (t.var < 0 || t.var >= n_vars)
                throw std::logic_error("undeclared variable index in " + where);
    };
    check_terms(m.objective.terms, "objective");
    ModelStats stats;
    stats.n_variables = n_vars;
    stats.n_constraints = static_cast<int>(m.constraints.size());
    for (const auto& c : m.constraints) {
        check_terms(c.terms, c.label);
        stats.n_nonzeros += static_cast<long long>(c.terms.size());
    }
    return stats;
}

std::string format_number(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::logic_error("number formatting failed");
    return std::string(buf, ptr);
}

double evaluate_objective(const Model& m, const std::map<std::string, double>& values) {
    double total = m.objective.offset;
    for (const auto& t : m.objective.terms) {
        auto it = values.find(m.variables[static_cast<std::size_t>(t.var)].name);
        if (it != values.end()) total += t.coeff * it->second;
    }
    return total;
}

} // namespace pcenter
