#include "pcenter/lp_format.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pcenter {

namespace {

void check_name(const std::string& name) {
    bool ok = !name.empty() && name.size() <= 255;
    if (ok) {
        char c0 = name[0];
        ok = (c0 >= 'A' && c0 <= 'Z') || (c0 >= 'a' && c0 <= 'z');
        for (std::size_t i = 1; ok && i < name.size(); ++i) {
            char c = name[i];
            ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                 c == '_';
        }
    }
    if (!ok) throw std::logic_error("name not emittable in LP format: '" + name + "'");
}

void write_terms(std::ostringstream& os, const Model& m, const std::vector<LinearTerm>& terms) {
    bool first = true;
    for (const auto& t : terms) {
        double c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            c = std::abs(c);
        }
        os << format_number(c) << ' ' << m.variables[static_cast<std::size_t>(t.var)].name;
    }
}

} // namespace

std::string write_lp_file(const Model& m) {
    for (const auto& v : m.variables) check_name(v.name);
    for (const auto& c : m.constraints) check_name(c.label);

    std::ostringstream os;
    os << "Minimize\n obj: ";
    if (m.objective.terms.empty())
        os << "0 " << m.variables.at(0).name;
    else
        write_terms(os, m, m.objective.terms);
    os << '\n';

    if (!m.constraints.empty()) {
        os << "Subject To\n";
        for (const auto& c : m.constraints) {
            os << ' ' << c.label << ": ";
            write_terms(os, m, c.terms);
            switch (c.sense) {
                case Sense::le: os << " <= "; break;
                case Sense::ge: os << " >= "; break;
                case Sense::eq: os << " = "; break;
            }
            os << format_number(c.rhs) << '\n';
        }
    }

    std::string bounds;
    for (const auto& v : m.variables) {
        // Binaries are [0,1] by declaration; only tighter bounds (a
        // fixed variable) need a line.
        if (v.kind == VarKind::binary && v.lb == 0.0 && v.ub == 1.0) continue;
        const bool top_open = std::isinf(v.ub);
        if (v.kind != VarKind::binary && v.lb == 0.0 && top_open) continue;
        bounds += ' ';
        if (v.lb == 0.0)
            bounds += v.name + " <= " + format_number(v.ub);
        else if (top_open)
            bounds += v.name + " >= " + format_number(v.lb);
        else
            bounds += format_number(v.lb) + " <= " + v.name + " <= " + format_number(v.ub);
        bounds += '\n';
    }
    if (!bounds.empty()) os << "Bounds\n" << bounds;

    std::string generals;
    std::string binaries;
    for (const auto& v : m.variables) {
        if (v.kind == VarKind::general_integer) generals += ' ' + v.name + '\n';
        if (v.kind == VarKind::binary) binaries += ' ' + v.name + '\n';
    }
    if (!generals.empty()) os << "Generals\n" << generals;
    if (!binaries.empty()) os << "Binaries\n" << binaries;

    os << "End\n";
    return os.str();
}

Model relax(const Model& m) {
    Model out = m;
    for (auto& v : out.variables) v.kind = VarKind::continuous;
    return out;
}

} // namespace pcenter
