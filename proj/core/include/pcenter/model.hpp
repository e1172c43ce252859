#ifndef PCENTER_MODEL_HPP
#define PCENTER_MODEL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pcenter {

enum class FormulationId { p1, p2, p2_prime, p3, p4, cp1, cp2 };

/// Canonical short name: P1, P2, P2p, P3, P4, CP1, CP2.
std::string_view formulation_name(FormulationId id);

/// Inverse of formulation_name, case-insensitive; also accepts "p2'".
/// Throws std::invalid_argument on unknown names.
FormulationId parse_formulation(std::string_view name);

enum class VarKind { binary, general_integer, continuous };

enum class Sense { le, ge, eq };

struct Variable {
    std::string name;
    VarKind kind = VarKind::continuous;
    double lb = 0.0;
    double ub = 0.0;
};

/// coeff * variables[var]; variables are referenced by index.
struct LinearTerm {
    int var = 0;
    double coeff = 0.0;
};

struct Constraint {
    std::string label;
    std::vector<LinearTerm> terms;
    Sense sense = Sense::le;
    double rhs = 0.0;
};

/// Always minimized.
struct Objective {
    std::vector<LinearTerm> terms;
    double offset = 0.0;
};

/// Dimensions of the instance a model was built from, plus its distance
/// range (D^0 and D^K of the ladder in effect).
struct ModelMeta {
    int n_clients = 0;
    int n_facilities = 0;
    int p = 0;
    double d_min = 0.0;
    double d_max = 0.0;
};

/// A solver-agnostic MILP. Two-sided ranges are stored as two rows, so
/// constraint counts equal row counts everywhere downstream.
struct Model {
    FormulationId id = FormulationId::p1;
    std::string name;
    std::vector<Variable> variables;
    std::vector<Constraint> constraints;
    Objective objective;
    ModelMeta meta;
};

struct ModelStats {
    int n_variables = 0;
    int n_constraints = 0;
    long long n_nonzeros = 0;
};

/// Counts rows, columns and structural nonzeros. Verifies that every
/// referenced variable index is declared and that names are unique;
/// throws std::logic_error otherwise.
ModelStats model_stats(const Model& m);

/// Objective value of an assignment (missing names count as 0).
double evaluate_objective(const Model& m, const std::map<std::string, double>& values);

/// Shortest decimal text that round-trips the value ("2", "0.5",
/// "106.54"); used by every emitter so files stay byte-deterministic.
std::string format_number(double value);

} // namespace pcenter

#endif
