#ifndef PCENTER_SOLVER_HPP
#define PCENTER_SOLVER_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcenter/instance.hpp"
#include "pcenter/model.hpp"

namespace pcenter {

enum class SolveStatus { optimal, feasible, infeasible, time_limit, error };

std::string_view to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::error;
    std::optional<double> objective;
    std::optional<double> best_bound;
    std::map<std::string, double> assignment;
    double elapsed_s = 0.0;
};

/// Which solution-file syntax to expect:
///  - highs:  "Model status" header, "Objective <v>", "# Columns <n>"
///            followed by "<name> <value>" lines.
///  - cbc:    first line "<Status> - objective value <v>", then
///            "<index> <name> <value> <reduced cost>" rows.
///  - glpsol: the -o report; "Status:"/"Objective:" lines and the
///            column activity table (names up to 12 chars only).
///  - plain:  "status <s>", "objective <v>", then "<name> <value>"
///            lines; emitted by tools/scipy_milp.py.
enum class SolverDialect { highs, cbc, glpsol, plain };

SolverDialect parse_dialect(std::string_view name);

/// How to reach the external solver. `command` is a shell template; the
/// placeholders {model}, {solution}, {options}, {time_limit} (whole
/// seconds), {threads} and {mip_gap} are substituted per call, paths
/// already quoted. {options} names a generated HiGHS-style options file
/// carrying the numeric settings, for dialects that want one.
struct SolverConfig {
    std::string command;
    SolverDialect dialect = SolverDialect::highs;
    double time_limit_s = 3600.0;
    int threads = 1;
    double mip_gap = 0.0;
    double lp_tolerance = 1e-9;
    std::string work_dir;
    bool keep_files = false;
};

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The configured executable cannot be found (or none is configured).
class SolverMissingError : public SolverError {
public:
    using SolverError::SolverError;
};

/// The solver ran but exited abnormally.
class SolverFailureError : public SolverError {
public:
    using SolverError::SolverError;
};

/// The solution file does not match the configured dialect.
class SolverParseError : public SolverError {
public:
    using SolverError::SolverError;
};

/// Resolve a working configuration: PCENTER_SOLVER_CMD (with optional
/// PCENTER_SOLVER_DIALECT) wins; otherwise the first of highs, cbc,
/// glpsol found on PATH. Throws SolverMissingError when nothing is
/// available.
SolverConfig default_solver_config();

/// Solve the model as given (integrality kept). One subprocess per
/// call: writes the LP file, runs the command, parses the solution.
/// The model's objective offset is added to reported values.
SolveOutcome solve_mip(const Model& m, const SolverConfig& cfg);

/// Solve with integrality dropped (the emitted file declares every
/// variable continuous); returns the relaxation value v-bar.
SolveOutcome solve_lp_relaxation(const Model& m, const SolverConfig& cfg);

/// Parse a solution file's text in the given dialect. Exposed for
/// adapter tests; solve_mip/solve_lp_relaxation call it internally.
SolveOutcome parse_solution(SolverDialect dialect, const std::string& text);

struct BruteForceResult {
    double radius = 0.0;
    std::vector<int> centers;
};

/// Exhaustive oracle: enumerate facility subsets of size <= min(p, M)
/// in lexicographic order and return the minimal radius
/// max_i min_{j in S} d_ij with the first subset attaining it (centers
/// as facility labels). Throws std::runtime_error past `subset_cap`
/// enumerated subsets.
BruteForceResult brute_force_radius(const Instance& inst, int p,
                                    long long subset_cap = 2000000);

} // namespace pcenter

#endif
