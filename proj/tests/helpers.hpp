#ifndef PCENTER_TESTS_HELPERS_HPP
#define PCENTER_TESTS_HELPERS_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "pcenter/instance.hpp"
#include "pcenter/solver.hpp"

namespace testutil {

// 3 clients x 3 facilities, p = 1, ladder 0 < 2 < 4 < 5. Small enough
// that every expected value below is checkable by hand.
inline pcenter::Instance t3() {
    return pcenter::parse_matrix("3 3 1\n0 2 5\n2 0 4\n5 4 0\n");
}

inline std::string data_path(const std::string& rel) {
    return std::string(PCENTER_DATA_DIR) + "/" + rel;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline pcenter::Instance load_pmed(int k) {
    auto g = pcenter::parse_orlib(slurp(data_path("orlib/pmed" + std::to_string(k) + ".txt")));
    return pcenter::graph_to_instance(g);
}

// Nullopt when no MILP solver is installed; solver-bound tests skip.
inline const std::optional<pcenter::SolverConfig>& solver_config() {
    static const std::optional<pcenter::SolverConfig> cfg =
        []() -> std::optional<pcenter::SolverConfig> {
        try {
            auto c = pcenter::default_solver_config();
            c.time_limit_s = 120.0;
            return c;
        } catch (const pcenter::SolverMissingError&) {
            return std::nullopt;
        }
    }();
    return cfg;
}

} // namespace testutil

#endif
