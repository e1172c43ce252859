#include "pcenter/solver.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "pcenter/lp_format.hpp"

namespace pcenter {

namespace fs = std::filesystem;

std::string_view to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::feasible: return "feasible";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::time_limit: return "time_limit";
        case SolveStatus::error: return "error";
    }
    return "error";
}

SolverDialect parse_dialect(std::string_view name) {
    if (name == "highs") return SolverDialect::highs;
    if (name == "cbc") return SolverDialect::cbc;
    if (name == "glpsol") return SolverDialect::glpsol;
    if (name == "plain") return SolverDialect::plain;
    throw std::invalid_argument("unknown solver dialect '" + std::string(name) +
                                "' (expected highs, cbc, glpsol or plain)");
}

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += '\'';
    return out;
}

void replace_all(std::string& text, std::string_view needle, const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        text.replace(pos, needle.size(), value);
        pos += value.size();
    }
}

std::string find_on_path(const std::string& exe) {
    const char* path = std::getenv("PATH");
    if (!path) return {};
    std::istringstream is(path);
    std::string dir;
    while (std::getline(is, dir, ':')) {
        if (dir.empty()) continue;
        fs::path cand = fs::path(dir) / exe;
        std::error_code ec;
        if (fs::is_regular_file(cand, ec) && ::access(cand.c_str(), X_OK) == 0)
            return cand.string();
    }
    return {};
}

struct ScratchDir {
    fs::path dir;
    bool keep = false;

    ScratchDir(const std::string& base, bool keep_files) : keep(keep_files) {
        fs::path root = base.empty() ? fs::temp_directory_path() : fs::path(base);
        std::string tmpl = (root / "pcenter-XXXXXX").string();
        if (!::mkdtemp(tmpl.data()))
            throw SolverError("cannot create scratch directory under " + root.string());
        dir = tmpl;
    }

    ~ScratchDir() {
        if (!keep) {
            std::error_code ec;
            fs::remove_all(dir, ec);
        }
    }

    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw SolverError("cannot write " + path.string());
}

struct RunResult {
    int exit_code = 0;
    std::string output;
};

RunResult run_command(const std::string& command) {
    std::string wrapped = command + " < /dev/null 2>&1";
    FILE* pipe = ::popen(wrapped.c_str(), "r");
    if (!pipe) throw SolverError("cannot start solver command: " + command);
    RunResult result;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    int status = ::pclose(pipe);
    if (status == -1) throw SolverError("lost track of solver process: " + command);
    if (WIFEXITED(status))
        result.exit_code = WEXITSTATUS(status);
    else
        result.exit_code = 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
    return result;
}

std::string tail_of(const std::string& text, std::size_t n = 600) {
    if (text.size() <= n) return text;
    return "..." + text.substr(text.size() - n);
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

SolveOutcome parse_highs(const std::string& text) {
    auto lines = lines_of(text);
    SolveOutcome out;
    bool saw_status = false;
    bool in_primal = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line == "Model status") {
            std::size_t next = li + 1;
            while (next < lines.size() && lines[next].empty()) ++next;
            if (next >= lines.size()) break;
            const std::string& status = lines[next];
            saw_status = true;
            if (status == "Optimal")
                out.status = SolveStatus::optimal;
            else if (status == "Infeasible")
                out.status = SolveStatus::infeasible;
            else if (status == "Time limit reached")
                out.status = SolveStatus::time_limit;
            else
                out.status = SolveStatus::error;
            li = next;
        } else if (line == "# Primal solution values") {
            in_primal = true;
        } else if (line == "# Dual solution values" || line == "# Basis") {
            in_primal = false;
        } else if (in_primal && line.rfind("Objective ", 0) == 0) {
            out.objective = std::stod(line.substr(10));
        } else if (in_primal && line.rfind("# Columns ", 0) == 0) {
            long long count = std::stoll(line.substr(10));
            for (long long c = 0; c < count && li + 1 < lines.size(); ++c) {
                auto toks = split_tokens(lines[++li]);
                if (toks.size() != 2)
                    throw SolverParseError("bad column line in highs solution: " + lines[li]);
                out.assignment[toks[0]] = std::stod(toks[1]);
            }
        }
    }
    if (!saw_status) throw SolverParseError("highs solution file has no 'Model status' section");
    return out;
}

SolveOutcome parse_cbc(const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty()) throw SolverParseError("empty cbc solution file");
    SolveOutcome out;
    const std::string& head = lines[0];
    if (head.rfind("Optimal", 0) == 0)
        out.status = SolveStatus::optimal;
    else if (head.find("nfeasible") != std::string::npos)
        out.status = SolveStatus::infeasible;
    else if (head.rfind("Stopped on time", 0) == 0)
        out.status = SolveStatus::time_limit;
    else
        out.status = SolveStatus::error;
    if (auto pos = head.find("objective value"); pos != std::string::npos)
        out.objective = std::stod(head.substr(pos + 15));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::string line = lines[li];
        if (line.rfind("**", 0) == 0) line = line.substr(2);
        auto toks = split_tokens(line);
        if (toks.size() >= 3 && is_integer_token(toks[0])) out.assignment[toks[1]] = std::stod(toks[2]);
    }
    return out;
}

SolveOutcome parse_glpsol(const std::string& text) {
    auto lines = lines_of(text);
    SolveOutcome out;
    bool saw_status = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (line.rfind("Status:", 0) == 0) {
            saw_status = true;
            if (line.find("OPTIMAL") != std::string::npos)
                out.status = SolveStatus::optimal;
            else if (line.find("EMPTY") != std::string::npos ||
                     line.find("INFEASIBLE") != std::string::npos ||
                     line.find("HAS NO") != std::string::npos)
                out.status = SolveStatus::infeasible;
            else
                out.status = SolveStatus::error;
        } else if (line.rfind("Objective:", 0) == 0) {
            auto eq = line.find('=');
            auto par = line.find('(', eq == std::string::npos ? 0 : eq);
            if (eq != std::string::npos)
                out.objective = std::stod(line.substr(
                    eq + 1, par == std::string::npos ? std::string::npos : par - eq - 1));
        } else if (line.find("Column name") != std::string::npos) {
            for (li += 1; li < lines.size(); ++li) {
                if (lines[li].find("-----") != std::string::npos) continue;
                auto toks = split_tokens(lines[li]);
                if (toks.empty()) break;
                if (!is_integer_token(toks[0]) || toks.size() < 3) continue;
                static const char* markers[] = {"B", "NL", "NU", "NF", "NS", "*"};
                bool marked = false;
                for (const char* mk : markers) marked = marked || toks[2] == mk;
                const std::string& value = marked ? toks.at(3) : toks[2];
                out.assignment[toks[1]] = std::stod(value);
            }
        }
    }
    if (!saw_status) throw SolverParseError("glpsol report has no 'Status:' line");
    return out;
}

SolveOutcome parse_plain(const std::string& text) {
    SolveOutcome out;
    bool saw_status = false;
    for (const auto& line : lines_of(text)) {
        auto toks = split_tokens(line);
        if (toks.size() != 2) continue;
        if (toks[0] == "status") {
            saw_status = true;
            if (toks[1] == "optimal")
                out.status = SolveStatus::optimal;
            else if (toks[1] == "feasible")
                out.status = SolveStatus::feasible;
            else if (toks[1] == "infeasible")
                out.status = SolveStatus::infeasible;
            else if (toks[1] == "time_limit")
                out.status = SolveStatus::time_limit;
            else
                out.status = SolveStatus::error;
        } else if (toks[0] == "objective") {
            out.objective = std::stod(toks[1]);
        } else {
            out.assignment[toks[0]] = std::stod(toks[1]);
        }
    }
    if (!saw_status) throw SolverParseError("plain solution file has no 'status' line");
    return out;
}

SolveOutcome run_solver(const Model& m, const SolverConfig& cfg, bool relaxed) {
    if (cfg.command.empty())
        throw SolverMissingError(
            "no solver command configured; set PCENTER_SOLVER_CMD or install highs, cbc or "
            "glpsol");
    ScratchDir scratch(cfg.work_dir, cfg.keep_files);
    const fs::path model_path = scratch.dir / "model.lp";
    const fs::path solution_path = scratch.dir / "solution.sol";
    const fs::path options_path = scratch.dir / "solver.opt";

    write_file(model_path, write_lp_file(relaxed ? relax(m) : m));
    std::ostringstream opts;
    opts << "time_limit = " << format_number(cfg.time_limit_s) << '\n'
         << "mip_rel_gap = " << format_number(cfg.mip_gap) << '\n'
         << "threads = " << cfg.threads << '\n'
         << "primal_feasibility_tolerance = " << format_number(cfg.lp_tolerance) << '\n'
         << "dual_feasibility_tolerance = " << format_number(cfg.lp_tolerance) << '\n'
         << "log_file = " << (scratch.dir / "solver.log").string() << '\n';
    write_file(options_path, opts.str());

    std::string command = cfg.command;
    replace_all(command, "{model}", shell_quote(model_path.string()));
    replace_all(command, "{solution}", shell_quote(solution_path.string()));
    replace_all(command, "{options}", shell_quote(options_path.string()));
    replace_all(command, "{time_limit}",
                std::to_string(std::max(1LL, static_cast<long long>(std::ceil(cfg.time_limit_s)))));
    replace_all(command, "{threads}", std::to_string(cfg.threads));
    replace_all(command, "{mip_gap}", format_number(cfg.mip_gap));

    const auto t0 = std::chrono::steady_clock::now();
    RunResult run = run_command(command);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (run.exit_code == 127)
        throw SolverMissingError("solver executable not found: " + command);

    std::ifstream sol(solution_path, std::ios::binary);
    std::ostringstream sol_text;
    sol_text << sol.rdbuf();
    if (!sol || sol_text.str().empty()) {
        if (run.exit_code != 0)
            throw SolverFailureError("solver exited with code " + std::to_string(run.exit_code) +
                                     ": " + tail_of(run.output));
        throw SolverParseError("solver produced no solution file: " + tail_of(run.output));
    }

    SolveOutcome out;
    switch (cfg.dialect) {
        case SolverDialect::highs: out = parse_highs(sol_text.str()); break;
        case SolverDialect::cbc: out = parse_cbc(sol_text.str()); break;
        case SolverDialect::glpsol: out = parse_glpsol(sol_text.str()); break;
        case SolverDialect::plain: out = parse_plain(sol_text.str()); break;
    }
    if (out.status == SolveStatus::error && run.exit_code != 0)
        throw SolverFailureError("solver exited with code " + std::to_string(run.exit_code) +
                                 ": " + tail_of(run.output));
    if (out.objective) *out.objective += m.objective.offset;
    if (out.status == SolveStatus::optimal) out.best_bound = out.objective;
    out.elapsed_s = elapsed;
    return out;
}

} // namespace

SolveOutcome parse_solution(SolverDialect dialect, const std::string& text) {
    switch (dialect) {
        case SolverDialect::highs: return parse_highs(text);
        case SolverDialect::cbc: return parse_cbc(text);
        case SolverDialect::glpsol: return parse_glpsol(text);
        case SolverDialect::plain: return parse_plain(text);
    }
    throw std::invalid_argument("unknown solver dialect");
}

SolverConfig default_solver_config() {
    SolverConfig cfg;
    if (const char* cmd = std::getenv("PCENTER_SOLVER_CMD"); cmd && *cmd) {
        cfg.command = cmd;
        if (const char* dia = std::getenv("PCENTER_SOLVER_DIALECT"); dia && *dia)
            cfg.dialect = parse_dialect(dia);
        return cfg;
    }
    if (std::string exe = find_on_path("highs"); !exe.empty()) {
        cfg.command = shell_quote(exe) + " {model} --options_file {options} --solution_file {solution}";
        cfg.dialect = SolverDialect::highs;
        return cfg;
    }
    if (std::string exe = find_on_path("cbc"); !exe.empty()) {
        cfg.command = shell_quote(exe) +
                      " {model} seconds {time_limit} threads {threads} ratioGap {mip_gap} solve "
                      "solution {solution}";
        cfg.dialect = SolverDialect::cbc;
        return cfg;
    }
    if (std::string exe = find_on_path("glpsol"); !exe.empty()) {
        cfg.command = shell_quote(exe) + " --lp {model} --tmlim {time_limit} -o {solution}";
        cfg.dialect = SolverDialect::glpsol;
        return cfg;
    }
    throw SolverMissingError(
        "no solver found on PATH (tried highs, cbc, glpsol); set PCENTER_SOLVER_CMD");
}

SolveOutcome solve_mip(const Model& m, const SolverConfig& cfg) {
    return run_solver(m, cfg, false);
}

SolveOutcome solve_lp_relaxation(const Model& m, const SolverConfig& cfg) {
    return run_solver(m, cfg, true);
}

BruteForceResult brute_force_radius(const Instance& inst, int p, long long subset_cap) {
    if (p < 1) throw std::invalid_argument("brute_force_radius: p must be >= 1");
    const int n = inst.n_clients();
    const int m = inst.n_facilities();
    const int size_cap = std::min(p, m);
    long long visited = 0;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_set;
    std::vector<int> chosen;

    // Preorder over ascending subsets = lexicographic order, so the
    // first strict improvement is the lexicographically first optimum.
    auto walk = [&](auto&& self, int start, const std::vector<double>& mins) -> void {
        for (int j = start; j < m; ++j) {
            if (++visited > subset_cap)
                throw std::runtime_error("brute_force_radius: subset cap exceeded (" +
                                         std::to_string(subset_cap) + ")");
            std::vector<double> next = mins;
            double radius = 0.0;
            for (int i = 0; i < n; ++i) {
                next[static_cast<std::size_t>(i)] =
                    std::min(next[static_cast<std::size_t>(i)], inst.distance(i, j));
                radius = std::max(radius, next[static_cast<std::size_t>(i)]);
            }
            chosen.push_back(j);
            if (radius < best) {
                best = radius;
                best_set = chosen;
            }
            if (static_cast<int>(chosen.size()) < size_cap) self(self, j + 1, next);
            chosen.pop_back();
        }
    };
    std::vector<double> mins(static_cast<std::size_t>(n),
                             std::numeric_limits<double>::infinity());
    walk(walk, 0, mins);

    BruteForceResult result;
    result.radius = best;
    for (int j : best_set)
        result.centers.push_back(inst.facility_labels()[static_cast<std::size_t>(j)]);
    return result;
}

} // namespace pcenter
