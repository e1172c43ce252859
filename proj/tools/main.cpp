// pcenter: build, solve and benchmark p-center MILP formulations.
//
// Exit codes: 0 success, 1 instance parse error, 2 flag misuse or an
// empty benchmark instance set, 3 file I/O error, 4 solver failure.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fnmatch.h>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pcenter/algorithm.hpp"
#include "pcenter/bounds.hpp"
#include "pcenter/formulations.hpp"
#include "pcenter/instance.hpp"
#include "pcenter/ladder.hpp"
#include "pcenter/lp_format.hpp"
#include "pcenter/model.hpp"
#include "pcenter/reduction.hpp"
#include "pcenter/solver.hpp"

namespace {

using namespace pcenter;

/// Filesystem problem distinct from a malformed file (exit 3 vs 1).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("cannot write " + path);
}

Instance load_instance(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    if (format == "matrix") return parse_matrix(text);
    return graph_to_instance(parse_orlib(text));
}

std::string instance_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

// --bounds grammar: none | lb0ub0 | fixture | <LB>,<UB>
struct BoundsFlag {
    enum class Mode { none, lb0ub0, fixture, user } mode = Mode::none;
    double lb = 0.0;
    double ub = 0.0;
};

BoundsFlag parse_bounds_flag(const std::string& s) {
    BoundsFlag f;
    if (s == "none") return f;
    if (s == "lb0ub0") {
        f.mode = BoundsFlag::Mode::lb0ub0;
        return f;
    }
    if (s == "fixture") {
        f.mode = BoundsFlag::Mode::fixture;
        return f;
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--bounds",
                                   "expected none, lb0ub0, fixture or LB,UB; got '" + s + "'");
    try {
        std::size_t done = 0;
        f.lb = std::stod(s.substr(0, comma), &done);
        if (done != comma) throw std::invalid_argument(s);
        const std::string rest = s.substr(comma + 1);
        f.ub = std::stod(rest, &done);
        if (done != rest.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--bounds", "cannot parse '" + s + "' as LB,UB");
    }
    if (f.lb > f.ub) throw CLI::ValidationError("--bounds", "LB exceeds UB in '" + s + "'");
    f.mode = BoundsFlag::Mode::user;
    return f;
}

const char* kDefaultFixture = "data/fixtures/orlib_bounds.csv";

/// Bounds for one instance. Fixture rows are matched by the file stem
/// (pmed1.txt resolves row "pmed1"); unknown stems fall back to lb0ub0
/// with a warning, as does a missing table at the default location. A
/// table path given explicitly must exist.
std::optional<Bounds> resolve_bounds(const BoundsFlag& flag, const Instance& inst,
                                     const std::string& stem, const std::string& fixture_path) {
    switch (flag.mode) {
        case BoundsFlag::Mode::none: return std::nullopt;
        case BoundsFlag::Mode::lb0ub0: return initial_bounds(inst);
        case BoundsFlag::Mode::user:
            return Bounds{flag.lb, flag.ub, BoundProvenance::user};
        case BoundsFlag::Mode::fixture: break;
    }
    std::string path = fixture_path;
    bool user_specified = !path.empty();
    if (!user_specified) {
        if (const char* env = std::getenv("PCENTER_FIXTURE"); env && *env) {
            path = env;
            user_specified = true;
        } else {
            path = kDefaultFixture;
        }
    }
    if (!std::filesystem::exists(path)) {
        if (user_specified) throw IoError("fixture table not found: " + path);
        std::cerr << "warning: fixture table " << path << " not found; using lb0ub0 for "
                  << stem << "\n";
        return initial_bounds(inst);
    }
    const FixtureTable table = FixtureTable::load(path);
    if (const FixtureRow* row = table.find(stem)) {
        return Bounds{row->lb, row->ub, BoundProvenance::fixture};
    }
    std::cerr << "warning: no fixture bounds for " << stem << "; using lb0ub0\n";
    return initial_bounds(inst);
}

/// The shared preprocessing pipeline: snap the bounds to the ladder,
/// clamp, and keep both the clamped and the clamped+reduced instance.
/// Model sizes are reported on the former; solves run on the latter.
struct Prepared {
    Instance clamped;
    Instance reduced;
    std::optional<Bounds> bounds;
};

Prepared prepare(const Instance& inst, const std::optional<Bounds>& b, bool reduce_instance) {
    if (!b) {
        Instance reduced = reduce_instance ? reduce(inst).instance : inst;
        return {inst, std::move(reduced), std::nullopt};
    }
    Bounds snapped = snap_to_ladder(*b, build_ladder(inst));
    Instance clamped = clamp_distances(inst, snapped);
    Instance reduced = reduce_instance ? reduce(clamped).instance : clamped;
    return {std::move(clamped), std::move(reduced), snapped};
}

std::optional<double> forbid_above(const Prepared& prep) {
    if (prep.bounds) return prep.bounds->ub;
    return std::nullopt;
}

SolverConfig make_solver_config(const std::string& cmd, const std::string& dialect,
                                double time_limit, int threads) {
    SolverConfig cfg;
    if (!cmd.empty()) {
        cfg.command = cmd;
        if (!dialect.empty()) {
            cfg.dialect = parse_dialect(dialect);
        } else if (cmd.find("glpsol") != std::string::npos) {
            cfg.dialect = SolverDialect::glpsol;
        } else if (cmd.find("cbc") != std::string::npos) {
            cfg.dialect = SolverDialect::cbc;
        } else if (cmd.find("highs") != std::string::npos) {
            cfg.dialect = SolverDialect::highs;
        } else {
            cfg.dialect = SolverDialect::plain;
        }
    } else {
        cfg = default_solver_config();
        if (!dialect.empty()) cfg.dialect = parse_dialect(dialect);
    }
    cfg.time_limit_s = time_limit;
    cfg.threads = threads;
    return cfg;
}

// ---------------------------------------------------------------- build

struct BuildOpts {
    std::string input;
    std::string format = "orlib";
    std::string formulation;
    std::string bounds = "none";
    std::string fixture;
    std::string out;
};

int run_build(const BuildOpts& o) {
    const FormulationId id = parse_formulation(o.formulation);
    const Instance inst = load_instance(o.input, o.format);
    const BoundsFlag flag = parse_bounds_flag(o.bounds);
    const auto bounds = resolve_bounds(flag, inst, instance_stem(o.input), o.fixture);
    const Prepared prep = prepare(inst, bounds, /*reduce_instance=*/false);
    const Model model = build_formulation(id, prep.clamped, forbid_above(prep));
    write_file(o.out, write_lp_file(model));
    const ModelStats stats = model_stats(model);
    std::cout << "variables=" << stats.n_variables << " constraints=" << stats.n_constraints
              << "\n";
    return 0;
}

// ---------------------------------------------------------------- solve

struct SolveOpts {
    std::string input;
    std::string format = "orlib";
    std::string formulation;
    std::string bounds = "none";
    std::string fixture;
    std::string algorithm = "direct";
    bool relax = false;
    double time_limit = 3600.0;
    std::string solver_cmd;
    std::string solver_dialect;
    int threads = 1;
    std::string trace_path = "trace.csv";
};

int run_solve(const SolveOpts& o) {
    const FormulationId id = parse_formulation(o.formulation);
    const Instance inst = load_instance(o.input, o.format);
    const BoundsFlag flag = parse_bounds_flag(o.bounds);
    const auto bounds = resolve_bounds(flag, inst, instance_stem(o.input), o.fixture);
    const SolverConfig cfg =
        make_solver_config(o.solver_cmd, o.solver_dialect, o.time_limit, o.threads);

    if (o.algorithm == "two-step") {
        if (o.relax)
            throw CLI::ValidationError("--relax", "two-step runs to integrality; drop --relax");
        const Bounds initial = bounds ? *bounds : initial_bounds(inst);
        const TwoStepResult res = two_step_solve(id, inst, initial, cfg);
        write_file(o.trace_path, trace_to_csv(res.trace));
        std::cout << "radius=" << format_number(res.radius) << "\n"
                  << "trace=" << o.trace_path << "\n";
        return 0;
    }

    const Prepared prep = prepare(inst, bounds, /*reduce_instance=*/true);
    const Model model = build_formulation(id, prep.reduced, forbid_above(prep));
    if (o.relax) {
        const SolveOutcome out = solve_lp_relaxation(model, cfg);
        if (out.status != SolveStatus::optimal || !out.objective)
            throw SolverFailureError("LP relaxation ended with status " +
                                     std::string(to_string(out.status)));
        const double v =
            lp_value_as_distance(model, *out.objective, build_ladder(prep.reduced));
        std::cout << "lp=" << format_number(v) << "\n";
        return 0;
    }
    const SolveOutcome out = solve_mip(model, cfg);
    if ((out.status != SolveStatus::optimal && out.status != SolveStatus::feasible) ||
        !out.objective)
        throw SolverFailureError("solve ended with status " +
                                 std::string(to_string(out.status)));
    const double radius = extract_radius(model, out.assignment, build_ladder(prep.reduced));
    std::cout << "radius=" << format_number(radius) << "\n";
    return 0;
}

// ---------------------------------------------------------------- bench

struct BenchOpts {
    std::string instances;
    std::string format = "orlib";
    std::vector<std::string> formulations{"p1", "p2", "cp1", "cp2"};
    std::string bounds = "fixture";
    std::string fixture;
    std::string out = "report.csv";
    double time_limit = 3600.0;
    std::string solver_cmd;
    std::string solver_dialect;
    int threads = 1;
    int jobs = 1;
};

/// "pmed2" sorts before "pmed10": compare the alphabetic prefix, then
/// the numeric suffix value, then the raw string.
std::tuple<std::string, long long, std::string> natural_key(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    long long num = -1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i && j - i <= 18) num = std::stoll(s.substr(i, j - i));
    return {s.substr(0, i), num, s};
}

std::vector<std::string> expand_glob(const std::string& pattern) {
    namespace fs = std::filesystem;
    const auto slash = pattern.find_last_of('/');
    const std::string dir = slash == std::string::npos ? "." : pattern.substr(0, slash);
    const std::string name = slash == std::string::npos ? pattern : pattern.substr(slash + 1);
    std::vector<std::string> hits;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        const std::string fname = entry.path().filename().string();
        if (fnmatch(name.c_str(), fname.c_str(), 0) == 0)
            hits.push_back(entry.path().string());
    }
    std::sort(hits.begin(), hits.end(), [](const std::string& a, const std::string& b) {
        return natural_key(instance_stem(a)) < natural_key(instance_stem(b));
    });
    return hits;
}

struct BenchRow {
    std::string instance;
    int n = 0;
    int p = 0;
    FormulationId formulation = FormulationId::p1;
    int n_variables = 0;
    int n_constraints = 0;
    std::string lp_bound;
    std::string radius;
    std::string status;
    double t1 = 0.0;
    double t2 = 0.0;
    double total = 0.0;
};

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

BenchRow bench_pair(const std::string& path, const std::string& format, FormulationId id,
                    const BoundsFlag& flag, const std::string& fixture_path,
                    const SolverConfig& cfg) {
    BenchRow row;
    row.instance = instance_stem(path);
    row.formulation = id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Instance inst = load_instance(path, format);
        row.n = inst.n_clients();
        row.p = inst.p();
        const auto bounds = resolve_bounds(flag, inst, row.instance, fixture_path);
        const Prepared prep = prepare(inst, bounds, /*reduce_instance=*/true);

        // Sizes describe the clamped, unreduced model (the shape a
        // direct solve would hand the solver); the LP bound is solved
        // on the reduced instance.
        const ModelStats stats =
            model_stats(build_formulation(id, prep.clamped, forbid_above(prep)));
        row.n_variables = stats.n_variables;
        row.n_constraints = stats.n_constraints;

        const Model reduced_model = build_formulation(id, prep.reduced, forbid_above(prep));
        const SolveOutcome lp = solve_lp_relaxation(reduced_model, cfg);
        if (lp.status == SolveStatus::optimal && lp.objective)
            row.lp_bound = format_number(
                lp_value_as_distance(reduced_model, *lp.objective, build_ladder(prep.reduced)));

        const Bounds initial = bounds ? *bounds : initial_bounds(inst);
        const TwoStepResult res = two_step_solve(id, inst, initial, cfg);
        row.status = to_string(res.status);
        row.t1 = res.trace.t1_s;
        row.t2 = res.trace.t2_s;
        if (res.status == SolveStatus::optimal || res.status == SolveStatus::feasible)
            row.radius = format_number(res.radius);
    } catch (const std::exception& e) {
        row.status = "error";
        std::cerr << "bench: " << row.instance << "/" << formulation_name(id) << ": "
                  << e.what() << "\n";
    }
    row.total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

int run_bench(const BenchOpts& o) {
    const BoundsFlag flag = parse_bounds_flag(o.bounds);
    std::vector<FormulationId> ids;
    for (const auto& name : o.formulations) ids.push_back(parse_formulation(name));
    const std::vector<std::string> paths = expand_glob(o.instances);
    if (paths.empty()) {
        std::cerr << "no instances match " << o.instances << "\n";
        return 2;
    }
    const SolverConfig cfg =
        make_solver_config(o.solver_cmd, o.solver_dialect, o.time_limit, o.threads);

    struct Task {
        std::string path;
        FormulationId id;
    };
    std::vector<Task> tasks;
    for (const auto& p : paths)
        for (FormulationId id : ids) tasks.push_back({p, id});

    std::vector<BenchRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(tasks.size())));
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            rows[t] = bench_pair(tasks[t].path, o.format, tasks[t].id, flag, o.fixture, cfg);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        const auto ka = natural_key(a.instance), kb = natural_key(b.instance);
        if (ka != kb) return ka < kb;
        return a.formulation < b.formulation;
    });

    std::ostringstream csv;
    csv << "instance,n,p,formulation,n_variables,n_constraints,lp_bound,radius,status,t1,t2,"
           "total\n";
    for (const BenchRow& r : rows)
        csv << r.instance << ',' << r.n << ',' << r.p << ',' << formulation_name(r.formulation)
            << ',' << r.n_variables << ',' << r.n_constraints << ',' << r.lp_bound << ','
            << r.radius << ',' << r.status << ',' << seconds_text(r.t1) << ','
            << seconds_text(r.t2) << ',' << seconds_text(r.total) << '\n';
    write_file(o.out, csv.str());
    std::cout << "report=" << o.out << " rows=" << rows.size() << "\n";
    return 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-center MILP toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> formulation_names{"p1", "p2",  "p2prime", "p2p",
                                                     "p3", "p4",  "cp1",     "cp2"};
    const auto formulation_check = CLI::IsMember(formulation_names, CLI::ignore_case);
    const auto format_check = CLI::IsMember({"orlib", "matrix"});
    const auto dialect_check = CLI::IsMember({"highs", "cbc", "glpsol", "plain"});

    BuildOpts b;
    CLI::App* build = app.add_subcommand("build", "write a formulation as an LP-format file");
    build->add_option("--input", b.input, "instance file")->required();
    build->add_option("--format", b.format, "instance syntax")->check(format_check);
    build->add_option("--formulation", b.formulation, "model to build")
        ->required()
        ->check(formulation_check);
    build->add_option("--bounds", b.bounds, "none, lb0ub0, fixture or LB,UB");
    build->add_option("--fixture", b.fixture, "bounds fixture CSV (default " +
                                                  std::string(kDefaultFixture) +
                                                  ", env PCENTER_FIXTURE)");
    build->add_option("--out", b.out, "output LP file")->required();

    SolveOpts s;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance through a formulation");
    solve->add_option("--input", s.input, "instance file")->required();
    solve->add_option("--format", s.format, "instance syntax")->check(format_check);
    solve->add_option("--formulation", s.formulation, "model to solve")
        ->required()
        ->check(formulation_check);
    solve->add_option("--bounds", s.bounds, "none, lb0ub0, fixture or LB,UB");
    solve->add_option("--fixture", s.fixture, "bounds fixture CSV");
    solve->add_option("--algorithm", s.algorithm, "direct or two-step")
        ->check(CLI::IsMember({"direct", "two-step"}));
    solve->add_flag("--relax", s.relax, "solve the LP relaxation and print lp=<v>");
    solve->add_option("--time-limit", s.time_limit, "solver time limit in seconds")
        ->check(CLI::PositiveNumber);
    solve->add_option("--solver-cmd", s.solver_cmd,
                      "solver command template with {model} {solution} {options} "
                      "{time_limit} {threads} {mip_gap} (env PCENTER_SOLVER_CMD)");
    solve->add_option("--solver-dialect", s.solver_dialect,
                      "solution syntax when --solver-cmd names no known solver")
        ->check(dialect_check);
    solve->add_option("--threads", s.threads, "solver threads")->check(CLI::PositiveNumber);
    solve->add_option("--trace", s.trace_path, "two-step trace CSV path");

    BenchOpts e;
    CLI::App* bench = app.add_subcommand("bench", "sweep instances x formulations into a CSV");
    bench->add_option("--instances", e.instances, "instance file glob")->required();
    bench->add_option("--format", e.format, "instance syntax")->check(format_check);
    bench->add_option("--formulations", e.formulations, "formulations to run")
        ->delimiter(',')
        ->check(formulation_check);
    bench->add_option("--bounds", e.bounds, "none, lb0ub0, fixture or LB,UB");
    bench->add_option("--fixture", e.fixture, "bounds fixture CSV");
    bench->add_option("--out", e.out, "report CSV path");
    bench->add_option("--time-limit", e.time_limit, "per-solve time limit in seconds")
        ->check(CLI::PositiveNumber);
    bench->add_option("--solver-cmd", e.solver_cmd, "solver command template");
    bench->add_option("--solver-dialect", e.solver_dialect, "solution syntax")
        ->check(dialect_check);
    bench->add_option("--threads", e.threads, "threads per solver call")
        ->check(CLI::PositiveNumber);
    bench->add_option("--jobs", e.jobs, "parallel (instance, formulation) pairs")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    if (build->parsed()) return guarded([&] { return run_build(b); });
    if (solve->parsed()) return guarded([&] { return run_solve(s); });
    return guarded([&] { return run_bench(e); });
}
