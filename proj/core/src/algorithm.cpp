#include "pcenter/algorithm.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pcenter/formulations.hpp"
#include "pcenter/reduction.hpp"

namespace pcenter {

namespace {

constexpr int kIterationCap = 1000;
// Absolute slack when comparing solver values against exact ladder
// distances; well above LP tolerances, well below the gap of 1 between
// integer distances.
constexpr double kSnapTol = 1e-6;

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// LP value of the formulation on `inst`, converted to a distance-space
// lower bound: CP2's relaxation bounds the integer rank r, so its value
// rounds up to the next rank before the ladder lookup.
double lp_distance_bound(FormulationId f, const Instance& inst, const DistanceLadder& ladder,
                         double ub, const SolverConfig& solver) {
    Model model = build_formulation(f, inst, ub);
    SolveOutcome out = solve_lp_relaxation(model, solver);
    if (out.status != SolveStatus::optimal || !out.objective)
        throw SolverFailureError("LP relaxation did not solve to optimality (status " +
                                 std::string(to_string(out.status)) + ")");
    if (f != FormulationId::cp2) return *out.objective;
    int rank = static_cast<int>(std::ceil(*out.objective - kSnapTol));
    rank = std::max(0, std::min(rank, ladder.max_rank()));
    return ladder.value(rank);
}

} // namespace

Step1Result step1(FormulationId formulation, const Instance& inst, const Bounds& initial,
                  const SolverConfig& solver) {
    const auto t0 = std::chrono::steady_clock::now();
    Bounds b = snap_to_ladder(initial, build_ladder(inst));
    b.provenance = BoundProvenance::lp_rounding;
    Instance current = clamp_distances(inst, b);
    AlgorithmTrace trace;

    for (int iter = 1;; ++iter) {
        if (iter > kIterationCap)
            throw std::runtime_error("step 1 exceeded the iteration cap; lb failed to settle");

        for (int inner = 0;; ++inner) {
            if (inner > kIterationCap)
                throw std::runtime_error("step 1 reduction loop failed to reach a fixed point");
            current = reduce(current).instance;
            const double nlb = std::max(b.lb, lb0(current));
            const double nub = std::min(b.ub, ub0(current));
            if (nlb == b.lb && nub == b.ub) break;
            if (nlb > nub)
                throw std::runtime_error(
                    "bounds crossed during reduction; the given upper bound admits no solution");
            b.lb = nlb;
            b.ub = nub;
            current = clamp_distances(current, b);
        }

        const DistanceLadder ladder = build_ladder(current);
        const double v_bar = lp_distance_bound(formulation, current, ladder, b.ub, solver);
        const double new_lb = next_distance_at_least(ladder, v_bar - kSnapTol);

        TraceRow row{iter, std::max(b.lb, new_lb), b.ub, current.n_clients(),
                     current.n_facilities(), v_bar};
        if (new_lb <= b.lb) {
            trace.rows.push_back(row);
            break;
        }
        if (new_lb > b.ub)
            throw std::runtime_error(
                "the LP bound passed ub; the given upper bound admits no solution");
        b.lb = new_lb;
        trace.rows.push_back(row);
        current = clamp_distances(current, b);
    }

    trace.t1_s = elapsed_since(t0);
    trace.t2_s = trace.t1_s;
    return {std::move(current), b, std::move(trace)};
}

TwoStepResult two_step_solve(FormulationId formulation, const Instance& inst,
                             const Bounds& initial, const SolverConfig& solver) {
    const auto t0 = std::chrono::steady_clock::now();
    Step1Result s1 = step1(formulation, inst, initial, solver);

    TwoStepResult result;
    result.trace = std::move(s1.trace);
    if (s1.bounds.lb == s1.bounds.ub) {
        result.status = SolveStatus::optimal;
        result.radius = s1.bounds.lb;
        result.trace.radius = result.radius;
        result.trace.t2_s = elapsed_since(t0);
        return result;
    }

    Model model = build_formulation(formulation, s1.instance, s1.bounds.ub);
    SolveOutcome out = solve_mip(model, solver);
    if (out.status == SolveStatus::infeasible)
        throw std::runtime_error(
            "no solution with radius <= ub exists; widen the upper bound");
    result.status = out.status;
    if (out.objective) {
        result.radius = extract_radius(model, out.assignment, build_ladder(s1.instance));
        if (result.radius > s1.bounds.ub)
            throw std::runtime_error(
                "optimum exceeds the given upper bound; widen the upper bound");
        for (int j = 0; j < s1.instance.n_facilities(); ++j) {
            auto it = out.assignment.find("y_" + std::to_string(j + 1));
            if (it != out.assignment.end() && it->second > 0.5)
                result.centers.push_back(
                    s1.instance.facility_labels()[static_cast<std::size_t>(j)]);
        }
    }
    result.trace.radius = result.radius;
    result.trace.t2_s = elapsed_since(t0);
    return result;
}

std::string trace_to_csv(const AlgorithmTrace& trace) {
    std::ostringstream os;
    os << "iteration,lb,ub,n,m,v_bar\n";
    for (const auto& row : trace.rows)
        os << row.iteration << ',' << format_number(row.lb) << ',' << format_number(row.ub) << ','
           << row.n_clients << ',' << row.n_facilities << ',' << format_number(row.v_bar) << '\n';
    return os.str();
}

double lb_star(FormulationId formulation, const Instance& inst, const Bounds& b,
               const SolverConfig& solver) {
    return step1(formulation, inst, b, solver).bounds.lb;
}

} // namespace pcenter
