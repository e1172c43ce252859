#ifndef PCENTER_ALGORITHM_HPP
#define PCENTER_ALGORITHM_HPP

#include <string>
#include <vector>

#include "pcenter/bounds.hpp"
#include "pcenter/instance.hpp"
#include "pcenter/model.hpp"
#include "pcenter/solver.hpp"

namespace pcenter {

/// One outer Step-1 iteration: bounds after the update, surviving
/// dimensions after reduction, and the LP bound v_bar (already mapped
/// to distance space for CP2, whose LP value is a rank).
struct TraceRow {
    int iteration = 0;
    double lb = 0.0;
    double ub = 0.0;
    int n_clients = 0;
    int n_facilities = 0;
    double v_bar = 0.0;
};

/// lb is non-decreasing and ub non-increasing down the rows; the last
/// row has v_bar equal to lb (the loop's exit condition). t1 covers
/// Step 1, t2 the whole run.
struct AlgorithmTrace {
    std::vector<TraceRow> rows;
    double t1_s = 0.0;
    double t2_s = 0.0;
    double radius = 0.0;
};

/// "iteration,lb,ub,n,m,v_bar" plus one line per row.
std::string trace_to_csv(const AlgorithmTrace& trace);

struct Step1Result {
    Instance instance;
    Bounds bounds;
    AlgorithmTrace trace;
};

/// Step 1: repeat { reduce to a fixed point, folding lb0/ub0 of the
/// shrinking instance into the bounds and re-clamping on every change;
/// solve the LP relaxation; snap lb up to the next distance } until the
/// LP value already is a distance. Returns the clamped, reduced
/// instance consistent with the final bounds.
///
/// The initial bounds are snapped to the ladder first. Throws
/// std::runtime_error when lb would pass ub (the given ub admits no
/// solution) or after 1000 iterations.
Step1Result step1(FormulationId formulation, const Instance& inst, const Bounds& initial,
                  const SolverConfig& solver);

struct TwoStepResult {
    SolveStatus status = SolveStatus::error;
    double radius = 0.0;
    std::vector<int> centers;
    AlgorithmTrace trace;
};

/// Step 1 then an exact solve of the tightened model. When Step 1
/// closes the gap (lb = ub) the MIP is skipped and no centers are
/// reported. radius is meaningful for status optimal or feasible
/// (feasible and time_limit can only arise from solver limits).
TwoStepResult two_step_solve(FormulationId formulation, const Instance& inst,
                             const Bounds& initial, const SolverConfig& solver);

} // namespace pcenter

#endif
