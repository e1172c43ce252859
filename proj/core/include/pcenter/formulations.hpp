#ifndef PCENTER_FORMULATIONS_HPP
#define PCENTER_FORMULATIONS_HPP

#include <map>
#include <optional>

#include "pcenter/instance.hpp"
#include "pcenter/ladder.hpp"
#include "pcenter/model.hpp"

namespace pcenter {

/// Classic formulation: binary assignment x_ij, open flags y_j and a
/// continuous radius R. Rows: budget, one assignment row per client,
/// x_ij <= y_j links, and per-client radius rows.
///
/// When `forbid_above` is set, every x_ij with d_ij > forbid_above gets
/// upper bound 0: assignments past a known upper bound are excluded
/// without adding rows. On clamped matrices this pins exactly the
/// sentinel (ub+1) pairs and strengthens the LP relaxation.
Model build_p1(const Instance& inst,
               std::optional<double> forbid_above = std::nullopt);

/// Ladder formulation: y plus one binary z^k per rank k in 1..K, with
/// objective D^0 + sum (D^k - D^{k-1}) z^k. Cover rows use the strict
/// sets N_i^k = { j : d_ij < D^k }. The facility count is kept in
/// [1, p], stored as two rows.
Model build_p2(const Instance& inst, const DistanceLadder& ladder);

/// P2 plus the ordering rows z^k >= z^{k+1}; same LP value as P2.
Model build_p2_prime(const Instance& inst, const DistanceLadder& ladder);

/// Level formulation with one binary u_k per rank k in 0..K picking the
/// radius D^k (exactly one u_k is 1) and per-(i,k) rows
/// sum_{j: d_ij <= D^k} y_j >= u_k for k in 0..K-1. Weaker LP than P4.
Model build_p3(const Instance& inst, const DistanceLadder& ladder);

/// As P3 but with the cumulative right-hand side sum_{q<=k} u_q, the
/// image of P2 under u_k = z^k - z^{k+1}; same LP value as P2.
Model build_p4(const Instance& inst, const DistanceLadder& ladder);

/// P2' keeping only the cover rows k in S_i (union {K}) per client; the
/// dropped rows are implied by ordering. Same variables as P2.
Model build_cp1(const Instance& inst, const DistanceLadder& ladder,
                const CriticalIndexSet& critical);

/// Single general-integer radius index r in [0, K] with rows
/// r + k * sum_{j in N_i^k} y_j >= k for k in S_i (union {K}). The
/// optimum is an index; the radius is D^r.
Model build_cp2(const Instance& inst, const DistanceLadder& ladder,
                const CriticalIndexSet& critical);

/// Dispatch on id, deriving ladder and critical sets from `inst` as the
/// chosen formulation needs them. `forbid_above` is forwarded to P1 and
/// ignored by the ladder formulations, whose cover sets already exclude
/// facilities past the top ladder distance.
Model build_formulation(FormulationId id, const Instance& inst,
                        std::optional<double> forbid_above = std::nullopt);

/// Optimal radius encoded by a feasible solution: R for P1, the
/// objective value for the ladder and level formulations (snapped to
/// the nearest ladder member, since solver integrality tolerance leaves
/// z at 1 - eps), D^round(r) for CP2. `ladder` must come from the same
/// instance the model was built on. Throws std::runtime_error when
/// CP2's r strays more than 1e-6 from an integer.
double extract_radius(const Model& m, const std::map<std::string, double>& solution,
                      const DistanceLadder& ladder);

/// LP relaxation value of `m` read in distance units. CP2's LP optimum
/// is a fractional rank; reports report it as D^0 + value, which equals
/// the radius whenever consecutive ladder gaps are 1 (rank-transformed
/// or consecutive-integer matrices). Every other formulation already
/// prices its objective in distances and passes through unchanged.
double lp_value_as_distance(const Model& m, double lp_value,
                            const DistanceLadder& ladder);

} // namespace pcenter

#endif
