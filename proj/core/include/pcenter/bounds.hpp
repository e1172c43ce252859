#ifndef PCENTER_BOUNDS_HPP
#define PCENTER_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcenter/instance.hpp"
#include "pcenter/ladder.hpp"

namespace pcenter {

enum class BoundProvenance { none, lb0ub0, fixture, user, lp_rounding };

/// A radius interval lb <= opt <= ub. With provenance other than `none`
/// both ends are expected to be ladder members; snap_to_ladder
/// establishes that.
struct Bounds {
    double lb = 0.0;
    double ub = 0.0;
    BoundProvenance provenance = BoundProvenance::none;
};

/// LB0 = max_i min_j d_ij: every client must reach some facility.
double lb0(const Instance& inst);

/// UB0 = min_j max_i d_ij: the best single facility serves everyone.
double ub0(const Instance& inst);

/// {lb0, ub0} with lb0ub0 provenance.
Bounds initial_bounds(const Instance& inst);

/// Snap both ends up to ladder members: lb to the next distance >= lb
/// (a valid bound stays valid since the optimum is a ladder value), ub
/// likewise but capped at D^K. Throws std::invalid_argument when
/// lb > ub or lb exceeds every distance.
Bounds snap_to_ladder(const Bounds& b, const DistanceLadder& ladder);

/// Entrywise clamp: d < lb becomes lb, d > ub becomes ub + 1. The
/// sentinel ub + 1 marks facilities too far to matter; the optimal
/// radius is unchanged whenever lb <= opt <= ub.
Instance clamp_distances(const Instance& inst, const Bounds& b);

/// One row of the shipped bounds fixture (Table of known OR-Library
/// results): instance name, size, p, optimum and the lb/ub pair.
struct FixtureRow {
    std::string instance;
    int n = 0;
    int p = 0;
    double opt = 0.0;
    double lb = 0.0;
    double ub = 0.0;
};

/// Parsed fixture CSV with header "instance,n,p,opt,lb,ub".
class FixtureTable {
public:
    static FixtureTable parse(std::string_view csv);
    static FixtureTable load(const std::string& path);

    const FixtureRow* find(std::string_view instance) const;
    const std::vector<FixtureRow>& rows() const { return rows_; }

private:
    std::vector<FixtureRow> rows_;
};

enum class FormulationId;
struct SolverConfig;

/// LB*: fixed point of { solve the LP relaxation of the chosen
/// formulation, snap its value up to the next ladder distance, clamp
/// and repeat }. A valid lower bound and a ladder member. Runs one
/// solver session per call.
double lb_star(FormulationId formulation, const Instance& inst, const Bounds& b,
               const SolverConfig& solver);

} // namespace pcenter

#endif
