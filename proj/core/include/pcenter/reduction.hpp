#ifndef PCENTER_REDUCTION_HPP
#define PCENTER_REDUCTION_HPP

#include <vector>

#include "pcenter/instance.hpp"

namespace pcenter {

/// What reduce removed, by original label, and how many passes it took
/// to reach the fixed point (the final pass removes nothing).
struct ReductionReport {
    std::vector<int> removed_clients;
    std::vector<int> removed_facilities;
    int rounds = 0;
};

/// Labels of dominated facilities: a is dominated when some surviving b
/// satisfies d_ib <= d_ia for every client. Identical columns keep the
/// lowest label; candidates are tested in label order against the
/// entities still alive, so chained ties remove all but one copy.
std::vector<int> dominated_facilities(const Instance& inst);

/// Labels of dominated clients: a is dominated when some surviving b
/// satisfies d_aj <= d_bj for every facility (b's covering constraint
/// implies a's). Same tie-break and sequencing as facilities.
std::vector<int> dominated_clients(const Instance& inst);

struct ReductionResult {
    Instance instance;
    ReductionReport report;
};

/// Alternate facility and client elimination until neither finds
/// anything. At least one client and one facility always survive; label
/// lists on the result trace back to the input. p is capped at the
/// surviving facility count (the budget is "at most p", so the optimum
/// is unchanged).
ReductionResult reduce(const Instance& inst);

} // namespace pcenter

#endif
