#ifndef PCENTER_LP_FORMAT_HPP
#define PCENTER_LP_FORMAT_HPP

#include <string>

#include "pcenter/model.hpp"

namespace pcenter {

/// Serialize a model as CPLEX-style LP text. Sections appear in the
/// fixed order Minimize, Subject To, Bounds, Generals, Binaries, End,
/// each emitted only when nonempty; one constraint per line; numbers at
/// shortest round-trip precision, so output is byte-deterministic.
///
/// The format has no objective constant: solve adapters add
/// Model::objective.offset back onto reported objective values.
/// Names must match [A-Za-z][A-Za-z0-9_]* and be at most 255 chars;
/// violations throw std::logic_error.
std::string write_lp_file(const Model& m);

/// Copy of `m` with every variable kind rewritten to continuous
/// (binaries keep their [0,1] bounds). Emitting the copy yields the LP
/// relaxation file, uniformly across solvers.
Model relax(const Model& m);

} // namespace pcenter

#endif
