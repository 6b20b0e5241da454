#pragma once

#include <optional>

#include "tverberg/exactlp.hpp"

namespace tverberg::oracle {

/// Brute-force reference for feasible(): tries every basic solution of the
/// standard-form system (free variables split in two). Exponential; meant for
/// at most a dozen columns.
std::optional<RatVector> vertex_enumeration_feasible(const FeasibilityProblem& problem);

/// Smallest c.y over the basic feasible solutions of A y = b, y >= 0, or
/// nullopt when there are none.
std::optional<Rational> vertex_enumeration_minimum(const RatMatrix& a, const RatVector& b,
                                                   const RatVector& c);

}  // namespace tverberg::oracle
