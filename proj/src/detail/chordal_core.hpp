#pragma once

#include <vector>

#include "glpart/gl_chordal.hpp"

namespace glp::detail {

// Weighted loop on a fixed ordering `sigma` (1-based positions). Terminals
// whose own weight already meets or exceeds their demand start closed; the
// excess of such parts seeds the running balance. The public entry points
// forbid excess, the almost-chordal pipeline allows a bounded amount of it.
SolveReport run_weighted(const WeightedGraph& g, const PartitionRequest& request,
                         const std::vector<std::size_t>& sigma, const SolveOptions& options);

// Ordering the solvers run on: MCS. With validation on, a non-chordal graph
// raises PreconditionError carrying the MCS witness.
std::vector<std::size_t> solver_ordering(const Graph& g, bool validate);

}  // namespace glp::detail
