#pragma once

#include <cstddef>
#include <optional>

#include "glpart/partition.hpp"
#include "glpart/graph.hpp"

namespace glp {

inline constexpr std::size_t kDefaultBruteForceCap = 12;

// Exhaustive search for an exact GL partition (|S_i| = n_i, t_i in S_i, every
// part connected). No connectivity assumption on g: returns nullopt when no
// such partition exists. Throws CapExceeded above `vertex_cap` and
// InvalidArgument for malformed requests (k < 2, demand sum != n, ...).
std::optional<GLPartition> brute_force_gl(const Graph& g, const PartitionRequest& request,
                                          std::size_t vertex_cap = kDefaultBruteForceCap);

}  // namespace glp
