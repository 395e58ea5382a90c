#pragma once

#include <cstddef>
#include <vector>

#include "glpart/graph.hpp"

namespace glp {

// Terminals t_1..t_k and their demands (sizes n_i for the unweighted solver,
// weights w_i for the weighted ones).
struct PartitionRequest {
  std::vector<Vertex> terminals;
  std::vector<Weight> demands;

  std::size_t k() const noexcept { return terminals.size(); }
};

// Disjoint connected parts S_1..S_k (each sorted), and the largest
// |w(S_i) - demand_i| actually realized.
struct GLPartition {
  std::vector<std::vector<Vertex>> parts;
  Weight deviation = 0;

  bool operator==(const GLPartition&) const = default;
};

}  // namespace glp
