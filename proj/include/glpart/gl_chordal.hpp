#pragma once

#include <cstddef>
#include <vector>

#include "glpart/graph.hpp"
#include "glpart/partition.hpp"

namespace glp {

struct SolveOptions {
  // Check chordality and k-connectivity up front (the expensive part).
  bool validate = true;
  // Assert the loop invariants on every iteration: non-empty frontier,
  // bounded running balance, iteration budget.
  bool debug_invariants = false;
};

struct SolveStats {
  std::size_t iterations = 0;
  std::size_t closures = 0;
  // Largest |sum over closed parts of (demand - weight)| seen at a loop head.
  Weight max_abs_balance = 0;
};

struct SolveReport {
  GLPartition partition;
  SolveStats stats;
};

// Exact partitioner for k-connected chordal graphs: |S_i| = n_i.
GLPartition gl_partition_chordal(const Graph& g, const PartitionRequest& request,
                                 const SolveOptions& options = {});
SolveReport solve_chordal(const Graph& g, const PartitionRequest& request,
                          const SolveOptions& options = {});

// Weighted partitioner: w_i - w_max < w(S_i) < w_i + w_max.
GLPartition gl_partition_chordal_weighted(const WeightedGraph& g, const PartitionRequest& request,
                                          const SolveOptions& options = {});
SolveReport solve_chordal_weighted(const WeightedGraph& g, const PartitionRequest& request,
                                   const SolveOptions& options = {});

// Request sanity shared by every solver: k >= 2, distinct in-range terminals,
// demands >= weight of their terminal, demand total equals w(V). Throws
// PreconditionError.
void validate_request(const WeightedGraph& g, const PartitionRequest& request);

// Checks chordality and k-connectivity, throwing PreconditionError with a
// witness on failure.
void require_chordal_k_connected(const Graph& g, std::size_t k);

// Largest |w(S_i) - demand_i|.
Weight realized_deviation(const WeightedGraph& g, const PartitionRequest& request,
                          const std::vector<std::vector<Vertex>>& parts);

}  // namespace glp
