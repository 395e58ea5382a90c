#include "glpart/gl_chordal.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "detail/chordal_core.hpp"
#include "glpart/chordal.hpp"
#include "glpart/connectivity.hpp"

namespace glp {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

// Solver state shared by both loops. Tracks, for every unassigned vertex,
// which parts it touches, and keeps the frontier V' (unassigned vertices
// touching an open part) ordered by sigma.
class Frontier {
 public:
  Frontier(const Graph& g, const std::vector<std::size_t>& sigma, std::size_t k)
      : g_(g),
        sigma_(sigma),
        part_of_(g.vertex_count(), kUnassigned),
        touching_(g.vertex_count()),
        in_frontier_(g.vertex_count(), 0),
        members_(k),
        priority_(k, 0),
        open_(k, 1),
        unassigned_(g.vertex_count()) {}

  bool assigned(Vertex v) const { return part_of_[v] != kUnassigned; }
  bool is_open(std::size_t part) const { return open_[part] != 0; }
  std::size_t unassigned_count() const { return unassigned_; }
  const std::vector<Vertex>& members(std::size_t part) const { return members_[part]; }
  bool frontier_empty() const { return frontier_.empty(); }

  Vertex min_frontier_vertex() const { return frontier_.begin()->second; }

  // j' = the open part adjacent to v with the smallest max-sigma. Priorities
  // of distinct parts never tie because sigma is injective.
  std::size_t lowest_priority_open_part(Vertex v) const {
    std::size_t best = kUnassigned;
    for (std::size_t part : touching_[v]) {
      if (!open_[part]) continue;
      if (best == kUnassigned || priority_[part] < priority_[best]) best = part;
    }
    return best;
  }

  void assign(Vertex v, std::size_t part) {
    part_of_[v] = part;
    members_[part].push_back(v);
    priority_[part] = std::max(priority_[part], sigma_[v]);
    --unassigned_;
    if (in_frontier_[v]) {
      frontier_.erase({sigma_[v], v});
      in_frontier_[v] = 0;
    }
    for (Vertex u : g_.neighbors(v)) {
      if (assigned(u)) continue;
      auto& touch = touching_[u];
      if (std::find(touch.begin(), touch.end(), part) == touch.end()) touch.push_back(part);
      if (open_[part] && !in_frontier_[u]) {
        frontier_.insert({sigma_[u], u});
        in_frontier_[u] = 1;
      }
    }
  }

  void close(std::size_t part) {
    open_[part] = 0;
    for (Vertex x : members_[part]) {
      for (Vertex u : g_.neighbors(x)) {
        if (assigned(u) || !in_frontier_[u]) continue;
        const auto& touch = touching_[u];
        const bool still_open = std::any_of(touch.begin(), touch.end(),
                                            [&](std::size_t p) { return open_[p] != 0; });
        if (!still_open) {
          frontier_.erase({sigma_[u], u});
          in_frontier_[u] = 0;
        }
      }
    }
  }

 private:
  const Graph& g_;
  const std::vector<std::size_t>& sigma_;
  std::vector<std::size_t> part_of_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<char> in_frontier_;
  std::set<std::pair<std::size_t, Vertex>> frontier_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::size_t> priority_;
  std::vector<char> open_;
  std::size_t unassigned_;
};

[[noreturn]] void stall(std::size_t iteration) {
  throw InvariantViolation("solver stalled at iteration " + std::to_string(iteration) +
                           ": no unassigned vertex borders an open part (is the graph "
                           "chordal and k-connected?)");
}

std::vector<std::vector<Vertex>> sorted_parts(const Frontier& state, std::size_t k) {
  std::vector<std::vector<Vertex>> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    parts[i] = state.members(i);
    std::sort(parts[i].begin(), parts[i].end());
  }
  return parts;
}

void check_terminals(const Graph& g, const PartitionRequest& request) {
  if (request.demands.size() != request.terminals.size()) {
    throw PreconditionError("request-shape", "terminal and demand counts differ");
  }
  if (request.k() < 2) throw PreconditionError("request-shape", "need at least two terminals");
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex t : request.terminals) {
    if (!g.contains(t)) {
      throw PreconditionError("request-shape", "terminal " + std::to_string(t) + " out of range");
    }
    if (seen[t]) {
      throw PreconditionError("duplicate-terminal",
                              "terminal " + std::to_string(t) + " listed twice", {t});
    }
    seen[t] = 1;
  }
}

}  // namespace

void validate_request(const WeightedGraph& g, const PartitionRequest& request) {
  check_terminals(g.graph(), request);
  Weight total = 0;
  for (std::size_t i = 0; i < request.k(); ++i) {
    const Weight d = request.demands[i];
    const Vertex t = request.terminals[i];
    if (d < 1) throw PreconditionError("demand", "demands must be positive");
    if (d < g.weight(t)) {
      throw PreconditionError("demand-below-terminal",
                              "demand " + std::to_string(d) + " of part " + std::to_string(i) +
                                  " is below its terminal's weight " +
                                  std::to_string(g.weight(t)),
                              {t});
    }
    total += d;
  }
  if (total != g.total_weight()) {
    throw PreconditionError("demand-sum", "demands sum to " + std::to_string(total) +
                                              " but the graph weighs " +
                                              std::to_string(g.total_weight()));
  }
}

void require_chordal_k_connected(const Graph& g, std::size_t k) {
  if (const PeoResult peo = compute_peo(g); !peo) {
    const auto& w = *peo.witness;
    throw PreconditionError("not-chordal",
                            "graph is not chordal: later neighbors " + std::to_string(w.missing_edge.u) +
                                " and " + std::to_string(w.missing_edge.v) + " of vertex " +
                                std::to_string(w.vertex) + " are not adjacent",
                            {w.vertex, w.missing_edge.u, w.missing_edge.v});
  }
  const ConnectivityResult conn = vertex_connectivity_at_least(g, k);
  if (conn) return;
  if (conn.reason == ConnectivityResult::Reason::kTooFewVertices) {
    throw PreconditionError("not-k-connected", "graph has " + std::to_string(g.vertex_count()) +
                                                   " vertices, too few to be " +
                                                   std::to_string(k) + "-connected");
  }
  const auto& w = *conn.witness;
  throw PreconditionError("not-k-connected",
                          "removing " + std::to_string(w.separator.size()) +
                              " vertices separates " + std::to_string(w.u) + " from " +
                              std::to_string(w.w),
                          w.separator);
}

Weight realized_deviation(const WeightedGraph& g, const PartitionRequest& request,
                          const std::vector<std::vector<Vertex>>& parts) {
  Weight deviation = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    deviation = std::max(deviation, std::abs(g.weight_of(parts[i]) - request.demands[i]));
  }
  return deviation;
}

namespace detail {

std::vector<std::size_t> solver_ordering(const Graph& g, bool validate) {
  if (validate) {
    PeoResult peo = compute_peo(g);
    if (peo) return std::move(peo.peo->sigma);
  }
  return Peo::from_order(mcs_order(g)).sigma;
}

SolveReport run_weighted(const WeightedGraph& wg, const PartitionRequest& request,
                         const std::vector<std::size_t>& sigma, const SolveOptions& options) {
  const Graph& g = wg.graph();
  const std::size_t n = g.vertex_count();
  const std::size_t k = request.k();
  const Weight w_max = wg.max_weight();

  Frontier state(g, sigma, k);
  std::vector<Weight> part_weight(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    state.assign(request.terminals[i], i);
    part_weight[i] = wg.weight(request.terminals[i]);
  }
  std::size_t open_count = k;
  // Sum over closed parts of (demand - weight).
  Weight balance = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (part_weight[i] >= request.demands[i]) {
      state.close(i);
      --open_count;
      balance += request.demands[i] - part_weight[i];
    }
  }

  SolveStats stats;
  while (open_count != 1 && state.unassigned_count() > 0) {
    stats.max_abs_balance = std::max(stats.max_abs_balance, std::abs(balance));
    if (options.debug_invariants) {
      if (std::abs(balance) >= w_max) {
        throw InvariantViolation("running balance " + std::to_string(balance) +
                                 " reached w_max = " + std::to_string(w_max));
      }
      if (stats.iterations >= n + k) {
        throw InvariantViolation("weighted loop exceeded |V| + k iterations");
      }
    }
    if (state.frontier_empty()) stall(stats.iterations);
    ++stats.iterations;

    const Vertex v = state.min_frontier_vertex();
    const std::size_t j = state.lowest_priority_open_part(v);
    const Weight reached = part_weight[j] + wg.weight(v);
    if (reached < request.demands[j]) {
      state.assign(v, j);
      part_weight[j] = reached;
      continue;
    }
    // Close j. Whether v joins it depends on the balance of the parts closed
    // before j: a non-negative balance admits the overshoot.
    const Weight prior_balance = balance;
    state.close(j);
    --open_count;
    ++stats.closures;
    if (prior_balance >= 0 || reached == request.demands[j]) {
      state.assign(v, j);
      part_weight[j] = reached;
    }
    balance += request.demands[j] - part_weight[j];
  }

  if (open_count == 1 && state.unassigned_count() > 0) {
    std::size_t last = 0;
    while (!state.is_open(last)) ++last;
    for (Vertex v = 0; v < n; ++v) {
      if (!state.assigned(v)) {
        state.assign(v, last);
        part_weight[last] += wg.weight(v);
      }
    }
    if (options.debug_invariants && !is_connected_set(g, state.members(last))) {
      throw InvariantViolation("final part " + std::to_string(last) + " is disconnected");
    }
  }
  if (state.unassigned_count() > 0) stall(stats.iterations);

  SolveReport report;
  report.partition.parts = sorted_parts(state, k);
  report.partition.deviation = realized_deviation(wg, request, report.partition.parts);
  report.stats = stats;
  return report;
}

}  // namespace detail

SolveReport solve_chordal(const Graph& g, const PartitionRequest& request,
                          const SolveOptions& options) {
  const WeightedGraph unit(g);
  validate_request(unit, request);
  if (options.validate) require_chordal_k_connected(g, request.k());
  const std::vector<std::size_t> sigma = detail::solver_ordering(g, options.validate);

  const std::size_t n = g.vertex_count();
  const std::size_t k = request.k();
  Frontier state(g, sigma, k);
  std::vector<std::size_t> size(k, 1);
  for (std::size_t i = 0; i < k; ++i) state.assign(request.terminals[i], i);
  for (std::size_t i = 0; i < k; ++i) {
    if (request.demands[i] == 1) state.close(i);
  }

  SolveStats stats;
  while (state.unassigned_count() > 0) {
    if (options.debug_invariants && stats.iterations >= n - k) {
      throw InvariantViolation("unweighted loop exceeded |V| - k iterations");
    }
    if (state.frontier_empty()) stall(stats.iterations);
    ++stats.iterations;

    const Vertex v = state.min_frontier_vertex();
    const std::size_t j = state.lowest_priority_open_part(v);
    state.assign(v, j);
    if (static_cast<Weight>(++size[j]) == request.demands[j]) {
      state.close(j);
      ++stats.closures;
    }
  }

  SolveReport report;
  report.partition.parts = sorted_parts(state, k);
  report.partition.deviation = realized_deviation(unit, request, report.partition.parts);
  report.stats = stats;
  return report;
}

GLPartition gl_partition_chordal(const Graph& g, const PartitionRequest& request,
                                 const SolveOptions& options) {
  return solve_chordal(g, request, options).partition;
}

SolveReport solve_chordal_weighted(const WeightedGraph& g, const PartitionRequest& request,
                                   const SolveOptions& options) {
  validate_request(g, request);
  if (options.validate) require_chordal_k_connected(g.graph(), request.k());
  return detail::run_weighted(g, request, detail::solver_ordering(g.graph(), options.validate),
                              options);
}

GLPartition gl_partition_chordal_weighted(const WeightedGraph& g, const PartitionRequest& request,
                                          const SolveOptions& options) {
  return solve_chordal_weighted(g, request, options).partition;
}

}  // namespace glp
