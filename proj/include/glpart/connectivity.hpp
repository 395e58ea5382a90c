#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glpart/graph.hpp"

namespace glp {

// A vertex set whose removal separates u from w.
struct SeparatorWitness {
  std::vector<Vertex> separator;  // sorted
  Vertex u = 0;
  Vertex w = 0;

  bool operator==(const SeparatorWitness&) const = default;
};

struct ConnectivityResult {
  enum class Reason {
    kConnected,       // the graph is k-connected
    kTooFewVertices,  // n <= k; K_n is only (n-1)-connected
    kSeparator,       // `witness` holds a cut of size < k
  };

  Reason reason = Reason::kConnected;
  std::optional<SeparatorWitness> witness;

  explicit operator bool() const noexcept { return reason == Reason::kConnected; }
};

// k-connectivity via Menger: unit-capacity max-flow on the vertex-split graph,
// evaluated over Even's pair schedule (each of the first k vertices against
// every later non-neighbor). On failure the witness is a minimum cut between
// the first failing pair. Throws for k == 0.
ConnectivityResult vertex_connectivity_at_least(const Graph& g, std::size_t k);

// Local connectivity between non-adjacent s and t, capped at `limit`.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit);

inline constexpr std::size_t kDefaultSeparatorEnumerationCap = 14;

// Every inclusion-minimal u-w separator (for some non-adjacent pair u, w) of
// size at most max_size, ordered by size then lexicographically. For each
// separator the reported pair is the smallest vertex of the first two full
// components of G - S. Exponential; refuses graphs above `vertex_cap`.
std::vector<SeparatorWitness> enumerate_minimal_separators(
    const Graph& g, std::size_t max_size,
    std::size_t vertex_cap = kDefaultSeparatorEnumerationCap);

}  // namespace glp
