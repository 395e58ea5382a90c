#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "glpart/graph.hpp"

namespace glp {

// Perfect elimination ordering. sigma[v] is the 1-based position of v,
// order[i - 1] is the vertex at position i; the two are inverse bijections.
struct Peo {
  std::vector<std::size_t> sigma;
  std::vector<Vertex> order;

  static Peo from_order(std::vector<Vertex> order);

  bool operator==(const Peo&) const = default;
};

// Why Maximum Cardinality Search did not yield a p.e.o.: `vertex` has two
// later neighbors joined by no edge (`missing_edge`).
struct NonChordalWitness {
  Vertex vertex = 0;
  Edge missing_edge;
};

struct PeoResult {
  std::optional<Peo> peo;
  std::optional<NonChordalWitness> witness;  // set iff !peo

  explicit operator bool() const noexcept { return peo.has_value(); }
};

// Maximum Cardinality Search ordering (v_1..v_n), ties broken towards the
// smallest vertex id; the first vertex MCS selects is placed last. A p.e.o.
// exactly when g is chordal.
std::vector<Vertex> mcs_order(const Graph& g);

// Maximum Cardinality Search, ties broken towards the smallest vertex id. The
// first selected vertex receives sigma = n. Runs in O((n + m) log n).
PeoResult compute_peo(const Graph& g);

// Direct check of the definition: for every v, the neighbors of v that come
// later in the ordering are pairwise adjacent. Throws if `p` is not a
// bijection on V(g).
bool is_peo(const Graph& g, const Peo& p);

bool is_chordal(const Graph& g);

}  // namespace glp
