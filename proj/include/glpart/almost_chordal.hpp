#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glpart/gl_chordal.hpp"
#include "glpart/graph.hpp"

namespace glp {

// Induced 4-cycle in canonical form: v[0] is the smallest vertex, v[2] its
// opposite corner, v[1] < v[3] the remaining two. Cyclic order is
// v[0]-v[1]-v[2]-v[3]-v[0].
struct InducedC4 {
  std::array<Vertex, 4> v{};

  bool contains(Vertex x) const noexcept {
    return v[0] == x || v[1] == x || v[2] == x || v[3] == x;
  }
  static InducedC4 canonical(Vertex a, Vertex b, Vertex c, Vertex d);  // cyclic a-b-c-d

  auto operator<=>(const InducedC4&) const = default;
};

struct C4Catalog {
  std::vector<InducedC4> cycles;                   // sorted; index = cycle id
  std::vector<std::vector<std::size_t>> membership;  // vertex -> cycle ids

  std::size_t size() const noexcept { return cycles.size(); }
};

C4Catalog enumerate_induced_c4(const Graph& g);

// Why a graph is outside the hole/house/I4^2-free class.
struct ClassViolation {
  enum class Kind {
    kHole,       // vertices of a chordless cycle of length >= 5, in cyclic order
    kHouse,      // the body C4 in cyclic order followed by the roof vertex
    kSharedC4,   // two induced C4 (4 + 4 vertices) sharing >= 2 vertices
  };
  Kind kind = Kind::kHole;
  std::vector<Vertex> vertices;

  std::string kind_name() const;
};

struct ClassCheck {
  std::optional<ClassViolation> violation;

  explicit operator bool() const noexcept { return !violation.has_value(); }
};

// Membership in the class of graphs with no hole, no induced house and no
// two induced C4 sharing more than one vertex. Polynomial: houses and shared
// cycles come from the C4 catalog; holes are found per edge by a component
// search that avoids the closed neighborhoods of its endpoints.
ClassCheck is_hh_i42_free(const Graph& g);
ClassCheck is_hh_i42_free(const Graph& g, const C4Catalog& catalog);

// cycle is a subset of N(v). Throws if v lies on the cycle.
bool universal_to(const Graph& g, Vertex v, const InducedC4& cycle);

// Bipartite incidence between induced C4 ("big" vertices) and graph vertices
// on at least two of them ("small" vertices).
struct C4IncidenceGraph {
  std::size_t big_count = 0;
  std::vector<Vertex> small_vertices;                       // sorted graph ids
  std::vector<std::pair<std::size_t, std::size_t>> edges;   // (cycle id, small index)
  bool acyclic = true;
};

C4IncidenceGraph build_c4_incidence(const C4Catalog& catalog);

struct TerminalChords {
  Graph graph;
  std::vector<Edge> added;
};

// Joins every pair of non-adjacent terminals lying on a common induced C4,
// repeating until no such pair is left.
TerminalChords add_terminal_chords(const Graph& g, std::span<const Vertex> terminals);

struct ContractionPlan {
  std::vector<Edge> added_terminal_chords;
  std::vector<Edge> contraction_edges;  // E', in the chorded graph's ids
  WeightedGraph contracted_graph;       // G''
  MergeMap merge_map;                   // G'' vertex -> chorded-graph vertices
  std::vector<Vertex> terminal_relabel; // i -> G'' id of terminal i
  std::size_t initial_c4_count = 0;     // induced C4 after chord insertion
};

// Adds terminal chords, then repeatedly takes the lowest-id cycle that still
// has three vertices on no other remaining cycle and records one of its edges
// among those vertices for contraction, preferring an edge with no terminal
// endpoint. Contracts all recorded edges, summing weights.
//
// Postconditions are asserted (InvariantViolation): E' vertex-disjoint, no
// terminal-terminal edge, |E'| equals the cycle count, G'' chordal, and when
// `connectivity` is given, G'' is that connected. Throws PreconditionError
// kind "not-in-class" if no removable cycle exists or the incidence
// structure has a cycle.
ContractionPlan build_contraction_plan(const WeightedGraph& g, std::span<const Vertex> terminals,
                                       std::optional<std::size_t> connectivity = std::nullopt);
ContractionPlan build_contraction_plan(const Graph& g, std::span<const Vertex> terminals,
                                       std::optional<std::size_t> connectivity = std::nullopt);

struct AlmostChordalReport {
  GLPartition partition;
  ContractionPlan plan;                 // plan of the reduced (post-peeling) instance
  std::vector<std::size_t> peeled;      // request indices solved as singletons
  std::vector<Vertex> reduced_vertices; // reduced-instance id -> original id
  SolveStats stats;
};

// Full pipeline: peel parts whose demand equals their terminal's weight, add
// terminal chords, contract, run the weighted chordal solver on G'', unfold.
// Guarantees w_i - 2 w_max < w(S_i) < w_i + 2 w_max (deviation <= 1 for unit
// weights) with every part connected in the original graph.
AlmostChordalReport solve_almost_chordal(const WeightedGraph& g, const PartitionRequest& request,
                                         const SolveOptions& options = {});
GLPartition gl_partition_almost_chordal(const WeightedGraph& g, const PartitionRequest& request,
                                        const SolveOptions& options = {});

}  // namespace glp
