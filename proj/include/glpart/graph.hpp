#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "glpart/errors.hpp"

namespace glp {

using Weight = std::int64_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on dense ids 0..n-1. Adjacency lists are sorted and
// duplicate-free, so neighborhood intersection is a linear merge. Values are
// immutable once built; derived graphs come out of free functions below.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  // Rejects self loops, out-of-range endpoints and repeated edges.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v < adjacency_.size(); }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Graph plus positive integer vertex weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(Graph graph);  // unit weights
  WeightedGraph(Graph graph, std::vector<Weight> weights);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  Weight weight(Vertex v) const { return weights_.at(v); }
  Weight max_weight() const noexcept { return max_weight_; }
  Weight total_weight() const noexcept { return total_weight_; }
  Weight weight_of(std::span<const Vertex> vertices) const;
  bool unit_weights() const noexcept { return max_weight_ <= 1; }

  bool operator==(const WeightedGraph&) const = default;

 private:
  Graph graph_;
  std::vector<Weight> weights_;
  Weight max_weight_ = 0;
  Weight total_weight_ = 0;
};

// For each vertex of a derived graph, the sorted original ids it stands for.
// The images partition the original vertex set.
struct MergeMap {
  std::vector<std::vector<Vertex>> images;

  static MergeMap identity(std::size_t n);

  std::size_t size() const noexcept { return images.size(); }
  std::size_t original_count() const;
  // Union of the images of `vertices`, sorted.
  std::vector<Vertex> expand(std::span<const Vertex> vertices) const;
  // Merge map from the originals of *this to the vertices of `next`, where
  // `next` maps a graph derived from this one.
  MergeMap then(const MergeMap& next) const;

  bool operator==(const MergeMap&) const = default;
};

struct Contraction {
  Graph graph;
  MergeMap merge;
};

// Contract edge uv. Surviving vertices keep their relative id order; the
// merged vertex takes the slot of min(u, v).
Contraction contract_edge(const Graph& g, Vertex u, Vertex v);

// Contract a set of pairwise vertex-disjoint edges at once, same relabeling
// rule as contract_edge.
Contraction contract_edges(const Graph& g, std::span<const Edge> edges);

// Weighted variant: merged vertices carry the sum of their originals' weights.
struct WeightedContraction {
  WeightedGraph graph;
  MergeMap merge;
};
WeightedContraction contract_edges(const WeightedGraph& g, std::span<const Edge> edges);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] = id in the host graph, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Copy of g with extra edges; edges already present are ignored.
Graph with_edges(const Graph& g, std::span<const Edge> extra);

// True iff g[s] is connected. Throws on empty s or out-of-range ids.
bool is_connected_set(const Graph& g, std::span<const Vertex> s);

bool is_connected(const Graph& g);

// Component label per vertex (0-based, in order of smallest member), with
// vertices where `removed[v]` is set labelled kNoComponent.
inline constexpr std::size_t kNoComponent = static_cast<std::size_t>(-1);
std::vector<std::size_t> component_labels(const Graph& g, const std::vector<char>& removed,
                                          std::size_t* component_count = nullptr);

// Handy constructors used throughout tests and generators.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace glp
