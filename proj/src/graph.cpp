#include "glpart/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace glp {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range (n = " +
                          std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidArgument("self loop at vertex " + std::to_string(e.u));
    if (e.v >= vertex_count) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.v) + " out of range");
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("repeated edge at vertex " + std::to_string(v));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adjacency_.at(u);
  const auto& b = adjacency_.at(v);
  const auto& shorter = a.size() <= b.size() ? a : b;
  const Vertex target = a.size() <= b.size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

WeightedGraph::WeightedGraph(Graph graph)
    : WeightedGraph(graph, std::vector<Weight>(graph.vertex_count(), 1)) {}

WeightedGraph::WeightedGraph(Graph graph, std::vector<Weight> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (weights_.size() != graph_.vertex_count()) {
    throw InvalidArgument("expected " + std::to_string(graph_.vertex_count()) +
                          " weights, got " + std::to_string(weights_.size()));
  }
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v] < 1) {
      throw InvalidArgument("weight of vertex " + std::to_string(v) + " must be positive");
    }
    max_weight_ = std::max(max_weight_, weights_[v]);
    total_weight_ += weights_[v];
  }
}

Weight WeightedGraph::weight_of(std::span<const Vertex> vertices) const {
  Weight sum = 0;
  for (Vertex v : vertices) sum += weights_.at(v);
  return sum;
}

MergeMap MergeMap::identity(std::size_t n) {
  MergeMap m;
  m.images.resize(n);
  for (Vertex v = 0; v < n; ++v) m.images[v] = {v};
  return m;
}

std::size_t MergeMap::original_count() const {
  std::size_t total = 0;
  for (const auto& image : images) total += image.size();
  return total;
}

std::vector<Vertex> MergeMap::expand(std::span<const Vertex> vertices) const {
  std::vector<Vertex> out;
  for (Vertex v : vertices) {
    const auto& image = images.at(v);
    out.insert(out.end(), image.begin(), image.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

MergeMap MergeMap::then(const MergeMap& next) const {
  MergeMap out;
  out.images.reserve(next.images.size());
  for (const auto& image : next.images) out.images.push_back(expand(image));
  return out;
}

namespace {

// Shared relabel-and-rebuild for one or more disjoint contractions.
// partner[v] is the other endpoint of v's contracted edge, or v itself.
Contraction contract_with_partners(const Graph& g, const std::vector<Vertex>& partner) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> new_id(n);
  MergeMap merge;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = partner[v];
    if (p < v) {
      new_id[v] = new_id[p];
      continue;
    }
    new_id[v] = static_cast<Vertex>(merge.images.size());
    if (p == v) {
      merge.images.push_back({v});
    } else {
      merge.images.push_back({v, p});
    }
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const Vertex a = new_id[e.u];
    const Vertex b = new_id[e.v];
    if (a != b) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {Graph::from_edges(merge.images.size(), edges), std::move(merge)};
}

std::vector<Vertex> partners_for(const Graph& g, std::span<const Edge> contracted) {
  std::vector<Vertex> partner(g.vertex_count());
  std::iota(partner.begin(), partner.end(), Vertex{0});
  for (const Edge& e : contracted) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (e.u == e.v) throw InvalidArgument("cannot contract a vertex with itself");
    if (!g.has_edge(e.u, e.v)) {
      throw InvalidArgument("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is not an edge");
    }
    if (partner[e.u] != e.u || partner[e.v] != e.v) {
      throw InvalidArgument("contracted edges must be vertex-disjoint");
    }
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

}  // namespace

Contraction contract_edge(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw InvalidArgument("cannot contract a vertex with itself");
  const Edge e(u, v);
  return contract_edges(g, std::span<const Edge>(&e, 1));
}

Contraction contract_edges(const Graph& g, std::span<const Edge> edges) {
  return contract_with_partners(g, partners_for(g, edges));
}

WeightedContraction contract_edges(const WeightedGraph& g, std::span<const Edge> edges) {
  Contraction c = contract_edges(g.graph(), edges);
  std::vector<Weight> weights;
  weights.reserve(c.merge.size());
  for (const auto& image : c.merge.images) weights.push_back(g.weight_of(image));
  return {WeightedGraph(std::move(c.graph), std::move(weights)), std::move(c.merge)};
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> kept(vertices.begin(), vertices.end());
  for (Vertex v : kept) check_vertex(g, v);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (Vertex i = 0; i < kept.size(); ++i) local[kept[i]] = i;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < kept.size(); ++i) {
    for (Vertex u : g.neighbors(kept[i])) {
      if (local[u] != kAbsent && i < local[u]) edges.emplace_back(i, local[u]);
    }
  }
  return {Graph::from_edges(kept.size(), edges), std::move(kept)};
}

Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : extra) {
    check_vertex(g, e.u);
    check_vertex(g, e.v);
    if (e.u == e.v) throw InvalidArgument("self loop");
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(g.vertex_count(), edges);
}

bool is_connected_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InvalidArgument("is_connected_set: empty vertex set");
  std::vector<char> in_set(g.vertex_count(), 0);
  std::size_t distinct = 0;
  for (Vertex v : s) {
    check_vertex(g, v);
    if (!in_set[v]) {
      in_set[v] = 1;
      ++distinct;
    }
  }
  std::vector<Vertex> stack{s.front()};
  in_set[s.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (in_set[u] == 1) {
        in_set[u] = 2;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == distinct;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::size_t count = 0;
  component_labels(g, std::vector<char>(g.vertex_count(), 0), &count);
  return count == 1;
}

std::vector<std::size_t> component_labels(const Graph& g, const std::vector<char>& removed,
                                          std::size_t* component_count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> label(n, kNoComponent);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (removed[root] || label[root] != kNoComponent) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (!removed[u] && label[u] == kNoComponent) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  if (component_count) *component_count = next;
  return label;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

}  // namespace glp
