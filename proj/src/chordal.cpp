#include "glpart/chordal.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace glp {

Peo Peo::from_order(std::vector<Vertex> order) {
  Peo p;
  p.sigma.assign(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size() || p.sigma[order[i]] != 0) {
      throw InvalidArgument("ordering is not a permutation of 0..n-1");
    }
    p.sigma[order[i]] = i + 1;
  }
  p.order = std::move(order);
  return p;
}

std::vector<Vertex> mcs_order(const Graph& g) {
  const std::size_t n = g.vertex_count();

  // buckets[c] holds unnumbered vertices with c numbered neighbors.
  std::vector<std::set<Vertex>> buckets(n);
  std::vector<std::size_t> count(n, 0);
  std::vector<char> numbered(n, 0);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);

  std::vector<Vertex> order(n);
  std::size_t top = 0;
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    while (buckets[top].empty()) --top;
    const Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    numbered[v] = 1;
    order[remaining - 1] = v;
    for (Vertex u : g.neighbors(v)) {
      if (numbered[u]) continue;
      buckets[count[u]].erase(u);
      ++count[u];
      buckets[count[u]].insert(u);
      top = std::max(top, count[u]);
    }
  }

  return order;
}

PeoResult compute_peo(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidArgument("compute_peo: empty graph");

  PeoResult result;
  Peo p = Peo::from_order(mcs_order(g));

  // Tarjan-Yannakakis check: the later neighbors of v, minus the earliest of
  // them (its parent), must all be adjacent to that parent.
  for (Vertex v : p.order) {
    Vertex parent = v;
    std::size_t parent_sigma = n + 1;
    for (Vertex u : g.neighbors(v)) {
      if (p.sigma[u] > p.sigma[v] && p.sigma[u] < parent_sigma) {
        parent = u;
        parent_sigma = p.sigma[u];
      }
    }
    if (parent == v) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u != parent && p.sigma[u] > p.sigma[v] && !g.has_edge(parent, u)) {
        result.witness = NonChordalWitness{v, Edge(parent, u)};
        return result;
      }
    }
  }
  result.peo = std::move(p);
  return result;
}

bool is_peo(const Graph& g, const Peo& p) {
  const std::size_t n = g.vertex_count();
  if (p.sigma.size() != n || p.order.size() != n) {
    throw InvalidArgument("is_peo: ordering size does not match the graph");
  }
  std::vector<char> seen(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t s = p.sigma[v];
    if (s < 1 || s > n || seen[s]) throw InvalidArgument("is_peo: sigma is not a bijection");
    seen[s] = 1;
    if (p.order[s - 1] != v) throw InvalidArgument("is_peo: order is not the inverse of sigma");
  }

  std::vector<Vertex> later;
  for (Vertex v = 0; v < n; ++v) {
    later.clear();
    for (Vertex u : g.neighbors(v)) {
      if (p.sigma[u] > p.sigma[v]) later.push_back(u);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.has_edge(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return static_cast<bool>(compute_peo(g));
}

}  // namespace glp
