#include "glpart/generators.hpp"

#include <algorithm>
#include <set>

#include "glpart/almost_chordal.hpp"
#include "glpart/connectivity.hpp"

namespace glp {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InvalidArgument("Rng::uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return next();
  const std::uint64_t range = span + 1;
  // Reject the top partial bucket so every value is equally likely.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return lo + x % range;
}

std::size_t Rng::index(std::size_t size) {
  if (size == 0) throw InvalidArgument("Rng::index: empty range");
  return static_cast<std::size_t>(uniform(0, size - 1));
}

Graph generate_ktree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw InvalidArgument("generate_ktree: k must be positive");
  if (n <= k) throw InvalidArgument("generate_ktree: need n >= k + 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  }
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex skip = 0; skip <= k; ++skip) {
    std::vector<Vertex> c;
    for (Vertex u = 0; u <= k; ++u) {
      if (u != skip) c.push_back(u);
    }
    cliques.push_back(std::move(c));
  }
  for (Vertex v = static_cast<Vertex>(k + 1); v < n; ++v) {
    const std::vector<Vertex> base = cliques[rng.index(cliques.size())];
    for (Vertex u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<Vertex> c = base;
      c[drop] = v;
      cliques.push_back(std::move(c));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate_chordal(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw InvalidArgument("generate_chordal: k must be positive");
  if (n <= k) throw InvalidArgument("generate_chordal: need n >= k + 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cliques(1);
  for (Vertex u = 0; u <= k; ++u) {
    cliques[0].push_back(u);
    for (Vertex v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  }
  for (Vertex v = static_cast<Vertex>(k + 1); v < n; ++v) {
    const std::size_t pick = rng.index(cliques.size());
    std::vector<Vertex> base = cliques[pick];
    const std::size_t size =
        static_cast<std::size_t>(rng.uniform(k, std::min(base.size(), k + 2)));
    if (size == base.size()) {
      for (Vertex u : base) edges.emplace_back(u, v);
      cliques[pick].push_back(v);
      continue;
    }
    rng.shuffle(base);
    base.resize(size);
    std::sort(base.begin(), base.end());
    for (Vertex u : base) edges.emplace_back(u, v);
    base.push_back(v);
    cliques.push_back(std::move(base));
  }
  return Graph::from_edges(n, edges);
}

namespace {

// z keeps its id as z1 and z2 is appended; z1 loses b, z2 loses a.
Graph split_vertex(const Graph& g, Vertex z, Vertex a, Vertex b) {
  const auto z2 = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e == Edge(z, b)) continue;
    edges.push_back(e);
  }
  for (Vertex u : g.neighbors(z)) {
    if (u != a) edges.emplace_back(u, z2);
  }
  edges.emplace_back(z, z2);
  return Graph::from_edges(g.vertex_count() + 1, edges);
}

struct Split {
  Vertex z;
  Vertex a;
  Vertex b;
};

// Splits that do not immediately create a house: the vertices seeing the new
// cycle z1-a-b-z2 in two consecutive places must see all of it.
std::vector<Split> split_candidates(const Graph& g) {
  std::vector<Split> out;
  for (Vertex z = 0; z < g.vertex_count(); ++z) {
    const auto nz = g.neighbors(z);
    bool simplicial = true;
    for (std::size_t i = 0; i < nz.size() && simplicial; ++i) {
      for (std::size_t j = i + 1; j < nz.size() && simplicial; ++j) {
        simplicial = g.has_edge(nz[i], nz[j]);
      }
    }
    if (!simplicial) continue;
    for (std::size_t i = 0; i < nz.size(); ++i) {
      for (std::size_t j = i + 1; j < nz.size(); ++j) {
        const Vertex a = nz[i];
        const Vertex b = nz[j];
        bool ok = true;
        for (Vertex u : g.neighbors(a)) {
          if (u != z && u != b && g.has_edge(u, b) && !g.has_edge(u, z)) {
            ok = false;
            break;
          }
        }
        if (ok) out.push_back({z, a, b});
      }
    }
  }
  return out;
}

}  // namespace

namespace {

AlmostChordalGraph split_from_base(std::size_t base_n, std::size_t k, std::size_t cycles,
                                   std::uint64_t seed) {
  AlmostChordalGraph out{generate_chordal(base_n, k, seed), 0};
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  constexpr std::size_t kTriesPerCycle = 200;

  for (std::size_t want = 0; want < cycles; ++want) {
    std::vector<Split> candidates = split_candidates(out.graph);
    rng.shuffle(candidates);
    bool placed = false;
    for (std::size_t i = 0; i < candidates.size() && i < kTriesPerCycle && !placed; ++i) {
      Split s = candidates[i];
      if (rng.uniform(0, 1) == 1) std::swap(s.a, s.b);
      Graph candidate = split_vertex(out.graph, s.z, s.a, s.b);
      const C4Catalog catalog = enumerate_induced_c4(candidate);
      if (catalog.size() != out.cycles + 1) continue;
      if (!is_hh_i42_free(candidate, catalog)) continue;
      if (!vertex_connectivity_at_least(candidate, k)) continue;
      out.graph = std::move(candidate);
      ++out.cycles;
      placed = true;
    }
    if (!placed) break;
  }
  return out;
}

}  // namespace

AlmostChordalGraph generate_almost_chordal(std::size_t n, std::size_t k, std::size_t cycles,
                                           std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("generate_almost_chordal: need k >= 2");
  const std::size_t base_n = std::max(k + 1, n > cycles ? n - cycles : 0);
  // Some bases have too few places for a split; retry on a few derived bases
  // and keep the first that reaches the target (or the best one).
  constexpr std::uint64_t kBases = 8;
  AlmostChordalGraph best;
  for (std::uint64_t r = 0; r < kBases; ++r) {
    AlmostChordalGraph got = split_from_base(base_n, k, cycles, seed + r * 0x2545f4914f6cdd1dULL);
    if (r == 0 || got.cycles > best.cycles) best = std::move(got);
    if (best.cycles == cycles) break;
  }
  return best;
}

std::vector<Weight> random_weights(std::size_t n, Weight max_weight, Rng& rng) {
  if (max_weight < 1) throw InvalidArgument("random_weights: max_weight must be >= 1");
  std::vector<Weight> w(n);
  for (auto& x : w) x = static_cast<Weight>(rng.uniform(1, static_cast<std::uint64_t>(max_weight)));
  return w;
}

PartitionRequest random_request(const WeightedGraph& g, std::size_t k, Rng& rng) {
  const std::size_t n = g.graph().vertex_count();
  if (k == 0 || k > n) throw InvalidArgument("random_request: need 1 <= k <= n");
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  rng.shuffle(ids);
  PartitionRequest req;
  req.terminals.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k));

  Weight spare = g.total_weight();
  for (Vertex t : req.terminals) spare -= g.weight(t);
  std::vector<Weight> cuts{0, spare};
  for (std::size_t i = 0; i + 1 < k; ++i) {
    cuts.push_back(static_cast<Weight>(rng.uniform(0, static_cast<std::uint64_t>(spare))));
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i < k; ++i) {
    req.demands.push_back(g.weight(req.terminals[i]) + cuts[i + 1] - cuts[i]);
  }
  return req;
}

}  // namespace glp
