#include "glpart/connectivity.hpp"

#include <algorithm>
#include <string>

namespace glp {

namespace {

// Vertex-split network: in(v) = 2v, out(v) = 2v + 1, an arc in(v) -> out(v)
// of capacity 1 and arcs out(u) -> in(v) of capacity `wide` for every edge.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : node_count_(2 * g.vertex_count()) {
    head_.assign(node_count_, kNone);
    const int wide = static_cast<int>(g.vertex_count()) + 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v, wide);
      add_arc(2 * e.v + 1, 2 * e.u, wide);
    }
    initial_.assign(cap_.begin(), cap_.end());
    parent_arc_.resize(node_count_);
    queue_.reserve(node_count_);
  }

  // Max flow from out(s) to in(t), stopping once `limit` is reached.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    std::copy(initial_.begin(), initial_.end(), cap_.begin());
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    std::size_t flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

  // After max_flow: vertices whose in-node is reachable in the residual graph
  // but whose out-node is not.
  std::vector<Vertex> min_cut(Vertex s) {
    std::vector<char> reached(node_count_, 0);
    bfs(2 * s + 1, kNone, reached);
    std::vector<Vertex> cut;
    for (Vertex v = 0; 2 * v < node_count_; ++v) {
      if (reached[2 * v] && !reached[2 * v + 1]) cut.push_back(v);
    }
    return cut;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void add_arc(std::size_t from, std::size_t to, int cap) {
    push(from, to, cap);
    push(to, from, 0);
  }

  void push(std::size_t from, std::size_t to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = to_.size() - 1;
  }

  // Returns true when `sink` was reached (sink == kNone explores everything).
  bool bfs(std::size_t source, std::size_t sink, std::vector<char>& reached) {
    queue_.clear();
    queue_.push_back(source);
    reached[source] = 1;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::size_t x = queue_[qi];
      for (std::size_t a = head_[x]; a != kNone; a = next_[a]) {
        const std::size_t y = to_[a];
        if (cap_[a] <= 0 || reached[y]) continue;
        reached[y] = 1;
        parent_arc_[y] = a;
        if (y == sink) return true;
        queue_.push_back(y);
      }
    }
    return false;
  }

  bool augment(std::size_t source, std::size_t sink) {
    std::vector<char> reached(node_count_, 0);
    if (!bfs(source, sink, reached)) return false;
    for (std::size_t y = sink; y != source;) {
      const std::size_t a = parent_arc_[y];
      cap_[a] -= 1;
      cap_[a ^ 1] += 1;
      y = to_[a ^ 1];
    }
    return true;
  }

  std::size_t node_count_;
  std::vector<std::size_t> head_, next_, to_;
  std::vector<int> cap_, initial_;
  std::vector<std::size_t> parent_arc_;
  std::vector<std::size_t> queue_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  if (!g.contains(s) || !g.contains(t) || s == t) {
    throw InvalidArgument("local_vertex_connectivity: need two distinct vertices");
  }
  if (g.has_edge(s, t)) throw InvalidArgument("local_vertex_connectivity: s and t are adjacent");
  SplitNetwork net(g);
  return net.max_flow(s, t, limit);
}

ConnectivityResult vertex_connectivity_at_least(const Graph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("vertex_connectivity_at_least: k must be at least 1");
  ConnectivityResult result;
  const std::size_t n = g.vertex_count();
  if (n <= k) {
    result.reason = ConnectivityResult::Reason::kTooFewVertices;
    return result;
  }

  std::size_t components = 0;
  const auto label = component_labels(g, std::vector<char>(n, 0), &components);
  if (components > 1) {
    Vertex other = 0;
    while (label[other] == label[0]) ++other;
    result.reason = ConnectivityResult::Reason::kSeparator;
    result.witness = SeparatorWitness{{}, 0, other};
    return result;
  }
  if (k == 1) return result;

  SplitNetwork net(g);
  for (Vertex s = 0; s < k; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t)) continue;
      if (net.max_flow(s, t, k) < k) {
        result.reason = ConnectivityResult::Reason::kSeparator;
        result.witness = SeparatorWitness{net.min_cut(s), s, t};
        return result;
      }
    }
  }
  return result;
}

std::vector<SeparatorWitness> enumerate_minimal_separators(const Graph& g, std::size_t max_size,
                                                           std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap) {
    throw CapExceeded("enumerate_minimal_separators: n = " + std::to_string(n) +
                      " exceeds cap " + std::to_string(vertex_cap));
  }
  std::vector<SeparatorWitness> out;
  max_size = std::min(max_size, n);

  std::vector<char> removed(n, 0);
  std::vector<Vertex> chosen;
  // Subsets of each size in lexicographic order.
  for (std::size_t size = 0; size <= max_size; ++size) {
    chosen.resize(size);
    for (std::size_t i = 0; i < size; ++i) chosen[i] = static_cast<Vertex>(i);
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (Vertex v : chosen) removed[v] = 1;
      std::size_t comps = 0;
      const auto label = component_labels(g, removed, &comps);
      if (comps >= 2) {
        // A component is full when every separator vertex has a neighbor in it.
        std::vector<std::size_t> touching(comps, 0);
        std::vector<std::size_t> stamp(comps, static_cast<std::size_t>(-1));
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          for (Vertex u : g.neighbors(chosen[i])) {
            const std::size_t c = label[u];
            if (c == kNoComponent || stamp[c] == i) continue;
            stamp[c] = i;
            ++touching[c];
          }
        }
        std::vector<Vertex> representatives;
        std::vector<char> taken(comps, 0);
        for (Vertex v = 0; v < n && representatives.size() < 2; ++v) {
          const std::size_t c = label[v];
          if (c == kNoComponent || taken[c] || touching[c] != chosen.size()) continue;
          taken[c] = 1;
          representatives.push_back(v);
        }
        if (representatives.size() == 2) {
          out.push_back({chosen, representatives[0], representatives[1]});
        }
      }
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && chosen[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < size; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace glp
