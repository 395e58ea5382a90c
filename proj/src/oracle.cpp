#include "glpart/oracle.hpp"

#include <algorithm>
#include <string>

namespace glp {

namespace {

constexpr std::size_t kFree = static_cast<std::size_t>(-1);

class LabelSearch {
 public:
  LabelSearch(const Graph& g, const PartitionRequest& request)
      : g_(g), request_(request), label_(g.vertex_count(), kFree), size_(request.k(), 1) {
    for (std::size_t i = 0; i < request.k(); ++i) label_[request.terminals[i]] = i;
    order_ = bfs_order();
  }

  std::optional<GLPartition> run() {
    if (!search(0)) return std::nullopt;
    GLPartition out;
    out.parts.resize(request_.k());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) out.parts[label_[v]].push_back(v);
    return out;
  }

 private:
  // Non-terminals in BFS order from the terminal set, so each part grows
  // through vertices near what it already holds.
  std::vector<Vertex> bfs_order() const {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::vector<Vertex> queue(request_.terminals.begin(), request_.terminals.end());
    for (Vertex t : queue) seen[t] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (Vertex u : g_.neighbors(queue[qi])) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!seen[v]) queue.push_back(v);
    }
    return {queue.begin() + static_cast<std::ptrdiff_t>(request_.k()), queue.end()};
  }

  // Every part must still be able to become connected using free vertices.
  bool parts_can_connect() const {
    const std::size_t n = g_.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    for (std::size_t i = 0; i < request_.k(); ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      const Vertex t = request_.terminals[i];
      stack.assign(1, t);
      seen[t] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g_.neighbors(v)) {
          if (seen[u] || (label_[u] != i && label_[u] != kFree)) continue;
          seen[u] = 1;
          if (label_[u] == i) ++reached;
          stack.push_back(u);
        }
      }
      if (reached != size_[i]) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (!parts_can_connect()) return false;
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (std::size_t i = 0; i < request_.k(); ++i) {
      if (static_cast<Weight>(size_[i]) >= request_.demands[i]) continue;
      label_[v] = i;
      ++size_[i];
      if (search(depth + 1)) return true;
      --size_[i];
      label_[v] = kFree;
    }
    return false;
  }

  const Graph& g_;
  const PartitionRequest& request_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> order_;
};

}  // namespace

std::optional<GLPartition> brute_force_gl(const Graph& g, const PartitionRequest& request,
                                          std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap) {
    throw CapExceeded("brute_force_gl: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(vertex_cap));
  }
  if (request.k() < 2) throw InvalidArgument("brute_force_gl: need k >= 2 terminals");
  if (request.demands.size() != request.k()) {
    throw InvalidArgument("brute_force_gl: terminal and demand counts differ");
  }
  std::vector<char> seen(n, 0);
  Weight total = 0;
  for (std::size_t i = 0; i < request.k(); ++i) {
    const Vertex t = request.terminals[i];
    if (t >= n || seen[t]) throw InvalidArgument("brute_force_gl: terminals must be distinct ids");
    seen[t] = 1;
    if (request.demands[i] < 1) throw InvalidArgument("brute_force_gl: demands must be positive");
    total += request.demands[i];
  }
  if (total != static_cast<Weight>(n)) {
    throw InvalidArgument("brute_force_gl: demands must sum to n");
  }
  auto result = LabelSearch(g, request).run();
  if (result) result->deviation = 0;
  return result;
}

}  // namespace glp
