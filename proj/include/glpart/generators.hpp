#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "glpart/graph.hpp"
#include "glpart/partition.hpp"

namespace glp {

// Seeded source for every generator. mt19937_64 output is fixed by the
// standard; the distributions are not, so bounded sampling is done here to
// keep streams identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  // Uniform in [lo, hi]. Throws InvalidArgument if lo > hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::size_t index(std::size_t size);  // uniform in [0, size)

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[index(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Random k-tree on n vertices: K_{k+1}, then each new vertex joins a
// uniformly chosen existing k-clique. Throws InvalidArgument if n <= k or k == 0.
Graph generate_ktree(std::size_t n, std::size_t k, std::uint64_t seed);

// Random k-connected chordal graph: K_{k+1}, then each new vertex joins a
// random subset of size >= k of a random maximal clique (the whole clique
// when it has at most k + 2 vertices), so maximal cliques have k+1..k+3
// vertices. Same errors as generate_ktree.
Graph generate_chordal(std::size_t n, std::size_t k, std::uint64_t seed);

struct AlmostChordalGraph {
  Graph graph;
  std::size_t cycles = 0;  // induced C4 actually created
};

// generate_chordal followed by vertex splits, each turning a triangle z-a-b
// into the induced cycle z1-a-b-z2. Only splits that can stay in the
// hole/house/shared-C4-free class are tried (z simplicial, no common neighbor
// of a and b outside N[z]); one is kept when the result is in the class, is
// k-connected, and has exactly one more induced C4. A k-tree base would not
// do: its edges all lie in at least two maximal cliques once n > k + 2, and
// such splits always create a house. Best effort: up to eight derived seeds
// are tried for the base, and `cycles` reports how many were achieved. The
// base has n - cycles vertices (at least k + 1), so n is met whenever all
// requested cycles are.
AlmostChordalGraph generate_almost_chordal(std::size_t n, std::size_t k, std::size_t cycles,
                                           std::uint64_t seed);

// Weights uniform in [1, max_weight].
std::vector<Weight> random_weights(std::size_t n, Weight max_weight, Rng& rng);

// k distinct random terminals; demands are w(t_i) plus a random weak
// composition of the remaining weight, so they sum to w(V).
PartitionRequest random_request(const WeightedGraph& g, std::size_t k, Rng& rng);

}  // namespace glp
