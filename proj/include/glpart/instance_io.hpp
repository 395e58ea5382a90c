#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "glpart/graph.hpp"

namespace glp {

// A partition instance as stored on disk:
//
//   n m k
//   w_0 ... w_{n-1}
//   t_1 ... t_k
//   d_1 ... d_k
//   u v            (m lines, 0-based, u < v)
//
// Blank lines and anything after '#' are ignored.
struct Instance {
  WeightedGraph graph;
  std::vector<Vertex> terminals;
  std::vector<Weight> demands;

  std::size_t k() const noexcept { return terminals.size(); }
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
Instance read_instance_file(const std::filesystem::path& path);

void write_instance(std::ostream& out, const Instance& instance);
std::string format_instance(const Instance& instance);

}  // namespace glp
