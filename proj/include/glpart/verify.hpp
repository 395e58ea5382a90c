#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glpart/partition.hpp"
#include "glpart/graph.hpp"

namespace glp {

// Demand rule a partition is held to.
struct DeviationMode {
  enum class Kind {
    kExact,         // |S_i| = n_i
    kStrictWindow,  // w_i - delta < w(S_i) < w_i + delta
    kSlack,         // n_i - delta <= |S_i| <= n_i + delta
  };

  Kind kind = Kind::kExact;
  Weight delta = 0;

  static DeviationMode exact() { return {Kind::kExact, 0}; }
  static DeviationMode strict_window(Weight delta) { return {Kind::kStrictWindow, delta}; }
  static DeviationMode slack(Weight delta) { return {Kind::kSlack, delta}; }

  std::string describe() const;
};

struct PartRecord {
  std::size_t size = 0;
  Weight weight = 0;
  Weight demand = 0;
  bool connected = false;
  bool has_terminal = false;
  // |size - demand| in exact/slack mode, |weight - demand| in window mode.
  Weight deviation = 0;
  bool demand_ok = false;

  bool ok() const noexcept { return connected && has_terminal && demand_ok; }
};

struct VerificationReport {
  std::vector<PartRecord> parts;
  bool disjoint = false;
  bool covering = false;
  bool pass = false;
  std::string first_violation;  // empty on pass
};

// Independent check of a partition against `request` and `mode`.
// Connectivity is judged in `g` itself, so callers must pass the original
// graph. Violations are reported, never thrown.
VerificationReport verify_partition(const WeightedGraph& g, const PartitionRequest& request,
                                    const GLPartition& partition, const DeviationMode& mode);

}  // namespace glp
