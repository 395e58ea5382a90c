#include "glpart/verify.hpp"

#include <algorithm>
#include <cstdlib>

namespace glp {

std::string DeviationMode::describe() const {
  switch (kind) {
    case Kind::kExact:
      return "exact";
    case Kind::kStrictWindow:
      return "window:" + std::to_string(delta);
    case Kind::kSlack:
      return "slack:" + std::to_string(delta);
  }
  return "?";
}

VerificationReport verify_partition(const WeightedGraph& g, const PartitionRequest& request,
                                    const GLPartition& partition, const DeviationMode& mode) {
  VerificationReport report;
  const std::size_t n = g.graph().vertex_count();
  auto fail = [&](std::string why) {
    if (report.first_violation.empty()) report.first_violation = std::move(why);
  };

  if (partition.parts.size() != request.k() || request.demands.size() != request.k()) {
    fail("expected " + std::to_string(request.k()) + " parts, got " +
         std::to_string(partition.parts.size()));
    return report;
  }

  std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
  report.disjoint = true;
  bool in_range = true;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    for (Vertex v : partition.parts[i]) {
      if (v >= n) {
        in_range = false;
        fail("part " + std::to_string(i) + " names vertex " + std::to_string(v) +
             " outside the graph");
        continue;
      }
      if (owner[v] != static_cast<std::size_t>(-1)) {
        report.disjoint = false;
        fail("vertex " + std::to_string(v) + " appears in parts " + std::to_string(owner[v]) +
             " and " + std::to_string(i));
      }
      owner[v] = i;
    }
  }
  report.covering = std::all_of(owner.begin(), owner.end(),
                                [](std::size_t o) { return o != static_cast<std::size_t>(-1); });
  if (!report.covering) {
    const auto missing = std::find(owner.begin(), owner.end(), static_cast<std::size_t>(-1));
    fail("vertex " + std::to_string(missing - owner.begin()) + " is in no part");
  }

  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const auto& part = partition.parts[i];
    PartRecord rec;
    rec.size = part.size();
    rec.demand = request.demands[i];
    std::vector<Vertex> valid;
    for (Vertex v : part) {
      if (v < n) valid.push_back(v);
    }
    rec.weight = g.weight_of(valid);
    rec.has_terminal = std::find(part.begin(), part.end(), request.terminals[i]) != part.end();
    rec.connected = !valid.empty() && valid.size() == part.size() &&
                    is_connected_set(g.graph(), valid);

    const auto size = static_cast<Weight>(rec.size);
    switch (mode.kind) {
      case DeviationMode::Kind::kExact:
        rec.deviation = std::abs(size - rec.demand);
        rec.demand_ok = rec.deviation == 0;
        break;
      case DeviationMode::Kind::kStrictWindow:
        rec.deviation = std::abs(rec.weight - rec.demand);
        rec.demand_ok = rec.deviation < mode.delta;
        break;
      case DeviationMode::Kind::kSlack:
        rec.deviation = std::abs(size - rec.demand);
        rec.demand_ok = rec.deviation <= mode.delta;
        break;
    }

    const std::string label = "part " + std::to_string(i);
    if (part.empty()) fail(label + " is empty");
    if (!rec.has_terminal) fail(label + " misses its terminal " +
                                std::to_string(request.terminals[i]));
    if (!rec.connected && !part.empty()) fail(label + " is not connected");
    if (!rec.demand_ok) {
      fail(label + " violates " + mode.describe() + ": size " + std::to_string(rec.size) +
           ", weight " + std::to_string(rec.weight) + ", demand " + std::to_string(rec.demand));
    }
    report.parts.push_back(rec);
  }

  report.pass = in_range && report.disjoint && report.covering &&
                std::all_of(report.parts.begin(), report.parts.end(),
                            [](const PartRecord& r) { return r.ok(); });
  return report;
}

}  // namespace glp
