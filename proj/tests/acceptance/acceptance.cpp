// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every threshold below is fixed here on purpose.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "glpart/almost_chordal.hpp"
#include "glpart/chordal.hpp"
#include "glpart/cli.hpp"
#include "glpart/connectivity.hpp"
#include "glpart/errors.hpp"
#include "glpart/generators.hpp"
#include "glpart/gl_chordal.hpp"
#include "glpart/oracle.hpp"
#include "glpart/verify.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace glp;

namespace {

// Criterion thresholds.
constexpr int kChordalInstances = 600;
constexpr double kChordalBudgetSec = 60.0;
constexpr int kWeightedInstances = 600;
constexpr Weight kMaxWeight = 7;
constexpr int kClassInstances = 240;
constexpr int kOracleInstances = 240;
constexpr double kOracleBudgetSec = 600.0;
constexpr int kRandomRecognition = 100;
constexpr int kStructureInstances = 120;
constexpr int kSeparatorInstances = 20;  // of which k >= 5
constexpr double kScalingRatio = 5.0;
constexpr int kScalingRepeats = 5;
constexpr double kPreprocessBudgetSec = 30.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail;
  if (!o.pass) std::cout << " | first failure: " << o.first_failure;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

std::string tag(const char* family, std::size_t n, std::size_t k, std::uint64_t seed) {
  std::ostringstream s;
  s << family << " n=" << n << " k=" << k << " seed=" << seed;
  return s.str();
}

// Runs fn, turning any library exception into a failure message.
bool guarded(Outcome& o, const std::string& where, const std::function<void()>& fn) {
  try {
    fn();
    return true;
  } catch (const std::exception& e) {
    o.fail(where + ": " + e.what());
    return false;
  }
}

// --- 1 ---------------------------------------------------------------------

Outcome chordal_exactness() {
  Outcome o;
  const auto t0 = Clock::now();
  int ok = 0;
  for (int i = 0; i < kChordalInstances; ++i) {
    const std::uint64_t seed = 1000 + i;
    Rng rng(seed);
    const std::size_t k = 2 + i % 5;
    const std::size_t n = rng.uniform(k + 1, 60);
    const std::string where = tag("ktree", n, k, seed);
    guarded(o, where, [&] {
      const Graph g = generate_ktree(n, k, seed);
      const WeightedGraph wg(g);
      const PartitionRequest r = random_request(wg, k, rng);
      const GLPartition p = gl_partition_chordal(g, r);
      const VerificationReport v = verify_partition(wg, r, p, DeviationMode::exact());
      if (p.deviation != 0) o.fail(where + ": deviation " + std::to_string(p.deviation));
      else if (!v.pass) o.fail(where + ": " + v.first_violation);
      else ++ok;
    });
  }
  const double secs = seconds_since(t0);
  if (secs >= kChordalBudgetSec) o.fail("runtime " + std::to_string(secs) + " s");
  o.detail = std::to_string(ok) + "/" + std::to_string(kChordalInstances) + " exact, " +
             std::to_string(secs) + " s (limit " + std::to_string(kChordalBudgetSec) + " s)";
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome weighted_window() {
  Outcome o;
  int ok = 0;
  Weight worst_balance = 0;
  for (int i = 0; i < kWeightedInstances; ++i) {
    const std::uint64_t seed = 5000 + i;
    Rng rng(seed);
    const std::size_t k = 2 + i % 5;
    const std::size_t n = rng.uniform(k + 1, 60);
    const bool ktree = i % 2 == 0;
    const std::string where = tag(ktree ? "ktree" : "chordal", n, k, seed);
    guarded(o, where, [&] {
      const Graph g = ktree ? generate_ktree(n, k, seed) : generate_chordal(n, k, seed);
      const WeightedGraph wg(g, random_weights(n, kMaxWeight, rng));
      const PartitionRequest r = random_request(wg, k, rng);
      const SolveReport rep = solve_chordal_weighted(wg, r, {true, true});
      worst_balance = std::max(worst_balance, rep.stats.max_abs_balance);
      if (rep.stats.iterations > n + k) {
        o.fail(where + ": " + std::to_string(rep.stats.iterations) + " iterations");
        return;
      }
      if (rep.stats.max_abs_balance >= wg.max_weight()) {
        o.fail(where + ": running balance reached w_max");
        return;
      }
      const VerificationReport v =
          verify_partition(wg, r, rep.partition, DeviationMode::strict_window(wg.max_weight()));
      if (!v.pass) o.fail(where + ": " + v.first_violation);
      else ++ok;
    });
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(kWeightedInstances) +
             " inside the strict w_max window with invariant checks on; largest balance " +
             std::to_string(worst_balance) + " (< w_max required)";
  return o;
}

// --- 3 and 4 -----------------------------------------------------------------

struct ClassInstance {
  Graph graph;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::string where;
};

// Generated members with at least one induced C4, n <= 50, k in [2, 5].
std::vector<ClassInstance> class_members(int count, std::size_t n_max, std::size_t k_min,
                                         std::size_t k_max, std::uint64_t seed0) {
  std::vector<ClassInstance> out;
  for (std::uint64_t seed = seed0; static_cast<int>(out.size()) < count && seed < seed0 + 20 * count; ++seed) {
    Rng rng(seed);
    const std::size_t k = k_min + seed % (k_max - k_min + 1);
    const std::size_t cycles = 1 + seed % 6;
    const std::size_t lo = std::min(n_max, k + 3 + cycles);
    const std::size_t n = rng.uniform(lo, n_max);
    const AlmostChordalGraph gen = generate_almost_chordal(n, k, cycles, seed);
    if (gen.cycles == 0 || gen.graph.vertex_count() > n_max) continue;
    out.push_back({gen.graph, k, seed, tag("almost-chordal", gen.graph.vertex_count(), k, seed)});
  }
  return out;
}

void check_plan(Outcome& o, const ClassInstance& inst, std::span<const Vertex> terminals) {
  const Graph& g = inst.graph;
  const std::size_t n = g.vertex_count();
  const std::size_t c4 = enumerate_induced_c4(g).size();
  if (3 * c4 > n - 1) o.fail(inst.where + ": " + std::to_string(c4) + " induced C4 exceeds (n-4)/3+1");
  // No postcondition argument: every guard is re-checked here.
  const ContractionPlan plan = build_contraction_plan(WeightedGraph(g), terminals);
  const Graph& contracted = plan.contracted_graph.graph();
  if (!is_chordal(contracted)) o.fail(inst.where + ": G'' not chordal");
  if (!vertex_connectivity_at_least(contracted, inst.k)) o.fail(inst.where + ": G'' below k-connected");
  if (plan.contraction_edges.size() != plan.initial_c4_count) o.fail(inst.where + ": |E'| differs from C4 count");
  std::vector<char> used(n, 0), terminal(n, 0);
  for (Vertex t : terminals) terminal[t] = 1;
  for (auto [a, b] : plan.contraction_edges) {
    if (used[a] || used[b]) o.fail(inst.where + ": E' not vertex-disjoint");
    used[a] = used[b] = 1;
    if (terminal[a] && terminal[b]) o.fail(inst.where + ": terminal-terminal contraction");
  }
  for (Vertex v = 0; v < plan.contracted_graph.graph().vertex_count(); ++v) {
    if (plan.contracted_graph.weight(v) > 2) o.fail(inst.where + ": merged weight above 2");
  }
}

void class_criteria(Outcome& deviation, Outcome& guards) {
  const auto members = class_members(kClassInstances, 50, 2, 5, 70000);
  if (static_cast<int>(members.size()) < kClassInstances) {
    deviation.fail("only " + std::to_string(members.size()) + " members generated");
  }
  int unweighted_ok = 0, weighted_ok = 0, plans = 0;
  std::size_t cycles_seen = 0;
  for (const ClassInstance& inst : members) {
    const Graph& g = inst.graph;
    cycles_seen += enumerate_induced_c4(g).size();
    if (!is_hh_i42_free(g) || !vertex_connectivity_at_least(g, inst.k)) {
      deviation.fail(inst.where + ": generator output outside the class");
      continue;
    }
    Rng rng(inst.seed ^ 0x9e3779b97f4a7c15ull);
    const WeightedGraph unit(g);
    const PartitionRequest ru = random_request(unit, inst.k, rng);
    guarded(deviation, inst.where + " unweighted", [&] {
      const GLPartition p = gl_partition_almost_chordal(unit, ru);
      const VerificationReport v = verify_partition(unit, ru, p, DeviationMode::slack(1));
      if (!v.pass) deviation.fail(inst.where + " unweighted: " + v.first_violation);
      else ++unweighted_ok;
    });
    const WeightedGraph heavy(g, random_weights(g.vertex_count(), kMaxWeight, rng));
    const PartitionRequest rw = random_request(heavy, inst.k, rng);
    guarded(deviation, inst.where + " weighted", [&] {
      const GLPartition p = gl_partition_almost_chordal(heavy, rw);
      const VerificationReport v =
          verify_partition(heavy, rw, p, DeviationMode::strict_window(2 * heavy.max_weight()));
      if (!v.pass) deviation.fail(inst.where + " weighted: " + v.first_violation);
      else ++weighted_ok;
    });
    for (const PartitionRequest* r : {&ru, &rw}) {
      if (guarded(guards, inst.where, [&] { check_plan(guards, inst, r->terminals); })) ++plans;
    }
  }
  const std::string total = std::to_string(members.size());
  deviation.detail = std::to_string(unweighted_ok) + "/" + total + " unweighted within deviation 1, " +
                     std::to_string(weighted_ok) + "/" + total + " weighted inside the strict 2 w_max window (" +
                     std::to_string(cycles_seen) + " induced C4 in total)";
  guards.detail = std::to_string(plans) + " contraction plans checked for chordality, k-connectivity, "
                  "|E'|, disjointness, terminal pairs and the C4 bound";
}

// --- 5 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  int ok = 0;
  for (int i = 0; i < kOracleInstances; ++i) {
    const std::uint64_t seed = 90000 + i;
    Rng rng(seed);
    const std::size_t k = 2 + i % 4;
    const std::size_t n = rng.uniform(k + 1, 10);
    const bool ktree = i % 2 == 0;
    const std::string where = tag(ktree ? "ktree" : "chordal", n, k, seed);
    guarded(o, where, [&] {
      const Graph g = ktree ? generate_ktree(n, k, seed) : generate_chordal(n, k, seed);
      const WeightedGraph wg(g);
      const PartitionRequest r = random_request(wg, k, rng);
      const auto brute = brute_force_gl(g, r);
      if (!brute) {
        o.fail(where + ": oracle found no partition");
        return;
      }
      if (!verify_partition(wg, r, *brute, DeviationMode::exact()).pass) {
        o.fail(where + ": oracle partition does not verify");
        return;
      }
      const GLPartition p = gl_partition_chordal(g, r);
      const VerificationReport v = verify_partition(wg, r, p, DeviationMode::exact());
      if (!v.pass) o.fail(where + ": " + v.first_violation);
      else ++ok;
    });
  }
  const double secs = seconds_since(t0);
  if (secs >= kOracleBudgetSec) o.fail("runtime " + std::to_string(secs) + " s");
  o.detail = std::to_string(ok) + "/" + std::to_string(kOracleInstances) + " agree with the exhaustive oracle, " +
             std::to_string(secs) + " s";
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome recognition() {
  Outcome o;
  auto graphs = named::corpus();
  Rng rng(424242);
  for (int i = 0; i < kRandomRecognition; ++i) {
    const std::size_t n = 1 + rng.index(9);
    const auto density = rng.uniform(2, 9);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.uniform(1, 10) <= density) edges.emplace_back(u, v);
      }
    }
    graphs.emplace_back("random#" + std::to_string(i), Graph::from_edges(n, edges));
  }
  std::size_t checks = 0;
  for (const auto& [name, g] : graphs) {
    guarded(o, name, [&] {
      if (is_chordal(g) != brute::chordal(g)) o.fail(name + ": chordality");
      if (static_cast<bool>(is_hh_i42_free(g)) != brute::in_class(g)) o.fail(name + ": class membership");
      checks += 2;
      for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
        if (static_cast<bool>(vertex_connectivity_at_least(g, k)) != brute::k_connected(g, k)) {
          o.fail(name + ": " + std::to_string(k) + "-connectivity");
        }
        ++checks;
      }
    });
  }
  o.detail = std::to_string(graphs.size()) + " graphs (" + std::to_string(graphs.size() - kRandomRecognition) +
             " named), " + std::to_string(checks) + " decisions compared with the exhaustive definitions";
  return o;
}

// --- 7 ---------------------------------------------------------------------

bool forest_by_union_find(const C4Catalog& cat) {
  // Nodes: cycles, then vertices on two or more cycles.
  const std::size_t n = cat.membership.size();
  std::vector<std::size_t> parent(cat.size() + n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (Vertex v = 0; v < n; ++v) {
    if (cat.membership[v].size() < 2) continue;
    for (std::size_t c : cat.membership[v]) {
      const std::size_t a = find(c), b = find(cat.size() + v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

std::size_t connectivity_of(const Graph& g) {
  std::size_t k = 0;
  while (vertex_connectivity_at_least(g, k + 1)) ++k;
  return k;
}

Outcome structural_properties() {
  Outcome o;
  auto members = class_members(kStructureInstances - kSeparatorInstances, 14, 2, 4, 130000);
  const auto dense = class_members(kSeparatorInstances, 14, 5, 5, 150000);
  members.insert(members.end(), dense.begin(), dense.end());
  std::size_t universal_checks = 0, chord_checks = 0, min_seps = 0, incl_seps = 0, incl_hits = 0, dense_used = 0;
  for (const ClassInstance& inst : members) {
    const Graph& g = inst.graph;
    const C4Catalog cat = enumerate_induced_c4(g);
    guarded(o, inst.where, [&] {
      // Two neighbours on a cycle means universal to it; universal vertices form a clique.
      for (const InducedC4& c : cat.cycles) {
        std::vector<Vertex> universal;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (c.contains(v)) continue;
          const auto seen = std::count_if(c.v.begin(), c.v.end(), [&](Vertex x) { return g.has_edge(v, x); });
          const bool all = seen == 4;
          if (seen >= 2 && !all) o.fail(inst.where + ": vertex sees 2-3 vertices of a C4");
          if (all != universal_to(g, v, c)) o.fail(inst.where + ": universal_to disagrees");
          if (all) universal.push_back(v);
          ++universal_checks;
        }
        for (std::size_t i = 0; i < universal.size(); ++i) {
          for (std::size_t j = i + 1; j < universal.size(); ++j) {
            if (!g.has_edge(universal[i], universal[j])) o.fail(inst.where + ": universal set not a clique");
          }
        }
      }
      // Chording one cycle keeps the class and removes exactly that cycle.
      for (const InducedC4& c : cat.cycles) {
        for (int side = 0; side < 2; ++side) {
          const std::vector<Vertex> pair{c.v[side], c.v[side + 2]};
          const TerminalChords tc = add_terminal_chords(g, pair);
          if (tc.added.size() != 1 || !brute::in_class(tc.graph) ||
              brute::induced_c4_sets(tc.graph).size() != cat.size() - 1) {
            o.fail(inst.where + ": chord on a C4 misbehaves");
          }
          ++chord_checks;
        }
      }
      // The incidence structure between cycles and shared vertices is a forest.
      if (!forest_by_union_find(cat) || !build_c4_incidence(cat).acyclic) {
        o.fail(inst.where + ": incidence structure has a cycle");
      }
      // No minimum separator holds three vertices of one induced C4.
      if (inst.k >= 5) {
        ++dense_used;
        const std::size_t kappa = connectivity_of(g);
        for (const SeparatorWitness& s : enumerate_minimal_separators(g, g.vertex_count())) {
          for (const InducedC4& c : cat.cycles) {
            const auto on = std::count_if(c.v.begin(), c.v.end(), [&](Vertex x) {
              return std::binary_search(s.separator.begin(), s.separator.end(), x);
            });
            if (s.separator.size() == kappa && on >= 3) o.fail(inst.where + ": minimum separator has 3 C4 vertices");
            if (on >= 3) ++incl_hits;
          }
          (s.separator.size() == kappa ? min_seps : incl_seps)++;
        }
      }
    });
  }
  if (static_cast<int>(dense_used) < kSeparatorInstances) {
    o.fail("only " + std::to_string(dense_used) + " instances with k >= 5");
  }
  o.detail = std::to_string(members.size()) + " members (" + std::to_string(dense_used) + " with k >= 5): " +
             std::to_string(universal_checks) + " universality checks, " + std::to_string(chord_checks) +
             " chord insertions, " + std::to_string(min_seps) + " minimum separators clean; informational: " +
             std::to_string(incl_hits) + " C4 triples among " + std::to_string(incl_seps) +
             " larger inclusion-minimal separators";
  return o;
}

// --- 8 ---------------------------------------------------------------------

double best_solve_time(std::size_t n, std::size_t k) {
  const Graph g = generate_ktree(n, k, 800 + n);
  Rng rng(n);
  const PartitionRequest r = random_request(WeightedGraph(g), k, rng);
  double best = 1e100;
  for (int rep = 0; rep < kScalingRepeats; ++rep) {
    const auto t0 = Clock::now();
    const GLPartition p = gl_partition_chordal(g, r, {false, false});
    best = std::min(best, seconds_since(t0));
    if (p.parts.size() != k) throw InvariantViolation("scaling run lost a part");
  }
  return best;
}

Outcome runtime_scaling() {
  Outcome o;
  double small = 0, large = 0, pre = 0;
  std::size_t pre_cycles = 0;
  guarded(o, "k-tree scaling", [&] {
    small = best_solve_time(500, 4);
    large = best_solve_time(1000, 4);
    if (large > kScalingRatio * small) o.fail("ratio " + std::to_string(large / small));
  });
  guarded(o, "preprocessing", [&] {
    const AlmostChordalGraph gen = generate_almost_chordal(200, 3, 12, 2024);
    pre_cycles = gen.cycles;
    Rng rng(7);
    const WeightedGraph wg(gen.graph);
    const PartitionRequest r = random_request(wg, 3, rng);
    const auto t0 = Clock::now();
    if (!is_hh_i42_free(gen.graph)) throw InvariantViolation("member outside class");
    if (!vertex_connectivity_at_least(gen.graph, 3)) throw InvariantViolation("member below k");
    const ContractionPlan plan = build_contraction_plan(wg, r.terminals, 3);
    pre = seconds_since(t0);
    if (plan.contraction_edges.empty()) o.fail("preprocessing instance has no induced C4");
    if (pre >= kPreprocessBudgetSec) o.fail("preprocessing took " + std::to_string(pre) + " s");
  });
  o.detail = "k-tree solve (k=4) n=500 " + std::to_string(small * 1e3) + " ms, n=1000 " +
             std::to_string(large * 1e3) + " ms, ratio " + std::to_string(small > 0 ? large / small : 0) +
             " (limit " + std::to_string(kScalingRatio) + "); preprocessing n=200 with " +
             std::to_string(pre_cycles) + " C4: " + std::to_string(pre) + " s (limit " +
             std::to_string(kPreprocessBudgetSec) + " s)";
  return o;
}

// --- 9 ---------------------------------------------------------------------

struct CliRun {
  int code = 0;
  std::string out, err;
  bool operator==(const CliRun&) const = default;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("glpart_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string chordal = (dir / "chordal.txt").string();
  const std::string member = (dir / "member.txt").string();
  const std::string part = (dir / "part.json").string();
  const std::vector<std::vector<std::string>> generate = {
      {"generate", "--family", "ktree", "--n", "40", "--k", "3", "--seed", "11", "--max-weight", "5", "--out", chordal},
      {"generate", "--family", "almost-chordal", "--n", "30", "--k", "3", "--cycles", "3", "--seed", "12", "--out",
       member},
  };
  const std::vector<std::vector<std::string>> runs = {
      {"check", chordal, "--require", "chordal,connected"},
      {"check", member},
      {"partition", chordal},
      {"partition", member, "--mode", "almost-chordal"},
      {"partition", chordal, "--out", part},
      {"verify", chordal, part},
      {"oracle-compare", "--family", "ktree", "--trials", "20", "--seed", "3"},
      {"oracle-compare", "--family", "almost-chordal", "--trials", "20", "--seed", "4"},
  };
  std::size_t compared = 0;
  std::vector<std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < generate.size(); ++i) {
      const CliRun r = cli(generate[i]);
      if (r.code != 0) o.fail("generate exited " + std::to_string(r.code) + ": " + r.err);
      const std::string text = slurp(generate[i].back());
      if (pass == 0) first.push_back(text + r.out + r.err);
      else if (first[i] != text + r.out + r.err) o.fail("generated instance differs between runs");
      ++compared;
    }
  }
  for (const auto& args : runs) {
    const CliRun a = cli(args);
    std::string part_a = args.size() > 3 && args[2] == "--out" ? slurp(part) : "";
    const CliRun b = cli(args);
    std::string part_b = args.size() > 3 && args[2] == "--out" ? slurp(part) : "";
    if (a.code != 0) o.fail(args[0] + " exited " + std::to_string(a.code) + ": " + a.err);
    if (!(a == b) || part_a != part_b) o.fail(args[0] + " output differs between identical runs");
    ++compared;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  o.detail = std::to_string(compared) + " CLI invocations repeated with byte-identical output";
  return o;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);
  report(1, "chordal exactness", chordal_exactness());
  report(2, "weighted window", weighted_window());
  Outcome deviation, guards;
  class_criteria(deviation, guards);
  report(3, "almost-chordal deviation", deviation);
  report(4, "pipeline guards", guards);
  report(5, "oracle equivalence", oracle_equivalence());
  report(6, "recognition", recognition());
  report(7, "structural properties", structural_properties());
  report(8, "runtime scaling", runtime_scaling());
  report(9, "determinism", determinism());
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
