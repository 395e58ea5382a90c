#include "glpart/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "glpart/almost_chordal.hpp"
#include "glpart/chordal.hpp"
#include "glpart/connectivity.hpp"
#include "glpart/generators.hpp"
#include "glpart/gl_chordal.hpp"
#include "glpart/instance_io.hpp"
#include "glpart/oracle.hpp"
#include "glpart/verify.hpp"

namespace glp {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for flag values CLI11 cannot validate on its own.
struct UsageError : Error {
  using Error::Error;
};

// A partition file that is valid JSON of the wrong shape, or not JSON.
struct ShapeError : Error {
  using Error::Error;
};

std::optional<DeviationMode> parse_deviation(const std::string& text) {
  if (text == "auto") return std::nullopt;
  if (text == "exact") return DeviationMode::exact();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    Weight delta = 0;
    std::size_t used = 0;
    try {
      delta = std::stoll(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == tail.size() && !tail.empty() && delta >= 0) {
      if (head == "window") return DeviationMode::strict_window(delta);
      if (head == "slack") return DeviationMode::slack(delta);
    }
  }
  throw UsageError("--deviation must be auto, exact, window:D or slack:L (got '" + text + "')");
}

// Default rule for a solver's output.
DeviationMode default_mode(const WeightedGraph& g, const std::string& solver_mode) {
  const bool unit = g.unit_weights();
  if (solver_mode == "almost-chordal") {
    return unit ? DeviationMode::slack(1) : DeviationMode::strict_window(2 * g.max_weight());
  }
  return unit ? DeviationMode::exact() : DeviationMode::strict_window(g.max_weight());
}

PartitionRequest request_of(const Instance& inst) { return {inst.terminals, inst.demands}; }

Json edges_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

void emit(const Json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot write " + out_path);
  file << text;
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot write " + out_path);
  file << text;
}

GLPartition read_partition_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ShapeError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("parts") || !doc["parts"].is_array()) {
    throw ShapeError(path + ": expected an object with a \"parts\" array");
  }
  GLPartition p;
  for (std::size_t i = 0; i < doc["parts"].size(); ++i) {
    const Json& part = doc["parts"][i];
    if (!part.is_array() || part.empty()) {
      throw ShapeError(path + ": part " + std::to_string(i) + " must be a non-empty array");
    }
    std::vector<Vertex> ids;
    for (const Json& v : part) {
      if (!v.is_number_unsigned()) {
        throw ShapeError(path + ": part " + std::to_string(i) + " holds a non-vertex entry");
      }
      ids.push_back(v.get<Vertex>());
    }
    p.parts.push_back(std::move(ids));
  }
  if (doc.contains("deviation") && doc["deviation"].is_number_integer()) {
    p.deviation = doc["deviation"].get<Weight>();
  }
  return p;
}

std::string read_mode_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  const Json doc = Json::parse(in, nullptr, false);
  if (doc.is_object() && doc.contains("mode") && doc["mode"].is_string()) {
    return doc["mode"].get<std::string>();
  }
  return "";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string path;
  std::string require = "class,connected";
  std::size_t k = 0;
  bool k_given = false;
  std::string out;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto required = split_list(a.require);
  for (const auto& r : required) {
    if (r != "chordal" && r != "class" && r != "connected") {
      throw UsageError("--require accepts chordal, class, connected (got '" + r + "')");
    }
  }
  const Instance inst = read_instance_file(a.path);
  const Graph& g = inst.graph.graph();
  const std::size_t k = a.k_given ? a.k : std::max<std::size_t>(inst.k(), 1);
  if (k == 0) throw UsageError("--k must be positive");

  Json doc;
  doc["n"] = g.vertex_count();
  doc["m"] = g.edge_count();
  doc["k"] = k;

  const PeoResult peo = compute_peo(g);
  doc["chordal"] = static_cast<bool>(peo);
  if (!peo) {
    const auto& w = *peo.witness;
    doc["chordal_witness"] = {{"vertex", w.vertex},
                              {"missing_edge", {w.missing_edge.u, w.missing_edge.v}}};
  }

  const C4Catalog catalog = enumerate_induced_c4(g);
  const ClassCheck cls = is_hh_i42_free(g, catalog);
  doc["class"] = static_cast<bool>(cls);
  doc["induced_c4"] = catalog.size();
  if (!cls) {
    doc["class_witness"] = {{"kind", cls.violation->kind_name()},
                            {"vertices", cls.violation->vertices}};
  }

  const ConnectivityResult conn = vertex_connectivity_at_least(g, k);
  doc["k_connected"] = static_cast<bool>(conn);
  if (!conn) {
    Json w;
    if (conn.reason == ConnectivityResult::Reason::kTooFewVertices) {
      w["reason"] = "too-few-vertices";
    } else {
      w["reason"] = "separator";
      w["separator"] = conn.witness->separator;
      w["pair"] = {conn.witness->u, conn.witness->w};
    }
    doc["connectivity_witness"] = w;
  }

  bool ok = true;
  for (const auto& r : required) {
    if (r == "chordal") ok = ok && peo;
    if (r == "class") ok = ok && cls;
    if (r == "connected") ok = ok && conn;
  }
  doc["required"] = required;
  doc["pass"] = ok;
  emit(doc, a.out, out);

  err << "chordal: " << (peo ? "yes" : "no");
  if (!peo) {
    err << " (vertex " << peo.witness->vertex << " has non-adjacent later neighbors "
        << peo.witness->missing_edge.u << " and " << peo.witness->missing_edge.v << ")";
  }
  err << "\nclass: " << (cls ? "yes" : "no");
  if (!cls) err << " (induced " << cls.violation->kind_name() << ")";
  err << "\n" << k << "-connected: " << (conn ? "yes" : "no") << "\n";
  return ok ? kExitOk : kExitFailed;
}

// ---- partition -------------------------------------------------------------

struct PartitionArgs {
  std::string path;
  std::string mode = "auto";
  bool skip_checks = false;
  bool debug_invariants = false;
  bool timing = false;
  std::string out;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance_file(a.path);
  const WeightedGraph& wg = inst.graph;
  const PartitionRequest req = request_of(inst);
  SolveOptions options;
  options.validate = !a.skip_checks;
  options.debug_invariants = a.debug_invariants;

  const auto start = std::chrono::steady_clock::now();
  std::string mode = a.mode;
  if (mode == "auto") mode = is_chordal(wg.graph()) ? "chordal" : "almost-chordal";

  Json doc;
  GLPartition partition;
  std::optional<AlmostChordalReport> ac;
  if (mode == "chordal") {
    partition = wg.unit_weights() ? gl_partition_chordal(wg.graph(), req, options)
                                  : gl_partition_chordal_weighted(wg, req, options);
  } else {
    ac = solve_almost_chordal(wg, req, options);
    partition = ac->partition;
  }
  const double solve_ms = elapsed_ms(start);

  doc["parts"] = partition.parts;
  doc["deviation"] = partition.deviation;
  doc["mode"] = mode;
  if (ac) {
    const auto& plan = ac->plan;
    const auto& orig = ac->reduced_vertices;
    auto lift = [&](const std::vector<Edge>& edges) {
      std::vector<Edge> lifted;
      for (const Edge& e : edges) lifted.emplace_back(orig[e.u], orig[e.v]);
      std::sort(lifted.begin(), lifted.end());
      return lifted;
    };
    Json merges = Json::object();
    for (Vertex z = 0; z < plan.merge_map.size(); ++z) {
      const auto& image = plan.merge_map.images[z];
      if (image.size() < 2) continue;
      std::vector<Vertex> ids;
      for (Vertex x : image) ids.push_back(orig[x]);
      merges[std::to_string(z)] = ids;
    }
    doc["audit"] = {{"added_chords", edges_json(lift(plan.added_terminal_chords))},
                    {"contracted_edges", edges_json(lift(plan.contraction_edges))},
                    {"merge_map", merges},
                    {"peeled", ac->peeled}};
  }

  const DeviationMode rule = default_mode(wg, mode);
  const VerificationReport check = verify_partition(wg, req, partition, rule);
  doc["verified"] = check.pass;
  if (a.timing) doc["timing_ms"] = {{"solve", solve_ms}, {"total", elapsed_ms(start)}};
  emit(doc, a.out, out);
  if (!check.pass) {
    err << "partition failed verification (" << rule.describe() << "): " << check.first_violation
        << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string graph_path;
  std::string partition_path;
  std::string deviation = "auto";
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const std::optional<DeviationMode> explicit_mode = parse_deviation(a.deviation);
  const Instance inst = read_instance_file(a.graph_path);
  const GLPartition partition = read_partition_file(a.partition_path);
  const DeviationMode rule =
      explicit_mode ? *explicit_mode : default_mode(inst.graph, read_mode_field(a.partition_path));
  const VerificationReport report = verify_partition(inst.graph, request_of(inst), partition, rule);

  Json doc;
  doc["pass"] = report.pass;
  doc["rule"] = rule.describe();
  doc["disjoint"] = report.disjoint;
  doc["covering"] = report.covering;
  if (!report.pass) doc["first_violation"] = report.first_violation;
  Json parts = Json::array();
  for (const PartRecord& r : report.parts) {
    parts.push_back({{"size", r.size},
                     {"weight", r.weight},
                     {"demand", r.demand},
                     {"connected", r.connected},
                     {"has_terminal", r.has_terminal},
                     {"deviation", r.deviation},
                     {"ok", r.ok()}});
  }
  doc["parts"] = parts;
  emit(doc, a.out, out);
  if (!report.pass) {
    err << "verification failed: " << report.first_violation << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

// ---- oracle-compare --------------------------------------------------------

struct CompareArgs {
  std::string family = "ktree";
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::size_t n_max = 10;
  std::size_t k_min = 2;
  std::size_t k_max = 3;
  std::size_t cycles_max = 2;
  std::size_t cap_n = kDefaultBruteForceCap;
  std::string out;
};

int cmd_oracle_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  if (a.family != "ktree" && a.family != "chordal" && a.family != "almost-chordal") {
    throw UsageError("--family must be ktree, chordal or almost-chordal");
  }
  if (a.cap_n == 0) throw UsageError("--cap-n must be positive");
  if (a.k_min < 2 || a.k_min > a.k_max) throw UsageError("need 2 <= --k-min <= --k-max");
  if (a.n_max > a.cap_n) {
    throw PreconditionError("cap", "--n-max " + std::to_string(a.n_max) + " exceeds --cap-n " +
                                       std::to_string(a.cap_n));
  }
  if (a.n_max < a.k_max + 1) throw UsageError("--n-max must be at least --k-max + 1");

  std::size_t solver_pass = 0;
  std::size_t oracle_found = 0;
  std::size_t skipped = 0;
  Weight max_dev = 0;
  Json failures = Json::array();
  for (std::size_t t = 0; t < a.trials; ++t) {
    Rng rng(a.seed + 0x100000001b3ULL * t);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(a.k_min, a.k_max));
    const std::size_t n = static_cast<std::size_t>(rng.uniform(k + 1, a.n_max));
    const std::uint64_t gseed = rng.next();
    Graph g = a.family == "ktree"
                  ? generate_ktree(n, k, gseed)
                  : generate_almost_chordal(n, k, rng.uniform(1, std::max<std::size_t>(1, a.cycles_max)), gseed).graph;
    if (g.vertex_count() > a.cap_n) {
      ++skipped;
      continue;
    }
    const WeightedGraph wg(g);
    const PartitionRequest req = random_request(wg, k, rng);

    std::string problem;
    try {
      GLPartition p;
      DeviationMode rule = DeviationMode::exact();
      if (a.family == "ktree") {
        p = gl_partition_chordal(g, req);
      } else {
        p = gl_partition_almost_chordal(wg, req);
        rule = DeviationMode::slack(1);
      }
      const VerificationReport rep = verify_partition(wg, req, p, rule);
      if (rep.pass) {
        ++solver_pass;
        max_dev = std::max(max_dev, p.deviation);
      } else {
        problem = "solver output rejected: " + rep.first_violation;
      }
    } catch (const Error& e) {
      problem = std::string("solver raised: ") + e.what();
    }
    const auto exact = brute_force_gl(g, req, a.cap_n);
    if (exact) {
      ++oracle_found;
    } else if (problem.empty()) {
      problem = "oracle found no exact partition";
    }
    if (!problem.empty()) failures.push_back({{"trial", t}, {"n", n}, {"k", k}, {"reason", problem}});
  }

  Json doc;
  doc["family"] = a.family;
  doc["trials"] = a.trials;
  doc["solver_pass"] = solver_pass;
  doc["oracle_found"] = oracle_found;
  doc["skipped_over_cap"] = skipped;
  doc["max_deviation"] = max_dev;
  doc["discrepancies"] = failures.size();
  doc["failures"] = failures;
  emit(doc, a.out, out);
  err << solver_pass << "/" << a.trials << " solver runs verified, " << oracle_found << "/"
      << a.trials << " oracle partitions found\n";
  return failures.empty() ? kExitOk : kExitFailed;
}

// ---- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string family = "ktree";
  std::size_t n = 10;
  std::size_t k = 2;
  std::size_t cycles = 1;
  std::uint64_t seed = 1;
  Weight max_weight = 1;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.family != "ktree" && a.family != "chordal" && a.family != "almost-chordal") {
    throw UsageError("--family must be ktree, chordal or almost-chordal");
  }
  if (a.max_weight < 1) throw UsageError("--max-weight must be positive");
  Graph g;
  std::string header;
  if (a.family == "ktree") {
    g = generate_ktree(a.n, a.k, a.seed);
    header = "# ktree n=" + std::to_string(a.n) + " k=" + std::to_string(a.k);
  } else if (a.family == "chordal") {
    g = generate_chordal(a.n, a.k, a.seed);
    header = "# chordal n=" + std::to_string(a.n) + " k=" + std::to_string(a.k);
  } else {
    AlmostChordalGraph ac = generate_almost_chordal(a.n, a.k, a.cycles, a.seed);
    header = "# almost-chordal n=" + std::to_string(ac.graph.vertex_count()) +
             " k=" + std::to_string(a.k) + " cycles=" + std::to_string(ac.cycles) + "/" +
             std::to_string(a.cycles);
    if (ac.cycles < a.cycles) {
      err << "generate: only " << ac.cycles << " of " << a.cycles << " cycles could be placed\n";
    }
    g = std::move(ac.graph);
  }
  header += " seed=" + std::to_string(a.seed) + "\n";
  Rng rng(a.seed ^ 0x5bd1e995ULL);
  std::vector<Weight> weights = a.max_weight == 1
                                    ? std::vector<Weight>(g.vertex_count(), 1)
                                    : random_weights(g.vertex_count(), a.max_weight, rng);
  Instance inst{WeightedGraph(std::move(g), std::move(weights)), {}, {}};
  const PartitionRequest req = random_request(inst.graph, a.k, rng);
  inst.terminals = req.terminals;
  inst.demands = req.demands;
  emit_text(header + format_instance(inst), a.out, out);
  return kExitOk;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& what,
                  const std::vector<Vertex>& witness = {}) {
  Json doc;
  doc["error"] = kind;
  doc["message"] = what;
  if (!witness.empty()) doc["witness"] = witness;
  err << doc.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected graph partitions with prescribed sizes", "glpart"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Report chordality, class membership, k-connectivity");
  c_check->add_option("instance", check.path, "Instance file")->required();
  c_check->add_option("--require", check.require,
                      "Comma list of properties that decide the exit code: chordal,class,connected")
      ->capture_default_str();
  auto* k_opt = c_check->add_option("--k", check.k, "Connectivity to test (default: instance k)");
  c_check->add_option("--out", check.out, "Write JSON here instead of stdout");

  PartitionArgs part;
  auto* c_part = app.add_subcommand("partition", "Compute a connected partition");
  c_part->add_option("instance", part.path, "Instance file")->required();
  c_part->add_option("--mode", part.mode, "auto, chordal or almost-chordal")
      ->check(CLI::IsMember({"auto", "chordal", "almost-chordal"}))
      ->capture_default_str();
  c_part->add_flag("--skip-checks", part.skip_checks, "Skip chordality/class/connectivity checks");
  c_part->add_flag("--debug-invariants", part.debug_invariants, "Assert solver loop invariants");
  c_part->add_flag("--timing", part.timing, "Add wall times to the output");
  c_part->add_option("--out", part.out, "Write JSON here instead of stdout");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Check a partition file against an instance");
  c_ver->add_option("instance", ver.graph_path, "Instance file")->required();
  c_ver->add_option("partition", ver.partition_path, "Partition JSON")->required();
  c_ver->add_option("--deviation", ver.deviation, "auto, exact, window:D or slack:L")
      ->capture_default_str();
  c_ver->add_option("--out", ver.out, "Write JSON here instead of stdout");

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("oracle-compare",
                                   "Generate instances, solve, verify, and compare with brute force");
  c_cmp->add_option("--family", cmp.family, "ktree or almost-chordal")->capture_default_str();
  c_cmp->add_option("--trials", cmp.trials)->capture_default_str();
  c_cmp->add_option("--seed", cmp.seed)->capture_default_str();
  c_cmp->add_option("--n-max", cmp.n_max)->capture_default_str();
  c_cmp->add_option("--k-min", cmp.k_min)->capture_default_str();
  c_cmp->add_option("--k-max", cmp.k_max)->capture_default_str();
  c_cmp->add_option("--cycles-max", cmp.cycles_max)->capture_default_str();
  c_cmp->add_option("--cap-n", cmp.cap_n, "Largest n handed to the brute-force oracle")
      ->capture_default_str();
  c_cmp->add_option("--out", cmp.out, "Write JSON here instead of stdout");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Emit a random instance in the text format");
  c_gen->add_option("--family", gen.family, "ktree, chordal or almost-chordal")->capture_default_str();
  c_gen->add_option("--n", gen.n)->capture_default_str();
  c_gen->add_option("--k", gen.k)->capture_default_str();
  c_gen->add_option("--cycles", gen.cycles)->capture_default_str();
  c_gen->add_option("--seed", gen.seed)->capture_default_str();
  c_gen->add_option("--max-weight", gen.max_weight)->capture_default_str();
  c_gen->add_option("--out", gen.out, "Write the instance here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*c_check) {
      check.k_given = k_opt->count() > 0;
      return cmd_check(check, out, err);
    }
    if (*c_part) return cmd_partition(part, out, err);
    if (*c_ver) return cmd_verify(ver, out, err);
    if (*c_cmp) return cmd_oracle_compare(cmp, out, err);
    if (*c_gen) return cmd_generate(gen, out, err);
  } catch (const PreconditionError& e) {
    report_error(err, e.kind(), e.what(), e.witness());
    return kExitPrecondition;
  } catch (const InvalidArgument& e) {
    report_error(err, "invalid-argument", e.what());
    return kExitPrecondition;
  } catch (const CapExceeded& e) {
    report_error(err, "cap", e.what());
    return kExitPrecondition;
  } catch (const InvariantViolation& e) {
    report_error(err, "invariant", e.what());
    return kExitFailed;
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what());
    return kExitIo;
  } catch (const ShapeError& e) {
    report_error(err, "parse", e.what());
    return kExitIo;
  } catch (const Error& e) {
    report_error(err, "io", e.what());
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace glp
