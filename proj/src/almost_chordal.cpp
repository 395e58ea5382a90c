#include "glpart/almost_chordal.hpp"

#include <algorithm>
#include <numeric>

#include "detail/chordal_core.hpp"
#include "glpart/chordal.hpp"
#include "glpart/connectivity.hpp"

namespace glp {

InducedC4 InducedC4::canonical(Vertex a, Vertex b, Vertex c, Vertex d) {
  const std::array<Vertex, 4> ring{a, b, c, d};
  const auto lowest = static_cast<std::size_t>(
      std::min_element(ring.begin(), ring.end()) - ring.begin());
  const Vertex prev = ring[(lowest + 3) % 4];
  const Vertex next = ring[(lowest + 1) % 4];
  InducedC4 out;
  out.v = {ring[lowest], std::min(prev, next), ring[(lowest + 2) % 4], std::max(prev, next)};
  return out;
}

std::string ClassViolation::kind_name() const {
  switch (kind) {
    case Kind::kHole:
      return "hole";
    case Kind::kHouse:
      return "house";
    case Kind::kSharedC4:
      return "shared-c4";
  }
  return "?";
}

C4Catalog enumerate_induced_c4(const Graph& g) {
  const std::size_t n = g.vertex_count();
  C4Catalog catalog;
  std::vector<char> near(n, 0);
  std::vector<std::vector<Vertex>> common(n);
  std::vector<Vertex> touched;

  // a is the smallest vertex of the cycle and c its opposite corner; b < d
  // are common neighbors of a and c that are not adjacent.
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) near[b] = 1;
    for (Vertex b : g.neighbors(a)) {
      if (b < a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || near[c]) continue;
        if (common[c].empty()) touched.push_back(c);
        common[c].push_back(b);
      }
    }
    for (Vertex c : touched) {
      auto& mids = common[c];
      std::sort(mids.begin(), mids.end());
      for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t j = i + 1; j < mids.size(); ++j) {
          if (!g.has_edge(mids[i], mids[j])) {
            catalog.cycles.push_back(InducedC4{{a, mids[i], c, mids[j]}});
          }
        }
      }
      mids.clear();
    }
    touched.clear();
    for (Vertex b : g.neighbors(a)) near[b] = 0;
  }

  std::sort(catalog.cycles.begin(), catalog.cycles.end());
  catalog.membership.assign(n, {});
  for (std::size_t id = 0; id < catalog.cycles.size(); ++id) {
    for (Vertex x : catalog.cycles[id].v) catalog.membership[x].push_back(id);
  }
  return catalog;
}

namespace {

std::optional<ClassViolation> find_house(const Graph& g, const C4Catalog& catalog) {
  std::vector<unsigned> mask(g.vertex_count(), 0);
  std::vector<Vertex> touched;
  for (const InducedC4& cycle : catalog.cycles) {
    for (unsigned i = 0; i < 4; ++i) {
      for (Vertex r : g.neighbors(cycle.v[i])) {
        if (cycle.contains(r)) continue;
        if (mask[r] == 0) touched.push_back(r);
        mask[r] |= 1u << i;
      }
    }
    std::sort(touched.begin(), touched.end());
    std::optional<ClassViolation> found;
    for (Vertex r : touched) {
      const unsigned m = mask[r];
      // Exactly two cyclically consecutive corners.
      if (m == 0b0011 || m == 0b0110 || m == 0b1100 || m == 0b1001) {
        found = ClassViolation{ClassViolation::Kind::kHouse,
                               {cycle.v[0], cycle.v[1], cycle.v[2], cycle.v[3], r}};
        break;
      }
    }
    for (Vertex r : touched) mask[r] = 0;
    touched.clear();
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<ClassViolation> find_shared_pair(const C4Catalog& catalog) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const InducedC4& a = catalog.cycles[i];
    for (Vertex x : a.v) {
      for (std::size_t j : catalog.membership[x]) {
        if (j <= i) continue;
        const InducedC4& b = catalog.cycles[j];
        const auto shared = std::count_if(b.v.begin(), b.v.end(),
                                          [&](Vertex y) { return a.contains(y); });
        if (shared >= 2) {
          return ClassViolation{ClassViolation::Kind::kSharedC4,
                                {a.v[0], a.v[1], a.v[2], a.v[3], b.v[0], b.v[1], b.v[2], b.v[3]}};
        }
      }
    }
  }
  return std::nullopt;
}

// A hole x1-x2-x3-x4-...-x1 exists through edge x2x3 iff some x1 in
// N(x2) - N[x3] and non-adjacent x4 in N(x3) - N[x2] both touch one component
// of G - (N[x2] u N[x3]). Shortest such connection closes a chordless cycle.
std::optional<ClassViolation> find_hole(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (const Edge& e : g.edges()) {
    const Vertex x2 = e.u;
    const Vertex x3 = e.v;
    std::fill(removed.begin(), removed.end(), 0);
    removed[x2] = removed[x3] = 1;
    for (Vertex u : g.neighbors(x2)) removed[u] = 1;
    for (Vertex u : g.neighbors(x3)) removed[u] = 1;

    std::vector<Vertex> ends1, ends4;
    for (Vertex u : g.neighbors(x2)) {
      if (u != x3 && !g.has_edge(u, x3)) ends1.push_back(u);
    }
    for (Vertex u : g.neighbors(x3)) {
      if (u != x2 && !g.has_edge(u, x2)) ends4.push_back(u);
    }
    if (ends1.empty() || ends4.empty()) continue;

    std::size_t comps = 0;
    const auto label = component_labels(g, removed, &comps);
    if (comps == 0) continue;
    auto touching = [&](Vertex x) {
      std::vector<std::size_t> out;
      for (Vertex u : g.neighbors(x)) {
        if (label[u] != kNoComponent) out.push_back(label[u]);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    std::vector<std::vector<std::size_t>> touch4;
    touch4.reserve(ends4.size());
    for (Vertex x4 : ends4) touch4.push_back(touching(x4));

    for (Vertex x1 : ends1) {
      const auto touch1 = touching(x1);
      if (touch1.empty()) continue;
      for (std::size_t k = 0; k < ends4.size(); ++k) {
        const Vertex x4 = ends4[k];
        if (g.has_edge(x1, x4)) continue;
        std::vector<std::size_t> both;
        std::set_intersection(touch1.begin(), touch1.end(), touch4[k].begin(), touch4[k].end(),
                              std::back_inserter(both));
        if (both.empty()) continue;

        // BFS from x1 through component vertices to x4.
        const std::size_t comp = both.front();
        std::vector<Vertex> parent(n, static_cast<Vertex>(-1));
        std::vector<Vertex> queue{x1};
        parent[x1] = x1;
        bool done = false;
        for (std::size_t qi = 0; qi < queue.size() && !done; ++qi) {
          const Vertex v = queue[qi];
          for (Vertex u : g.neighbors(v)) {
            if (parent[u] != static_cast<Vertex>(-1)) continue;
            if (u == x4 && v != x1) {
              parent[u] = v;
              done = true;
              break;
            }
            if (label[u] != comp) continue;
            parent[u] = v;
            queue.push_back(u);
          }
        }
        std::vector<Vertex> cycle{x2, x3};
        for (Vertex v = x4; v != x1; v = parent[v]) cycle.push_back(v);
        cycle.push_back(x1);
        return ClassViolation{ClassViolation::Kind::kHole, std::move(cycle)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ClassCheck is_hh_i42_free(const Graph& g, const C4Catalog& catalog) {
  ClassCheck check;
  if ((check.violation = find_house(g, catalog))) return check;
  if ((check.violation = find_shared_pair(catalog))) return check;
  check.violation = find_hole(g);
  return check;
}

ClassCheck is_hh_i42_free(const Graph& g) { return is_hh_i42_free(g, enumerate_induced_c4(g)); }

bool universal_to(const Graph& g, Vertex v, const InducedC4& cycle) {
  if (!g.contains(v)) throw InvalidArgument("universal_to: vertex out of range");
  if (cycle.contains(v)) throw InvalidArgument("universal_to: vertex lies on the cycle");
  return std::all_of(cycle.v.begin(), cycle.v.end(), [&](Vertex x) { return g.has_edge(v, x); });
}

C4IncidenceGraph build_c4_incidence(const C4Catalog& catalog) {
  C4IncidenceGraph t;
  t.big_count = catalog.size();
  for (Vertex x = 0; x < catalog.membership.size(); ++x) {
    if (catalog.membership[x].size() >= 2) t.small_vertices.push_back(x);
  }
  // Union-find over big vertices [0, B) and small vertices [B, B + S).
  std::vector<std::size_t> parent(t.big_count + t.small_vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < t.small_vertices.size(); ++s) {
    for (std::size_t cycle : catalog.membership[t.small_vertices[s]]) {
      t.edges.emplace_back(cycle, s);
      const std::size_t a = find(cycle);
      const std::size_t b = find(t.big_count + s);
      if (a == b) {
        t.acyclic = false;
      } else {
        parent[a] = b;
      }
    }
  }
  return t;
}

TerminalChords add_terminal_chords(const Graph& g, std::span<const Vertex> terminals) {
  std::vector<char> is_terminal(g.vertex_count(), 0);
  for (Vertex t : terminals) {
    if (!g.contains(t)) throw InvalidArgument("add_terminal_chords: terminal out of range");
    is_terminal[t] = 1;
  }
  TerminalChords out{g, {}};
  while (true) {
    std::vector<Edge> chords;
    for (const InducedC4& c : enumerate_induced_c4(out.graph).cycles) {
      if (is_terminal[c.v[0]] && is_terminal[c.v[2]]) chords.emplace_back(c.v[0], c.v[2]);
      if (is_terminal[c.v[1]] && is_terminal[c.v[3]]) chords.emplace_back(c.v[1], c.v[3]);
    }
    if (chords.empty()) break;
    std::sort(chords.begin(), chords.end());
    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
    out.graph = with_edges(out.graph, chords);
    out.added.insert(out.added.end(), chords.begin(), chords.end());
  }
  std::sort(out.added.begin(), out.added.end());
  return out;
}

ContractionPlan build_contraction_plan(const WeightedGraph& g, std::span<const Vertex> terminals,
                                       std::optional<std::size_t> connectivity) {
  ContractionPlan plan;
  TerminalChords chorded = add_terminal_chords(g.graph(), terminals);
  plan.added_terminal_chords = chorded.added;
  const Graph& h = chorded.graph;

  const C4Catalog catalog = enumerate_induced_c4(h);
  plan.initial_c4_count = catalog.size();
  if (!build_c4_incidence(catalog).acyclic) {
    throw PreconditionError("not-in-class", "induced C4 incidence structure contains a cycle");
  }

  std::vector<char> is_terminal(h.vertex_count(), 0);
  for (Vertex t : terminals) is_terminal[t] = 1;
  std::vector<std::size_t> live_cycles(h.vertex_count(), 0);
  for (Vertex x = 0; x < h.vertex_count(); ++x) live_cycles[x] = catalog.membership[x].size();
  std::vector<char> alive(catalog.size(), 1);

  // Best edge of a cycle among its private vertices: fewest terminal endpoints,
  // then smallest. Returns the terminal count (3 if no private edge).
  auto best_private_edge = [&](std::size_t id, Edge& best) {
    const auto& v = catalog.cycles[id].v;
    int best_terminals = 3;
    for (unsigned i = 0; i < 4; ++i) {
      const Vertex a = v[i];
      const Vertex b = v[(i + 1) % 4];
      if (live_cycles[a] != 1 || live_cycles[b] != 1) continue;
      const int terms = is_terminal[a] + is_terminal[b];
      const Edge e(a, b);
      if (terms < best_terminals || (terms == best_terminals && e < best)) {
        best = e;
        best_terminals = terms;
      }
    }
    return best_terminals;
  };

  for (std::size_t remaining = catalog.size(); remaining > 0; --remaining) {
    // Leaf cycles have three private vertices. Take the first leaf that can
    // be broken without touching a terminal; deferring the others can only
    // free more of their vertices. Fall back to the first leaf.
    std::size_t chosen = catalog.size();
    Edge chosen_edge;
    int chosen_terminals = 3;
    for (std::size_t id = 0; id < catalog.size(); ++id) {
      if (!alive[id]) continue;
      const auto& v = catalog.cycles[id].v;
      const auto private_count =
          std::count_if(v.begin(), v.end(), [&](Vertex x) { return live_cycles[x] == 1; });
      if (private_count < 3) continue;
      Edge e;
      const int terms = best_private_edge(id, e);
      if (chosen == catalog.size() || terms < chosen_terminals) {
        chosen = id;
        chosen_edge = e;
        chosen_terminals = terms;
      }
      if (terms == 0) break;
    }
    if (chosen == catalog.size()) {
      throw PreconditionError("not-in-class",
                              "no remaining induced C4 has three vertices on no other C4");
    }
    if (chosen_terminals >= 2) {
      throw InvariantViolation("induced C4 has only terminal-terminal edges among its private "
                               "vertices");
    }
    plan.contraction_edges.push_back(chosen_edge);
    alive[chosen] = 0;
    for (Vertex x : catalog.cycles[chosen].v) --live_cycles[x];
  }
  std::sort(plan.contraction_edges.begin(), plan.contraction_edges.end());

  WeightedContraction contracted =
      contract_edges(WeightedGraph(h, std::vector<Weight>(g.weights().begin(), g.weights().end())),
                     plan.contraction_edges);
  plan.contracted_graph = std::move(contracted.graph);
  plan.merge_map = std::move(contracted.merge);

  std::vector<Vertex> image_of(h.vertex_count());
  for (Vertex z = 0; z < plan.merge_map.size(); ++z) {
    for (Vertex x : plan.merge_map.images[z]) image_of[x] = z;
  }
  for (Vertex t : terminals) plan.terminal_relabel.push_back(image_of[t]);

  for (const Edge& e : plan.contraction_edges) {
    if (is_terminal[e.u] && is_terminal[e.v]) {
      throw InvariantViolation("contraction plan merges two terminals");
    }
  }
  if (plan.contraction_edges.size() != plan.initial_c4_count) {
    throw InvariantViolation("contraction plan does not have one edge per induced C4");
  }
  if (!is_chordal(plan.contracted_graph.graph())) {
    throw InvariantViolation("contracted graph is not chordal");
  }
  if (connectivity && !vertex_connectivity_at_least(plan.contracted_graph.graph(), *connectivity)) {
    throw InvariantViolation("contraction lowered the vertex connectivity below " +
                             std::to_string(*connectivity));
  }
  return plan;
}

ContractionPlan build_contraction_plan(const Graph& g, std::span<const Vertex> terminals,
                                       std::optional<std::size_t> connectivity) {
  return build_contraction_plan(WeightedGraph(g), terminals, connectivity);
}

AlmostChordalReport solve_almost_chordal(const WeightedGraph& g, const PartitionRequest& request,
                                         const SolveOptions& options) {
  validate_request(g, request);
  const std::size_t k = request.k();
  if (options.validate) {
    const ClassCheck check = is_hh_i42_free(g.graph());
    if (!check) {
      throw PreconditionError("not-in-class",
                              "graph contains an induced " + check.violation->kind_name(),
                              check.violation->vertices);
    }
    const ConnectivityResult conn = vertex_connectivity_at_least(g.graph(), k);
    if (!conn) {
      throw PreconditionError("not-k-connected",
                              "graph is not " + std::to_string(k) + "-connected",
                              conn.witness ? conn.witness->separator : std::vector<Vertex>{});
    }
  }

  AlmostChordalReport report;
  // Parts whose demand is met by the terminal alone become singletons; the
  // rest of the graph stays (k - peeled)-connected.
  std::vector<char> drop(g.graph().vertex_count(), 0);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    if (request.demands[i] == g.weight(request.terminals[i])) {
      report.peeled.push_back(i);
      drop[request.terminals[i]] = 1;
    } else {
      kept.push_back(i);
    }
  }
  std::vector<Vertex> survivors;
  for (Vertex v = 0; v < g.graph().vertex_count(); ++v) {
    if (!drop[v]) survivors.push_back(v);
  }
  InducedSubgraph reduced = induced_subgraph(g.graph(), survivors);
  report.reduced_vertices = reduced.original;
  std::vector<Vertex> local(g.graph().vertex_count(), 0);
  for (Vertex i = 0; i < reduced.original.size(); ++i) local[reduced.original[i]] = i;

  std::vector<std::vector<Vertex>> parts(k);
  for (std::size_t i : report.peeled) parts[i] = {request.terminals[i]};

  if (kept.size() == 1) {
    parts[kept.front()] = reduced.original;
  } else if (kept.size() >= 2) {
    std::vector<Weight> reduced_weights;
    for (Vertex v : reduced.original) reduced_weights.push_back(g.weight(v));
    const WeightedGraph reduced_wg(std::move(reduced.graph), std::move(reduced_weights));

    std::vector<Vertex> reduced_terminals;
    PartitionRequest contracted_request;
    for (std::size_t i : kept) {
      reduced_terminals.push_back(local[request.terminals[i]]);
      contracted_request.demands.push_back(request.demands[i]);
    }
    report.plan = build_contraction_plan(
        reduced_wg, reduced_terminals,
        options.validate ? std::optional<std::size_t>(kept.size()) : std::nullopt);
    const WeightedGraph& contracted = report.plan.contracted_graph;
    contracted_request.terminals = report.plan.terminal_relabel;

    // A terminal merged with a neighbor may already exceed its demand. The
    // solver starts such parts closed; their excess seeds its running balance,
    // which must stay below the contracted graph's w_max.
    Weight excess = 0;
    for (std::size_t i = 0; i < contracted_request.k(); ++i) {
      excess += std::max<Weight>(
          0, contracted.weight(contracted_request.terminals[i]) - contracted_request.demands[i]);
    }
    if (excess >= contracted.max_weight()) {
      throw PreconditionError("terminal-overshoot",
                              "terminals merged by the contraction exceed their demands by " +
                                  std::to_string(excess));
    }

    SolveOptions inner = options;
    inner.validate = false;
    SolveReport solved = detail::run_weighted(
        contracted, contracted_request, detail::solver_ordering(contracted.graph(), true), inner);
    report.stats = solved.stats;
    for (std::size_t r = 0; r < kept.size(); ++r) {
      std::vector<Vertex>& part = parts[kept[r]];
      for (Vertex x : report.plan.merge_map.expand(solved.partition.parts[r])) {
        part.push_back(reduced.original[x]);
      }
      std::sort(part.begin(), part.end());
    }
  }

  report.partition.parts = std::move(parts);
  report.partition.deviation = realized_deviation(g, request, report.partition.parts);
  return report;
}

GLPartition gl_partition_almost_chordal(const WeightedGraph& g, const PartitionRequest& request,
                                        const SolveOptions& options) {
  return solve_almost_chordal(g, request, options).partition;
}

}  // namespace glp
