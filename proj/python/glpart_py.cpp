#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "glpart/almost_chordal.hpp"
#include "glpart/chordal.hpp"
#include "glpart/cli.hpp"
#include "glpart/connectivity.hpp"
#include "glpart/generators.hpp"
#include "glpart/gl_chordal.hpp"
#include "glpart/oracle.hpp"
#include "glpart/verify.hpp"

namespace py = pybind11;
using namespace glp;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;
using Parts = std::vector<std::vector<Vertex>>;

Graph make_graph(std::size_t n, const Pairs& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Pairs edge_pairs(const Graph& g) {
  Pairs out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

WeightedGraph weighted(const Graph& g, const std::optional<std::vector<Weight>>& w) {
  return w ? WeightedGraph(g, *w) : WeightedGraph(g);
}

DeviationMode parse_mode(const std::string& kind, Weight delta) {
  if (kind == "exact") return DeviationMode::exact();
  if (kind == "window") return DeviationMode::strict_window(delta);
  if (kind == "slack") return DeviationMode::slack(delta);
  throw InvalidArgument("mode must be exact, window or slack");
}

py::dict verification(const VerificationReport& r) {
  py::list parts;
  for (const PartRecord& p : r.parts) {
    py::dict d;
    d["size"] = p.size;
    d["weight"] = p.weight;
    d["demand"] = p.demand;
    d["connected"] = p.connected;
    d["has_terminal"] = p.has_terminal;
    d["deviation"] = p.deviation;
    d["ok"] = p.ok();
    parts.append(d);
  }
  py::dict out;
  out["pass"] = r.pass;
  out["disjoint"] = r.disjoint;
  out["covering"] = r.covering;
  out["first_violation"] = r.first_violation;
  out["parts"] = parts;
  return out;
}

}  // namespace

PYBIND11_MODULE(glpart, m) {
  m.doc() = "Connected partitions with prescribed sizes on chordal and almost chordal graphs";

  static py::exception<PreconditionError> precondition(m, "PreconditionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      py::object type = precondition;
      py::object err = type(e.what());
      err.attr("kind") = e.kind();
      err.attr("witness") = e.witness();
      PyErr_SetObject(precondition.ptr(), err.ptr());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &edge_pairs)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors", [](const Graph& g, Vertex v) {
        const auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
        return s.str();
      });

  m.def("is_chordal", &is_chordal);
  m.def("compute_peo", [](const Graph& g) -> py::object {
    const PeoResult r = compute_peo(g);
    if (r.peo) return py::make_tuple(r.peo->order, r.peo->sigma);
    return py::none();
  }, "(order, sigma) of a perfect elimination ordering, or None if g is not chordal");
  m.def("vertex_connectivity_at_least", [](const Graph& g, std::size_t k) {
    const ConnectivityResult r = vertex_connectivity_at_least(g, k);
    return py::make_tuple(static_cast<bool>(r), r.witness ? r.witness->separator : std::vector<Vertex>{});
  }, py::arg("g"), py::arg("k"), "(holds, separator)");
  m.def("is_hh_i42_free", [](const Graph& g) -> py::tuple {
    const ClassCheck c = is_hh_i42_free(g);
    if (c) return py::make_tuple(true, py::none(), std::vector<Vertex>{});
    return py::make_tuple(false, c.violation->kind_name(), c.violation->vertices);
  }, "(member, violation kind, witness vertices)");
  m.def("induced_c4", [](const Graph& g) {
    std::vector<std::array<Vertex, 4>> out;
    for (const InducedC4& c : enumerate_induced_c4(g).cycles) out.push_back(c.v);
    return out;
  });

  m.def("partition_chordal", [](const Graph& g, std::vector<Vertex> terminals, std::vector<Weight> demands,
                                std::optional<std::vector<Weight>> weights, bool validate) {
    const PartitionRequest r{std::move(terminals), std::move(demands)};
    const SolveOptions opt{validate, false};
    if (weights) return gl_partition_chordal_weighted(WeightedGraph(g, *weights), r, opt).parts;
    return gl_partition_chordal(g, r, opt).parts;
  }, py::arg("g"), py::arg("terminals"), py::arg("demands"), py::arg("weights") = py::none(),
     py::arg("validate") = true);
  m.def("partition_almost_chordal", [](const Graph& g, std::vector<Vertex> terminals,
                                       std::vector<Weight> demands, std::optional<std::vector<Weight>> weights) {
    const PartitionRequest r{std::move(terminals), std::move(demands)};
    return gl_partition_almost_chordal(weighted(g, weights), r).parts;
  }, py::arg("g"), py::arg("terminals"), py::arg("demands"), py::arg("weights") = py::none());
  m.def("verify", [](const Graph& g, std::vector<Vertex> terminals, std::vector<Weight> demands, Parts parts,
                     const std::string& mode, Weight delta, std::optional<std::vector<Weight>> weights) {
    const PartitionRequest r{std::move(terminals), std::move(demands)};
    GLPartition p;
    p.parts = std::move(parts);
    return verification(verify_partition(weighted(g, weights), r, p, parse_mode(mode, delta)));
  }, py::arg("g"), py::arg("terminals"), py::arg("demands"), py::arg("parts"), py::arg("mode") = "exact",
     py::arg("delta") = 0, py::arg("weights") = py::none());
  m.def("brute_force", [](const Graph& g, std::vector<Vertex> terminals, std::vector<Weight> demands,
                          std::size_t cap) -> std::optional<Parts> {
    const auto p = brute_force_gl(g, {std::move(terminals), std::move(demands)}, cap);
    if (!p) return std::nullopt;
    return p->parts;
  }, py::arg("g"), py::arg("terminals"), py::arg("demands"), py::arg("cap") = kDefaultBruteForceCap);

  m.def("generate_ktree", &generate_ktree, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("generate_chordal", &generate_chordal, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("generate_almost_chordal", [](std::size_t n, std::size_t k, std::size_t cycles, std::uint64_t seed) {
    AlmostChordalGraph gen = generate_almost_chordal(n, k, cycles, seed);
    return py::make_tuple(std::move(gen.graph), gen.cycles);
  }, py::arg("n"), py::arg("k"), py::arg("cycles"), py::arg("seed"), "(graph, induced C4 created)");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "(exit code, stdout, stderr) of the glpart command line");
}
