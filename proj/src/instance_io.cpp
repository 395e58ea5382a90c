#include "glpart/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace glp {

namespace {

struct Line {
  std::size_t number;
  std::vector<long long> values;
};

// Reads the next non-empty logical line, stripping comments.
bool next_line(std::istream& in, std::size_t& line_no, Line& out) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    out.number = line_no;
    out.values.clear();
    const char* p = raw.data();
    const char* end = raw.data() + raw.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      long long value = 0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw ParseError(line_no, "expected an integer near '" +
                                      std::string(p, std::min<std::size_t>(end - p, 16)) + "'");
      }
      out.values.push_back(value);
      p = next;
    }
    if (!out.values.empty()) return true;
  }
  return false;
}

Line require_line(std::istream& in, std::size_t& line_no, const char* what,
                  std::size_t expected) {
  Line line;
  if (!next_line(in, line_no, line)) {
    throw ParseError(line_no + 1, std::string("unexpected end of input, expected ") + what);
  }
  if (line.values.size() != expected) {
    throw ParseError(line.number, std::string(what) + ": expected " + std::to_string(expected) +
                                      " values, got " + std::to_string(line.values.size()));
  }
  return line;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::size_t line_no = 0;
  const Line header = require_line(in, line_no, "header 'n m k'", 3);
  for (long long v : header.values) {
    if (v < 0) throw ParseError(header.number, "header values must be non-negative");
  }
  const auto n = static_cast<std::size_t>(header.values[0]);
  const auto m = static_cast<std::size_t>(header.values[1]);
  const auto k = static_cast<std::size_t>(header.values[2]);

  if (n == 0) throw ParseError(header.number, "graph must have at least one vertex");
  const Line weight_line = require_line(in, line_no, "vertex weights", n);
  std::vector<Weight> weights(weight_line.values.begin(), weight_line.values.end());
  for (Weight w : weights) {
    if (w < 1) throw ParseError(weight_line.number, "vertex weights must be positive");
  }

  Instance inst;
  if (k > 0) {
    const Line terminal_line = require_line(in, line_no, "terminals", k);
    for (long long t : terminal_line.values) {
      if (t < 0 || static_cast<std::size_t>(t) >= n) {
        throw ParseError(terminal_line.number, "terminal " + std::to_string(t) + " out of range");
      }
      inst.terminals.push_back(static_cast<Vertex>(t));
    }
    const Line demand_line = require_line(in, line_no, "demands", k);
    for (long long d : demand_line.values) {
      if (d < 1) throw ParseError(demand_line.number, "demands must be positive");
      inst.demands.push_back(d);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Line e = require_line(in, line_no, "edge 'u v'", 2);
    const long long u = e.values[0];
    const long long v = e.values[1];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError(e.number, "edge endpoint out of range");
    }
    if (u >= v) throw ParseError(e.number, "edges must be written as 'u v' with u < v");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  Line extra;
  if (next_line(in, line_no, extra)) {
    throw ParseError(extra.number, "trailing data after " + std::to_string(m) + " edges");
  }

  Graph g;
  try {
    g = Graph::from_edges(n, edges);
  } catch (const InvalidArgument& err) {
    throw ParseError(line_no, err.what());
  }
  inst.graph = WeightedGraph(std::move(g), std::move(weights));
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& instance) {
  const Graph& g = instance.graph.graph();
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.k() << '\n';
  const auto weights = instance.graph.weights();
  for (std::size_t v = 0; v < weights.size(); ++v) out << (v ? " " : "") << weights[v];
  out << '\n';
  if (instance.k() > 0) {
    for (std::size_t i = 0; i < instance.k(); ++i) out << (i ? " " : "") << instance.terminals[i];
    out << '\n';
    for (std::size_t i = 0; i < instance.k(); ++i) out << (i ? " " : "") << instance.demands[i];
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  write_instance(out, instance);
  return out.str();
}

}  // namespace glp
