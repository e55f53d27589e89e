#include "subcount/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

namespace subcount {

GraphFormatError::GraphFormatError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                        std::optional<std::vector<Color>> colors) {
  using Kind = GraphFormatError::Kind;
  if (colors && colors->size() != edges.size()) {
    throw GraphFormatError(Kind::Parse, 0, "color list length differs from edge count");
  }

  Graph g;
  g.colored_ = colors.has_value();
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphFormatError(Kind::Parse, 0,
                             "vertex id out of range in edge " + std::to_string(e.u) + " " +
                                 std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw GraphFormatError(Kind::SelfLoop, 0, "self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  g.colors_ = colors ? std::move(*colors) : std::vector<Color>(edges.size(), 0);

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];

  std::vector<std::pair<VertexId, std::size_t>> entries(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    entries[cursor[e.u]++] = {e.v, i};
    entries[cursor[e.v]++] = {e.u, i};
  }
  g.targets_.resize(entries.size());
  g.adjacent_edge_.resize(entries.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = entries.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = entries.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (it != first && (it - 1)->first == it->first) {
        throw GraphFormatError(Kind::DuplicateEdge, 0,
                               "duplicate edge " + std::to_string(v) + " " +
                                   std::to_string(it->first));
      }
      auto pos = static_cast<std::size_t>(it - entries.begin());
      g.targets_[pos] = it->first;
      g.adjacent_edge_[pos] = it->second;
    }
  }
  return g;
}

std::optional<std::size_t> Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= num_vertices() || v >= num_vertices() || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return adjacent_edge_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

namespace {

bool parse_uint(const std::string& token, std::uint64_t& out) {
  if (token.empty() || token.size() > 19) return false;
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  out = value;
  return true;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> fields;
  std::string token;
  while (ss >> token) fields.push_back(token);
  return fields;
}

}  // namespace

Graph load_graph(std::istream& in) {
  using Kind = GraphFormatError::Kind;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  bool colored = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::vector<Color> colors;
  std::vector<std::size_t> edge_line;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_fields(line);
    if (fields.empty() || fields[0][0] == '#') continue;

    if (!have_header) {
      if (fields.size() < 2 || fields.size() > 3 || !parse_uint(fields[0], n) ||
          !parse_uint(fields[1], m)) {
        throw GraphFormatError(Kind::Parse, lineno, "expected header `n m [colored]`");
      }
      if (fields.size() == 3) {
        if (fields[2] != "colored") {
          throw GraphFormatError(Kind::Parse, lineno, "unknown header flag `" + fields[2] + "`");
        }
        colored = true;
      }
      if (n > std::numeric_limits<VertexId>::max()) {
        throw GraphFormatError(Kind::Parse, lineno, "vertex count too large");
      }
      have_header = true;
      continue;
    }

    if (edges.size() == m) {
      throw GraphFormatError(Kind::Parse, lineno, "more edge lines than declared m");
    }
    if (fields.size() == 3 && !colored) {
      throw GraphFormatError(Kind::ColorWithoutFlag, lineno,
                             "edge color given but header lacks `colored`");
    }
    if (fields.size() != (colored ? 3u : 2u)) {
      throw GraphFormatError(Kind::Parse, lineno,
                             colored ? "expected `u v c`" : "expected `u v`");
    }
    std::uint64_t u = 0, v = 0, c = 0;
    if (!parse_uint(fields[0], u) || !parse_uint(fields[1], v) ||
        (colored && !parse_uint(fields[2], c))) {
      throw GraphFormatError(Kind::Parse, lineno, "non-integer field");
    }
    if (u >= n || v >= n) {
      throw GraphFormatError(Kind::Parse, lineno, "vertex id out of range");
    }
    if (u == v) {
      throw GraphFormatError(Kind::SelfLoop, lineno, "self-loop at vertex " + fields[0]);
    }
    if (c > std::numeric_limits<Color>::max()) {
      throw GraphFormatError(Kind::Parse, lineno, "color out of range");
    }
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    colors.push_back(static_cast<Color>(c));
    edge_line.push_back(lineno);
  }

  if (!have_header) throw GraphFormatError(Kind::Parse, lineno, "missing header");
  if (edges.size() != m) {
    throw GraphFormatError(Kind::Parse, lineno,
                           "declared " + std::to_string(m) + " edges but found " +
                               std::to_string(edges.size()));
  }

  // Locate duplicates here so the error can carry the offending line.
  std::vector<std::pair<Edge, std::size_t>> sorted;
  sorted.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    sorted.push_back({{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)}, i});
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      std::size_t later = std::max(sorted[i].second, sorted[i - 1].second);
      throw GraphFormatError(Kind::DuplicateEdge, edge_line[later],
                             "duplicate edge " + std::to_string(sorted[i].first.u) + " " +
                                 std::to_string(sorted[i].first.v));
    }
  }

  return Graph::from_edges(n, edges,
                           colored ? std::optional<std::vector<Color>>(std::move(colors))
                                   : std::nullopt);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges();
  if (g.is_colored()) out << " colored";
  out << '\n';
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    out << e.u << ' ' << e.v;
    if (g.is_colored()) out << ' ' << g.edge_color(i);
    out << '\n';
  }
}

std::uint64_t min_degree_sum(const Graph& g) {
  std::uint64_t total = 0;
  for (const Edge& e : g.edges()) total += std::min(g.degree(e.u), g.degree(e.v));
  return total;
}

QuerySession::QuerySession(const Graph& g, std::uint64_t seed)
    : graph_(&g), source_(std::make_unique<Mt64Source>(seed)) {}

QuerySession::QuerySession(const Graph& g, std::unique_ptr<RandomSource> source)
    : graph_(&g), source_(std::move(source)) {}

void QuerySession::check_vertex(VertexId v) const {
  if (v >= graph_->num_vertices()) {
    throw QueryError("vertex " + std::to_string(v) + " out of range");
  }
}

void QuerySession::charge() {
  if (limit_ && counts_.total() >= *limit_) throw QueryLimitExceeded("query limit reached");
}

std::size_t QuerySession::degree(VertexId v) {
  check_vertex(v);
  charge();
  ++counts_.degree;
  return graph_->degree(v);
}

NeighborAnswer QuerySession::neighbor(VertexId v, std::size_t i) {
  check_vertex(v);
  if (i >= graph_->degree(v)) {
    throw QueryError("neighbor index " + std::to_string(i) + " >= degree of vertex " +
                     std::to_string(v));
  }
  charge();
  ++counts_.neighbor;
  return {graph_->neighbors(v)[i], graph_->neighbor_color(v, i)};
}

PairAnswer QuerySession::pair(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw QueryError("pair query on identical vertices");
  charge();
  ++counts_.pair;
  auto idx = graph_->find_edge(u, v);
  return idx ? PairAnswer{true, graph_->edge_color(*idx)} : PairAnswer{false, 0};
}

EdgeSampleAnswer QuerySession::sample_edge() {
  if (graph_->num_edges() == 0) throw QueryError("edge sample on a graph without edges");
  charge();
  ++counts_.edge_sample;
  auto i = static_cast<std::size_t>(source_->below(graph_->num_edges()));
  const Edge& e = graph_->edge(i);
  return {e.u, e.v, graph_->edge_color(i)};
}

}  // namespace subcount
