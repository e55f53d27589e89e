#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcount {

using VertexId = std::uint32_t;
using Color = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphFormatError : public std::runtime_error {
 public:
  enum class Kind { Parse, DuplicateEdge, SelfLoop, ColorWithoutFlag };

  GraphFormatError(Kind kind, std::size_t line, const std::string& what);

  Kind kind() const { return kind_; }
  /// 1-based line number in the source stream, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Immutable simple undirected graph with sorted adjacency and optional
/// per-edge colors. Uncolored graphs report every edge as color 0.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, validating simplicity. Throws GraphFormatError on
  /// self-loops, duplicates or out-of-range endpoints.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                          std::optional<std::vector<Color>> colors = std::nullopt);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }
  bool is_colored() const { return colored_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], degree(v)};
  }
  /// Color of the edge behind the i-th adjacency entry of v.
  Color neighbor_color(VertexId v, std::size_t i) const {
    return colors_[adjacent_edge_[offsets_[v] + i]];
  }

  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  Color edge_color(std::size_t i) const { return colors_[i]; }

  /// Index of edge {u,v} in the edge list, if present.
  std::optional<std::size_t> find_edge(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<std::size_t> adjacent_edge_;
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  bool colored_ = false;
};

/// Parses the text edge-list format (`n m [colored]` header, one edge per
/// line, `#` comments).
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// Degree-then-id total order on vertices.
class VertexOrder {
 public:
  explicit VertexOrder(const Graph& g) : graph_(&g) {}

  bool precedes(VertexId u, VertexId v) const {
    return precedes_by_degree(graph_->degree(u), u, graph_->degree(v), v);
  }

  static bool precedes_by_degree(std::size_t du, VertexId u, std::size_t dv, VertexId v) {
    return du < dv || (du == dv && u < v);
  }

 private:
  const Graph* graph_;
};

/// Sum over edges of the smaller endpoint degree.
std::uint64_t min_degree_sum(const Graph& g);

/// Source of uniform choices consumed by the samplers.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  /// Uniform integer in [0, n), n >= 1.
  virtual std::uint64_t below(std::uint64_t n) = 0;
};

class Mt64Source final : public RandomSource {
 public:
  explicit Mt64Source(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) override {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

struct QueryCounts {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;
  std::uint64_t edge_sample = 0;

  std::uint64_t total() const { return degree + neighbor + pair + edge_sample; }
  QueryCounts& operator+=(const QueryCounts& o) {
    degree += o.degree;
    neighbor += o.neighbor;
    pair += o.pair;
    edge_sample += o.edge_sample;
    return *this;
  }
  friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

class QueryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by a session whose query limit would be exceeded.
class QueryLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NeighborAnswer {
  VertexId vertex;
  Color color;
};

struct PairAnswer {
  bool present;
  Color color;
};

struct EdgeSampleAnswer {
  VertexId u;
  VertexId v;
  Color color;
};

/// The only access path estimators have to a graph. Every query bumps
/// exactly one counter; n and m are known up front and free.
class QuerySession {
 public:
  QuerySession(const Graph& g, std::uint64_t seed);
  QuerySession(const Graph& g, std::unique_ptr<RandomSource> source);

  std::size_t num_vertices() const { return graph_->num_vertices(); }
  std::size_t num_edges() const { return graph_->num_edges(); }
  bool colored() const { return graph_->is_colored(); }

  std::size_t degree(VertexId v);
  NeighborAnswer neighbor(VertexId v, std::size_t i);
  PairAnswer pair(VertexId u, VertexId v);
  EdgeSampleAnswer sample_edge();

  /// Internal coin flips; not a query.
  std::uint64_t uniform(std::uint64_t n) { return source_->below(n); }

  const QueryCounts& counts() const { return counts_; }

  /// Caps the total number of queries; a query beyond the cap throws
  /// QueryLimitExceeded without being answered or counted.
  void set_query_limit(std::optional<std::uint64_t> limit) { limit_ = limit; }

 private:
  void check_vertex(VertexId v) const;
  void charge();

  const Graph* graph_;
  std::unique_ptr<RandomSource> source_;
  QueryCounts counts_;
  std::optional<std::uint64_t> limit_;
};

}  // namespace subcount
