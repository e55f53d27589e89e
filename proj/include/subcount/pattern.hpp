#pragma once

#include "subcount/graph.hpp"
#include "subcount/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace subcount {

/// Patterns above this size are rejected; the estimator and the oracle are
/// exponential in |V_H|.
inline constexpr std::size_t kMaxPatternVertices = 16;

class InfeasiblePatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The small graph H being counted. Holds no isolated vertices.
class Pattern {
 public:
  explicit Pattern(Graph g);

  const Graph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t num_edges() const { return graph_.num_edges(); }
  bool is_colored() const { return graph_.is_colored(); }

 private:
  Graph graph_;
};

/// Per-edge cover weights, each in {0, 1/2, 1}.
struct EdgeCoverSolution {
  std::vector<Rational> x;
  Rational objective;
};

struct StarComponent {
  VertexId center = 0;
  std::vector<VertexId> petals;
};

/// Vertex-disjoint odd cycles and stars supporting an optimal half-integral
/// edge cover of H. Cycles are stored as closed walks c0,c1,...,c_{2k}
/// (edge c_{2k}-c0 implied).
struct Decomposition {
  std::vector<std::vector<VertexId>> cycles;
  std::vector<StarComponent> stars;
  std::vector<std::size_t> cross_edges;  // indices into H's edge list
  std::vector<Rational> rho_cycle;
  std::vector<Rational> rho_star;
  Rational rho;
  Rational f;                  // uncolored normalization factor
  EdgeCoverSolution cover;     // the cover whose support is the components

  std::size_t num_cycles() const { return cycles.size(); }
  std::size_t num_stars() const { return stars.size(); }
  /// Half-length k of cycle i (length 2k+1).
  std::size_t cycle_half_length(std::size_t i) const { return (cycles[i].size() - 1) / 2; }
};

/// Minimum fractional edge cover via a minimum edge cover of the bipartite
/// double cover. Throws InfeasiblePatternError on an isolated vertex.
EdgeCoverSolution solve_fractional_edge_cover(const Pattern& h);

Decomposition decompose(const Pattern& h);

/// 1 / (number of profiles of H forming a copy of H inside H itself).
/// In colored mode only color-matching copies are counted.
Rational normalization_factor(const Pattern& h, const Decomposition& d, bool colored = false);

/// Sum of the exponents of the selected cycles and stars.
Rational sub_pattern_rho(const Decomposition& d, const std::vector<std::size_t>& cycle_subset,
                         const std::vector<std::size_t>& star_subset);

/// Vertices of H covered by the selected components, in component order.
std::vector<VertexId> component_vertices(const Decomposition& d,
                                         const std::vector<std::size_t>& cycle_subset,
                                         const std::vector<std::size_t>& star_subset);

/// Induced subgraph of H on the given vertices, relabeled 0..k-1 in order.
Pattern induced_pattern(const Pattern& h, const std::vector<VertexId>& vertices);

}  // namespace subcount
