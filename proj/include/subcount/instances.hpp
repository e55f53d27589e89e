#pragma once

#include "subcount/graph.hpp"
#include "subcount/pattern.hpp"
#include "subcount/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace subcount {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Layered graph encoding a set-disjointness instance: layers V1..V_{k+1} of
/// K vertices each (vertex i of layer l has id l*K + i). Consecutive layers
/// from V2 on are completely joined. Each unordered index pair {i,j} adds
/// either two V1-V2 cross edges or, for the intersecting pair, one edge
/// inside V1 and one inside V2; degrees do not depend on which.
struct DisjInstance {
  std::size_t K = 0;
  std::size_t k = 0;
  std::optional<std::pair<std::size_t, std::size_t>> hit;
  Graph graph;
};

DisjInstance gen_disjointness(std::size_t K, std::size_t k,
                              std::optional<std::pair<std::size_t, std::size_t>> hit);

enum class JoinWhich { G0, G1 };

/// Block blow-up of H along an optimal fractional independent set y*:
/// vertex a becomes a block of m^{y*_a} vertices and each H-edge a complete
/// bipartite graph between blocks. In G1 one edge between the blocks of the
/// tight edge f* is recolored 1; H carries color 1 on f*.
struct JoinInstance {
  Graph graph;
  Pattern pattern;
  std::vector<Rational> y;
  std::size_t f_star = 0;                   // index into the pattern's edges
  std::vector<std::size_t> block_size;
  std::vector<VertexId> block_start;
  std::optional<Edge> e_star;
};

/// Maximum of sum y_a with y_a + y_b <= 1 on edges, over {0, 1/2, 1}^{V_H};
/// the lexicographically smallest optimum.
std::vector<Rational> solve_fractional_independent_set(const Pattern& h);

JoinInstance gen_join_lowerbound(const Pattern& h, std::uint64_t m, JoinWhich which,
                                 std::uint64_t seed);

/// Uniform simple graph with exactly m edges.
Graph gen_random(std::size_t n, std::size_t m, std::uint64_t seed);

/// `copies` vertex-disjoint copies of H on the first vertices, then uniform
/// background edges up to m in total, then a random relabeling.
Graph gen_planted(const Pattern& h, std::size_t copies, std::size_t n, std::size_t m,
                  std::uint64_t seed);

/// Small named patterns used by tests, benchmarks and the CLI.
Pattern make_clique(std::size_t k);
Pattern make_cycle(std::size_t length);
Pattern make_star(std::size_t petals);
Pattern make_path(std::size_t vertices);
/// Triangle a-b-c with a pendant path a-d-e and a two-petal star f{g,h}
/// hanging off b: decomposes into C3, S1 and S2 with rho = 9/2.
Pattern make_figure1();

}  // namespace subcount
