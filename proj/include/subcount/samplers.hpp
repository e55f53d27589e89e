#pragma once

#include "subcount/graph.hpp"
#include "subcount/pattern.hpp"
#include "subcount/profiles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace subcount {

/// Smallest t >= 1 with t^2 * m >= d^2, i.e. ceil(d / sqrt(m)) computed exactly.
std::uint64_t cycle_fanout(std::uint64_t d_star, std::uint64_t m);

/// C(n, k) as a double (exact for the magnitudes used here).
double binomial(std::uint64_t n, std::uint64_t k);

/// The top of an odd-cycle block: k oriented edges, the first one oriented
/// along the degree order, plus the number of closing-vertex children.
struct CycleBlock {
  std::vector<VertexId> u;  // u_1..u_k
  std::vector<VertexId> v;  // v_1..v_k
  std::size_t d_star = 0;   // degree of u_1
  std::uint64_t t = 0;
  double root_value = 0;    // (2m)^k / 2
};

CycleBlock sample_odd_cycle(SessionAccess& access, std::size_t k);

/// A closing vertex w drawn uniformly from N(u_1); its node value is d_star.
VertexId sample_cycle_closer(SessionAccess& access, const CycleBlock& block);

struct StarBlock {
  VertexId center = 0;
  std::vector<VertexId> petals;  // sorted; empty when dead
  std::size_t degree = 0;
  bool dead = false;             // degree < petal count
  double root_value = 0;         // 2m / d_v
  double leaf_value = 0;         // C(d_v, l)
};

StarBlock sample_star(SessionAccess& access, std::size_t petals);

/// Per-leaf record of one draw: the profile reached, the node values along
/// its root-to-leaf path, the product of 1/t weights, and the multiplicity.
struct TraceLeaf {
  SubgraphProfile profile;
  std::vector<double> node_values;
  double weight = 1;
  std::uint64_t multiplicity = 0;
};

struct DrawTrace {
  std::vector<TraceLeaf> leaves;
  std::vector<std::uint64_t> fanouts;  // t of every cycle block sampled

  void clear() {
    leaves.clear();
    fanouts.clear();
  }
  /// Sum over leaves of weight * product(node values) * multiplicity.
  double total() const;
};

/// One line per draw: "Y=<value> leaves=<n>" then per leaf its profile and values.
std::string format_trace(double y, const DrawTrace& trace);

/// Draws the recursive subgraph-sampler estimate Y, whose expectation is the
/// profile count of H in G (copies times 1/f).
class SubgraphSampler {
 public:
  SubgraphSampler(const Pattern& h, const Decomposition& d, bool colored);

  double draw(QuerySession& session, DrawTrace* trace = nullptr);

  const Decomposition& decomposition() const { return *decomposition_; }

 private:
  double descend(SessionAccess& access, std::size_t slot, SubgraphProfile& profile,
                 DrawTrace* trace, std::vector<double>& path, double weight);

  const Decomposition* decomposition_;
  ProfileChecker checker_;
};

}  // namespace subcount
