#pragma once

#include "subcount/graph.hpp"
#include "subcount/pattern.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace subcount {

/// Read access to G used when checking profiles. Implementations either
/// charge queries to a session or read a graph directly.
class GraphAccess {
 public:
  virtual ~GraphAccess() = default;
  virtual std::size_t degree(VertexId v) = 0;
  virtual PairAnswer pair(VertexId u, VertexId v) = 0;

  bool precedes(VertexId u, VertexId v) {
    return VertexOrder::precedes_by_degree(degree(u), u, degree(v), v);
  }
};

/// Free access straight from a Graph (oracle side).
class DirectAccess final : public GraphAccess {
 public:
  explicit DirectAccess(const Graph& g) : graph_(&g) {}
  std::size_t degree(VertexId v) override { return graph_->degree(v); }
  PairAnswer pair(VertexId u, VertexId v) override;

 private:
  const Graph* graph_;
};

/// Query-charging access with a per-draw memo: a degree or pair answer is
/// paid for once per draw, and edges already revealed by edge-sample or
/// neighbor queries are free.
class SessionAccess final : public GraphAccess {
 public:
  explicit SessionAccess(QuerySession& s) : session_(&s) {}

  std::size_t degree(VertexId v) override;
  PairAnswer pair(VertexId u, VertexId v) override;

  void learn_degree(VertexId v, std::size_t d);
  void learn_edge(VertexId u, VertexId v, Color c);
  void reset() {
    degrees_.clear();
    pairs_.clear();
  }

  QuerySession& session() { return *session_; }

 private:
  static std::uint64_t key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  QuerySession* session_;
  std::vector<std::pair<VertexId, std::size_t>> degrees_;
  std::vector<std::pair<std::uint64_t, PairAnswer>> pairs_;
};

/// (e, w) for a cycle of length 2k+1: vertex sequence u1 v1 u2 v2 ... uk vk w.
struct CycleProfile {
  std::vector<VertexId> sequence;

  std::size_t half_length() const { return (sequence.size() - 1) / 2; }
  VertexId u1() const { return sequence.front(); }
  VertexId v1() const { return sequence[1]; }
  VertexId w() const { return sequence.back(); }
};

/// (v, W) for a star; petals kept sorted.
struct StarProfile {
  VertexId center = 0;
  std::vector<VertexId> petals;
};

struct SubgraphProfile {
  std::vector<CycleProfile> cycles;
  std::vector<StarProfile> stars;
};

/// Distinct vertices, u1 minimal under the degree order, v1 before w, and
/// every consecutive edge (including w-u1) present.
bool forms_cycle(GraphAccess& g, const CycleProfile& p);

/// Distinct petals adjacent to the center, center not a petal, and for a
/// single petal the center precedes it.
bool forms_star(GraphAccess& g, const StarProfile& p);

/// Precomputed view of (H, D(H)) for repeated profile checks.
class ProfileChecker {
 public:
  ProfileChecker(const Pattern& h, const Decomposition& d, bool colored);

  /// Number of distinct copies of H in G whose components are exactly the
  /// components named by the profile (0 when the profile is invalid). A copy
  /// is identified by its edge set; copies differing only in how the
  /// components are aligned are counted once.
  std::uint64_t multiplicity(GraphAccess& g, const SubgraphProfile& r) const;

  const Pattern& pattern() const { return *pattern_; }
  const Decomposition& decomposition() const { return *decomposition_; }
  bool colored() const { return colored_; }

 private:
  // One unit of the alignment search: a whole cycle (2L rotations and
  // reflections), a single-edge star (two orientations), a star center, or
  // one petal.
  struct Step {
    enum class Kind { Cycle, SingleEdge, Center, Petal } kind;
    std::size_t component = 0;
    VertexId vertex = 0;
    std::vector<std::size_t> cross_checks;  // cross edges completed here
  };

  bool search(GraphAccess& g, const SubgraphProfile& r, std::size_t step,
              std::vector<VertexId>& phi, std::vector<bool>& used_petal,
              std::vector<std::vector<std::uint64_t>>& found) const;
  bool component_colors_match(GraphAccess& g, const SubgraphProfile& r) const;

  const Pattern* pattern_;
  const Decomposition* decomposition_;
  bool colored_;
  std::vector<Step> steps_;
  std::vector<std::pair<VertexId, VertexId>> cross_;  // H endpoints
  std::vector<Color> cross_color_;
};

std::uint64_t copy_multiplicity(GraphAccess& g, const Pattern& h, const Decomposition& d,
                                const SubgraphProfile& r, bool colored = false);

inline bool forms_copy(GraphAccess& g, const Pattern& h, const Decomposition& d,
                       const SubgraphProfile& r, bool colored = false) {
  return copy_multiplicity(g, h, d, r, colored) > 0;
}

}  // namespace subcount
