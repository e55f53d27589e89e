#pragma once

#include "subcount/graph.hpp"
#include "subcount/pattern.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace subcount {

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 2'000'000'000ULL;

struct ExactCount {
  std::uint64_t subgraph_count = 0;   // copies of H in G
  std::uint64_t profile_count = 0;    // subgraph_count / f(H)
  std::optional<std::uint64_t> colorful_count;
};

/// Injective maps V_H -> V_G sending edges to edges (colors must agree when
/// `colored`). `budget` caps the number of search nodes.
std::uint64_t count_embeddings(const Graph& g, const Graph& h, bool colored = false,
                               std::uint64_t budget = kDefaultOracleBudget);

/// Embeddings of H into itself.
std::uint64_t count_automorphisms(const Graph& h, bool colored = false);

/// Number of subgraphs of G isomorphic to H (color-matching when `colored`).
std::uint64_t count_copies(const Graph& g, const Graph& h, bool colored = false,
                           std::uint64_t budget = kDefaultOracleBudget);

/// Exact counts; colorful_count is filled when both graphs are colored.
ExactCount exact_count(const Graph& g, const Pattern& h,
                       std::uint64_t budget = kDefaultOracleBudget);

/// Sum over every subgraph profile of G of its copy multiplicity, found by
/// enumerating all cycle, center and petal choices directly.
std::uint64_t exact_profile_enumeration(const Graph& g, const Pattern& h, const Decomposition& d,
                                        bool colored = false,
                                        std::uint64_t budget = kDefaultOracleBudget);

struct AgmReport {
  bool holds = true;
  std::uint64_t count = 0;
  double bound = 0;
  std::size_t sub_patterns_checked = 0;
};

/// Checks #H <= m^rho(H) and the same bound for the induced pattern on every
/// subset of decomposition components.
AgmReport agm_check(const Graph& g, const Pattern& h, const Decomposition& d);

}  // namespace subcount
