#pragma once

#include "subcount/graph.hpp"
#include "subcount/pattern.hpp"
#include "subcount/rational.hpp"
#include "subcount/samplers.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcount {

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph and pattern disagree on colors, or colorful counting was asked of
/// uncolored inputs.
class ColorModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAStarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EstimationConfig {
  double epsilon = 0.1;
  double c = 64;                        // averaging constant
  std::optional<std::size_t> rounds;    // default: ceil(12 ln n), clamped to [9, 61], odd
  double budget_factor = 10;
  std::uint64_t seed = 1;
  bool colored = false;
  bool star_fast = false;
  std::optional<double> h_hint;
  bool allow_fallback = true;

  void validate() const;
};

struct HTraceEntry {
  double h = 0;
  double median = 0;
  std::uint64_t k = 0;
  std::size_t aborted = 0;
};

struct EstimateReport {
  double estimate = 0;
  Rational f{1};
  Rational rho{0};
  std::size_t rounds = 0;
  std::uint64_t k_used = 0;
  bool fallback_used = false;
  QueryCounts queries;
  std::vector<HTraceEntry> h_trace;
  std::int64_t time_ms = 0;

  /// The machine-readable result line (no trailing newline).
  std::string line() const;
};

/// Amplification rounds for a graph on n vertices.
std::size_t default_rounds(std::size_t n);

/// Analytic upper bound on the expected number of queries of one draw.
double expected_draw_queries(const Pattern& h, const Decomposition& d);

/// Draws per averaged round for lower bound h.
std::uint64_t draws_for(const Decomposition& d, const EstimationConfig& cfg, double m, double h);

/// Mean of k draws; nullopt if the session's query limit stopped the round.
std::optional<double> averaged_estimate(QuerySession& s, SubgraphSampler& sampler,
                                        std::uint64_t k);

/// Median over rounds of averaged estimates of the profile count at guess h,
/// or the exact profile count when sampling would cost more than m queries.
/// Query counts and trace are accumulated into `report`.
double high_probability_estimate(const Graph& g, const Pattern& h, const Decomposition& d,
                                 const EstimationConfig& cfg, double guess,
                                 EstimateReport& report, std::size_t search_step = 0);

/// Estimates the number of copies of H in G (color-matching copies when
/// cfg.colored is set).
EstimateReport count_subgraph(const Graph& g, const Pattern& h, const EstimationConfig& cfg);

/// Colorful counting; requires both graph and pattern to be colored.
EstimateReport count_colorful(const Graph& g, const Pattern& h, EstimationConfig cfg);

/// Star counting with the tighter star-specific draw count.
EstimateReport star_fast_count(const Graph& g, const Pattern& h, EstimationConfig cfg);

}  // namespace subcount
