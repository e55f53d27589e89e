#include "subcount/estimator.hpp"

#include "subcount/oracle.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace subcount {

namespace {

constexpr double kMaxDraws = 4.0e18;

std::uint64_t round_seed(std::uint64_t seed, std::size_t step, std::size_t round) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(round)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::uint64_t saturating_ceil(double x) {
  if (!(x < kMaxDraws)) return static_cast<std::uint64_t>(kMaxDraws);
  return static_cast<std::uint64_t>(std::ceil(std::max(x, 1.0)));
}

}  // namespace

void EstimationConfig::validate() const {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(c >= 1)) throw std::invalid_argument("averaging constant must be >= 1");
  if (!(budget_factor > 0)) throw std::invalid_argument("budget factor must be positive");
  if (rounds && (*rounds == 0 || *rounds % 2 == 0)) {
    throw std::invalid_argument("round count must be odd and positive");
  }
  if (h_hint && !(*h_hint >= 1)) throw std::invalid_argument("h hint must be >= 1");
}

std::string EstimateReport::line() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "estimate=%.10g f=%s rho=%s rounds=%zu k=%llu fallback=%d q_degree=%llu "
                "q_neighbor=%llu q_pair=%llu q_edge=%llu time_ms=%lld",
                estimate, to_string(f).c_str(), to_string(rho).c_str(), rounds,
                static_cast<unsigned long long>(k_used), fallback_used ? 1 : 0,
                static_cast<unsigned long long>(queries.degree),
                static_cast<unsigned long long>(queries.neighbor),
                static_cast<unsigned long long>(queries.pair),
                static_cast<unsigned long long>(queries.edge_sample),
                static_cast<long long>(time_ms));
  return buf;
}

std::size_t default_rounds(std::size_t n) {
  double r = std::ceil(12.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 1))));
  auto rounds = static_cast<std::size_t>(std::clamp(r, 9.0, 61.0));
  if (rounds % 2 == 0) ++rounds;
  return rounds;
}

double expected_draw_queries(const Pattern& h, const Decomposition& d) {
  // A cycle block costs k edge samples, two degree queries and on average at
  // most six closing neighbor queries; each of its children repeats the rest.
  double total = 0;
  double fan = 1;
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    total += fan * (static_cast<double>(d.cycle_half_length(i)) + 8);
    fan *= 6;
  }
  double tail = 0;
  for (const auto& s : d.stars) tail += 2 + static_cast<double>(s.petals.size());
  const double v = static_cast<double>(h.num_vertices());
  tail += v * (v - 1) / 2 + v;  // leaf check: pairs and degrees
  return total + fan * tail;
}

std::uint64_t draws_for(const Decomposition& d, const EstimationConfig& cfg, double m, double h) {
  const double eps2 = cfg.epsilon * cfg.epsilon;
  if (cfg.star_fast) {
    const double l = static_cast<double>(d.stars.front().petals.size());
    return saturating_ceil(cfg.c * 4 * std::pow(l, 2 * l) * m / (eps2 * std::pow(h, 1 / l)));
  }
  return saturating_ceil(cfg.c * std::pow(m, to_double(d.rho)) / (eps2 * h));
}

std::optional<double> averaged_estimate(QuerySession& s, SubgraphSampler& sampler,
                                        std::uint64_t k) {
  double sum = 0;
  try {
    for (std::uint64_t i = 0; i < k; ++i) sum += sampler.draw(s);
  } catch (const QueryLimitExceeded&) {
    return std::nullopt;
  }
  return sum / static_cast<double>(k);
}

double high_probability_estimate(const Graph& g, const Pattern& h, const Decomposition& d,
                                 const EstimationConfig& cfg, double guess,
                                 EstimateReport& report, std::size_t search_step) {
  const double m = static_cast<double>(g.num_edges());
  const std::uint64_t k = draws_for(d, cfg, m, std::max(guess, 1.0));
  report.k_used = k;
  report.rounds = cfg.rounds.value_or(default_rounds(g.num_vertices()));

  if (cfg.allow_fallback && (static_cast<double>(k) >= m || guess < 1)) {
    // Reading every edge costs m queries; the rest is offline enumeration.
    report.fallback_used = true;
    report.queries.pair += g.num_edges();
    const double copies = static_cast<double>(count_copies(g, h.graph(), cfg.colored));
    const double profiles = copies / to_double(report.f);
    report.h_trace.push_back({guess, profiles, k, 0});
    return profiles;
  }

  const double cap = cfg.budget_factor * static_cast<double>(k) * expected_draw_queries(h, d);
  const auto limit = cap >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                                   : static_cast<std::uint64_t>(cap);
  SubgraphSampler sampler(h, d, cfg.colored);
  std::vector<double> survivors;
  std::size_t aborted = 0;
  for (std::size_t r = 0; r < report.rounds; ++r) {
    QuerySession session(g, round_seed(cfg.seed, search_step, r));
    session.set_query_limit(limit);
    auto z = averaged_estimate(session, sampler, k);
    report.queries += session.counts();
    if (z) {
      survivors.push_back(*z);
    } else {
      ++aborted;
    }
  }
  if (survivors.empty()) {
    report.h_trace.push_back({guess, 0, k, aborted});
    throw BudgetExhausted("every amplification round exceeded its query budget");
  }
  if (survivors.size() % 2 == 0) survivors.pop_back();
  auto mid = survivors.begin() + static_cast<std::ptrdiff_t>(survivors.size() / 2);
  std::nth_element(survivors.begin(), mid, survivors.end());
  report.h_trace.push_back({guess, *mid, k, aborted});
  return *mid;
}

EstimateReport count_subgraph(const Graph& g, const Pattern& h, const EstimationConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  if (cfg.colored && !(g.is_colored() && h.is_colored())) {
    throw ColorModeError("colorful counting needs a colored graph and a colored pattern");
  }
  const Decomposition d = decompose(h);
  if (cfg.star_fast && !(d.cycles.empty() && d.stars.size() == 1 && d.cross_edges.empty())) {
    throw NotAStarError("fast star counting needs a pattern that is a single star");
  }

  EstimateReport report;
  report.rho = d.rho;
  report.f = cfg.colored ? normalization_factor(h, d, true) : d.f;
  report.rounds = cfg.rounds.value_or(default_rounds(g.num_vertices()));
  auto finish = [&](double profiles) {
    report.estimate = to_double(report.f) * profiles;
    report.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  };

  if (g.num_edges() == 0) return finish(0);

  if (cfg.h_hint) return finish(high_probability_estimate(g, h, d, cfg, *cfg.h_hint, report));

  const double m = static_cast<double>(g.num_edges());
  double guess = std::pow(m, to_double(d.rho)) / 2;
  std::size_t step = 0;
  std::optional<double> previous;  // estimate at the previous guess, if it was consistent
  double last = 0;
  while (guess >= 1) {
    double z = high_probability_estimate(g, h, d, cfg, guess, report, step++);
    if (report.fallback_used) return finish(z);
    if (previous && z >= guess &&
        std::abs(z - *previous) <= 2 * cfg.epsilon * std::max(z, *previous)) {
      return finish(z);
    }
    previous = z >= guess ? std::optional<double>(z) : std::nullopt;
    last = z;
    guess /= 2;
  }
  if (cfg.allow_fallback) return finish(high_probability_estimate(g, h, d, cfg, guess, report));
  return finish(last);
}

EstimateReport count_colorful(const Graph& g, const Pattern& h, EstimationConfig cfg) {
  if (!g.is_colored() || !h.is_colored()) {
    throw ColorModeError("colorful counting needs a colored graph and a colored pattern");
  }
  cfg.colored = true;
  return count_subgraph(g, h, cfg);
}

EstimateReport star_fast_count(const Graph& g, const Pattern& h, EstimationConfig cfg) {
  cfg.star_fast = true;
  return count_subgraph(g, h, cfg);
}

}  // namespace subcount
