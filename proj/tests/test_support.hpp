#pragma once

#include "subcount/graph.hpp"
#include "subcount/pattern.hpp"
#include "subcount/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace subcount;

inline Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

/// Every connected simple graph on exactly n vertices, one per isomorphism
/// class (canonical form = smallest adjacency bitmask over all relabelings).
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < static_cast<int>(n); ++a) {
    for (int b = a + 1; b < static_cast<int>(n); ++b) slots.push_back({a, b});
  }
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_of[slots[i].first][slots[i].second] = slot_of[slots[i].second][slots[i].first] =
        static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  const std::uint32_t total = 1u << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // Connectivity by a simple flood fill.
    std::vector<bool> reach(n, false);
    std::vector<int> stack{0};
    reach[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < static_cast<int>(n); ++w) {
        if (w != v && !reach[w] && (mask >> slot_of[v][w] & 1)) {
          reach[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (std::find(reach.begin(), reach.end(), false) != reach.end()) continue;

    std::uint32_t canon = mask;
    for (const auto& perm : perms) {
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1) img |= 1u << slot_of[perm[slots[i].first]][perm[slots[i].second]];
      }
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (canon >> i & 1) {
        edges.push_back({static_cast<VertexId>(slots[i].first),
                         static_cast<VertexId>(slots[i].second)});
      }
    }
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

/// Minimum of sum x_e over feasible x in {0, 1/2, 1}^E, by exhaustive
/// branch-and-bound (values tried 0, 1/2, 1 per edge).
inline Rational brute_force_cover(const Graph& h) {
  const std::size_t m = h.num_edges();
  const std::size_t n = h.num_vertices();
  std::vector<int> cover(n, 0);        // in halves
  std::vector<std::size_t> last_edge(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    last_edge[h.edge(i).u] = i;
    last_edge[h.edge(i).v] = i;
  }
  int best = 1 << 30;
  auto dfs = [&](auto&& self, std::size_t i, int sum) -> void {
    if (sum >= best) return;
    if (i == m) {
      best = sum;
      return;
    }
    const Edge& e = h.edge(i);
    for (int val = 0; val <= 2; ++val) {
      cover[e.u] += val;
      cover[e.v] += val;
      bool dead = (last_edge[e.u] == i && cover[e.u] < 2) || (last_edge[e.v] == i && cover[e.v] < 2);
      if (!dead) self(self, i + 1, sum + val);
      cover[e.u] -= val;
      cover[e.v] -= val;
    }
  };
  dfs(dfs, 0, 0);
  return Rational(best, 2);
}

/// Replays a decision tree of uniform choices depth-first so that every
/// possible run of a randomized procedure is visited exactly once.
class Odometer {
 public:
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t c;
    if (pos_ < prefix_.size()) {
      c = prefix_[pos_];
      radix_[pos_] = n;
    } else {
      prefix_.push_back(0);
      radix_.push_back(n);
      c = 0;
    }
    ++pos_;
    return c;
  }

  /// Probability of the run just completed.
  Rational probability() const {
    Rational p(1);
    for (std::size_t i = 0; i < pos_; ++i) p /= static_cast<std::int64_t>(radix_[i]);
    return p;
  }

  /// Moves to the next run; false when all runs were visited.
  bool advance() {
    prefix_.resize(pos_);
    radix_.resize(pos_);
    pos_ = 0;
    while (!prefix_.empty() && prefix_.back() + 1 == radix_.back()) {
      prefix_.pop_back();
      radix_.pop_back();
    }
    if (prefix_.empty()) return false;
    ++prefix_.back();
    return true;
  }

 private:
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> radix_;
  std::size_t pos_ = 0;
};

class OdometerSource final : public RandomSource {
 public:
  explicit OdometerSource(Odometer& o) : odometer_(&o) {}
  std::uint64_t below(std::uint64_t n) override { return odometer_->below(n); }

 private:
  Odometer* odometer_;
};

/// Exact rational value of a finite double whose binary expansion fits.
inline Rational exact_rational(double x) {
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // x = mant * 2^exp with mant in [0.5, 1); scale to a 53-bit integer.
  auto num = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(num);
  while (exp > 0) {
    r *= 2;
    --exp;
  }
  while (exp < 0) {
    r /= 2;
    ++exp;
  }
  return r;
}

/// Half-integral, feasible, and supported exactly on the components.
inline bool cover_matches_components(const Graph& h, const Decomposition& d) {
  std::vector<int> owner(h.num_vertices(), -1);
  int id = 0;
  for (const auto& c : d.cycles) {
    if (c.size() < 3 || c.size() % 2 == 0) return false;
    for (VertexId v : c) {
      if (owner[v] != -1) return false;
      owner[v] = id;
    }
    ++id;
  }
  for (const auto& s : d.stars) {
    if (s.petals.empty()) return false;
    if (owner[s.center] != -1) return false;
    owner[s.center] = id;
    for (VertexId p : s.petals) {
      if (owner[p] != -1) return false;
      owner[p] = id;
    }
    ++id;
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;

  std::vector<Rational> expected(h.num_edges(), Rational(0));
  for (const auto& c : d.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto e = h.find_edge(c[i], c[(i + 1) % c.size()]);
      if (!e) return false;
      expected[*e] = Rational(1, 2);
    }
  }
  for (const auto& s : d.stars) {
    for (VertexId p : s.petals) {
      auto e = h.find_edge(s.center, p);
      if (!e) return false;
      expected[*e] = Rational(1);
    }
  }
  if (expected != d.cover.x) return false;
  std::vector<Rational> load(h.num_vertices(), Rational(0));
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    load[h.edge(i).u] += d.cover.x[i];
    load[h.edge(i).v] += d.cover.x[i];
  }
  for (const auto& l : load) {
    if (l < Rational(1)) return false;
  }
  std::size_t cross = 0;
  for (const auto& x : d.cover.x) cross += x == Rational(0);
  return cross == d.cross_edges.size();
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Random graph on n vertices with every pair present with probability p.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.push_back({a, b});
    }
  }
  return Graph::from_edges(n, edges);
}

/// Random connected pattern on n vertices (spanning path plus extra edges),
/// with its vertices shuffled.
inline Pattern random_connected_pattern(std::size_t n, double extra, std::mt19937_64& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<VertexId, VertexId>> es;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    VertexId a = perm[i], b = perm[parent(rng)];
    es.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution coin(extra);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) es.insert({a, b});
    }
  }
  std::vector<Edge> edges;
  for (auto [a, b] : es) edges.push_back({a, b});
  return Pattern(Graph::from_edges(n, edges));
}

}  // namespace testing_support
