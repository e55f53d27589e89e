#include "subcount/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

namespace subcount {

namespace {

// Unordered pair index p in [0, n(n-1)/2) -> (u, v) with u < v, laid out
// row by row on v: p = v(v-1)/2 + u.
Edge decode_pair(std::uint64_t p) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2);
  while (v * (v - 1) / 2 > p) --v;
  while ((v + 1) * v / 2 <= p) ++v;
  const std::uint64_t u = p - v * (v - 1) / 2;
  return {static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

std::uint64_t encode_pair(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint64_t>(b) * (b - 1) / 2 + a;
}

std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Adds `count` uniformly chosen pairs not already in `taken` (Floyd's
// algorithm over the free pairs when they are few, rejection otherwise).
void add_random_pairs(std::size_t n, std::size_t count, std::unordered_set<std::uint64_t>& taken,
                      std::vector<Edge>& edges, Mt64Source& rng) {
  const std::uint64_t total = pair_count(n);
  if (count == 0) return;
  if (taken.empty() || 4 * (taken.size() + count) < total) {
    // Sparse: Floyd sampling when nothing is taken; rejection when a few are.
    if (taken.empty()) {
      std::unordered_set<std::uint64_t> chosen;
      std::vector<std::uint64_t> order;
      for (std::uint64_t j = total - count; j < total; ++j) {
        std::uint64_t t = rng.below(j + 1);
        std::uint64_t pick = chosen.count(t) ? j : t;
        chosen.insert(pick);
        order.push_back(pick);
      }
      for (std::uint64_t p : order) {
        taken.insert(p);
        edges.push_back(decode_pair(p));
      }
      return;
    }
    std::size_t added = 0;
    while (added < count) {
      std::uint64_t p = rng.below(total);
      if (!taken.insert(p).second) continue;
      edges.push_back(decode_pair(p));
      ++added;
    }
    return;
  }
  std::vector<std::uint64_t> free;
  for (std::uint64_t p = 0; p < total; ++p) {
    if (!taken.count(p)) free.push_back(p);
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(free.size() - i));
    std::swap(free[i], free[j]);
    taken.insert(free[i]);
    edges.push_back(decode_pair(free[i]));
  }
}

}  // namespace

DisjInstance gen_disjointness(std::size_t K, std::size_t k,
                              std::optional<std::pair<std::size_t, std::size_t>> hit) {
  if (K < 4) throw GeneratorError("layer size K must be at least 4");
  if (k < 1) throw GeneratorError("cycle parameter k must be at least 1");
  if (hit) {
    auto [i, j] = *hit;
    if (i >= K || j >= K) throw GeneratorError("intersecting index out of range");
    if (i == j) throw GeneratorError("intersecting index lies on the diagonal");
    if (i > j) hit = std::pair{j, i};
  }
  auto id = [K](std::size_t layer, std::size_t i) { return static_cast<VertexId>(layer * K + i); };

  std::vector<Edge> edges;
  for (std::size_t layer = 1; layer < k; ++layer) {
    for (std::size_t a = 0; a < K; ++a) {
      for (std::size_t b = 0; b < K; ++b) edges.push_back({id(layer, a), id(layer + 1, b)});
    }
  }
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = i + 1; j < K; ++j) {
      if (hit && hit->first == i && hit->second == j) {
        edges.push_back({id(0, i), id(0, j)});
        edges.push_back({id(1, i), id(1, j)});
      } else {
        edges.push_back({id(0, i), id(1, j)});
        edges.push_back({id(0, j), id(1, i)});
      }
    }
  }
  return {K, k, hit, Graph::from_edges((k + 1) * K, edges)};
}

std::vector<Rational> solve_fractional_independent_set(const Pattern& h) {
  const Graph& g = h.graph();
  const std::size_t n = g.num_vertices();
  std::vector<int> cur(n, 0), best;
  int best_sum = -1;

  // Depth-first in lexicographic order; only strict improvements are kept,
  // so the first optimum found is the lexicographically smallest.
  auto dfs = [&](auto&& self, std::size_t a, int sum) -> void {
    if (sum + 2 * static_cast<int>(n - a) <= best_sum) return;
    if (a == n) {
      best_sum = sum;
      best = cur;
      return;
    }
    for (int val = 0; val <= 2; ++val) {
      bool ok = true;
      for (VertexId b : g.neighbors(static_cast<VertexId>(a))) {
        if (b < a && cur[b] + val > 2) {
          ok = false;
          break;
        }
      }
      if (!ok) break;  // larger values only get worse
      cur[a] = val;
      self(self, a + 1, sum + val);
    }
    cur[a] = 0;
  };
  dfs(dfs, 0, 0);

  std::vector<Rational> y;
  for (int v : best) y.push_back(Rational(v, 2));
  return y;
}

JoinInstance gen_join_lowerbound(const Pattern& h, std::uint64_t m, JoinWhich which,
                                 std::uint64_t seed) {
  const Graph& hg = h.graph();
  if (hg.num_edges() == 0) throw GeneratorError("pattern has no edges");
  if (m < 1) throw GeneratorError("m must be positive");
  std::vector<Rational> y = solve_fractional_independent_set(h);

  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(m))));
  std::vector<std::size_t> size(hg.num_vertices());
  for (std::size_t a = 0; a < size.size(); ++a) {
    if (y[a] == Rational(0)) {
      size[a] = 1;
    } else if (y[a] == Rational(1)) {
      size[a] = m;
    } else {
      if (root * root != m) {
        throw GeneratorError("m = " + std::to_string(m) +
                             " is not a perfect square; block sizes m^(1/2) must be integers");
      }
      size[a] = root;
    }
  }

  std::optional<std::size_t> f_star;
  for (std::size_t e = 0; e < hg.num_edges(); ++e) {
    const Edge& ed = hg.edge(e);
    if (y[ed.u] + y[ed.v] != Rational(1)) continue;
    if (!f_star || ed < hg.edge(*f_star)) f_star = e;
  }
  if (!f_star) throw GeneratorError("no tight edge in the independent-set solution");

  std::vector<VertexId> start(size.size() + 1, 0);
  for (std::size_t a = 0; a < size.size(); ++a) {
    start[a + 1] = start[a] + static_cast<VertexId>(size[a]);
  }

  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (const Edge& ed : hg.edges()) {
    for (VertexId x = start[ed.u]; x < start[ed.u + 1]; ++x) {
      for (VertexId z = start[ed.v]; z < start[ed.v + 1]; ++z) edges.push_back({x, z});
    }
  }
  colors.assign(edges.size(), 0);

  std::optional<Edge> e_star;
  if (which == JoinWhich::G1) {
    Mt64Source rng(seed);
    const Edge& fe = hg.edge(*f_star);
    VertexId x = start[fe.u] + static_cast<VertexId>(rng.below(size[fe.u]));
    VertexId z = start[fe.v] + static_cast<VertexId>(rng.below(size[fe.v]));
    e_star = Edge{std::min(x, z), std::max(x, z)};
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (Edge{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)} == *e_star) {
        colors[i] = 1;
      }
    }
  }

  std::vector<Color> pattern_colors(hg.num_edges(), 0);
  pattern_colors[*f_star] = 1;
  Pattern colored_h(Graph::from_edges(hg.num_vertices(), hg.edges(), pattern_colors));

  return JoinInstance{Graph::from_edges(start.back(), edges, colors),
                      std::move(colored_h),
                      std::move(y),
                      *f_star,
                      std::move(size),
                      std::vector<VertexId>(start.begin(), start.end() - 1),
                      e_star};
}

Graph gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > pair_count(n)) {
    throw GeneratorError("m = " + std::to_string(m) + " exceeds the " +
                         std::to_string(pair_count(n)) + " possible edges");
  }
  Mt64Source rng(seed);
  std::unordered_set<std::uint64_t> taken;
  std::vector<Edge> edges;
  add_random_pairs(n, m, taken, edges, rng);
  return Graph::from_edges(n, edges);
}

Graph gen_planted(const Pattern& h, std::size_t copies, std::size_t n, std::size_t m,
                  std::uint64_t seed) {
  const Graph& hg = h.graph();
  if (copies * hg.num_vertices() > n) {
    throw GeneratorError("not enough vertices for " + std::to_string(copies) + " disjoint copies");
  }
  if (copies * hg.num_edges() > m) {
    throw GeneratorError("m is smaller than the planted edge count");
  }
  if (m > pair_count(n)) throw GeneratorError("m exceeds the possible edges");

  Mt64Source rng(seed);
  std::unordered_set<std::uint64_t> taken;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < copies; ++c) {
    const auto base = static_cast<VertexId>(c * hg.num_vertices());
    for (const Edge& e : hg.edges()) {
      edges.push_back({base + e.u, base + e.v});
      taken.insert(encode_pair(base + e.u, base + e.v));
    }
  }
  add_random_pairs(n, m - edges.size(), taken, edges, rng);

  std::vector<VertexId> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[i] = static_cast<VertexId>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(relabel[i - 1], relabel[rng.below(i)]);
  }
  for (Edge& e : edges) e = {relabel[e.u], relabel[e.v]};
  return Graph::from_edges(n, edges);
}

Pattern make_clique(std::size_t k) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < k; ++a) {
    for (VertexId b = a + 1; b < k; ++b) edges.push_back({a, b});
  }
  return Pattern(Graph::from_edges(k, edges));
}

Pattern make_cycle(std::size_t length) {
  if (length < 3) throw GeneratorError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId a = 0; a < length; ++a) {
    edges.push_back({a, static_cast<VertexId>((a + 1) % length)});
  }
  return Pattern(Graph::from_edges(length, edges));
}

Pattern make_star(std::size_t petals) {
  std::vector<Edge> edges;
  for (VertexId p = 1; p <= petals; ++p) edges.push_back({0, p});
  return Pattern(Graph::from_edges(petals + 1, edges));
}

Pattern make_path(std::size_t vertices) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a + 1 < vertices; ++a) edges.push_back({a, a + 1});
  return Pattern(Graph::from_edges(vertices, edges));
}

Pattern make_figure1() {
  // a=0 b=1 c=2 d=3 e=4 f=5 g=6 h=7
  return Pattern(Graph::from_edges(
      8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 6}, {5, 7}, {0, 3}, {1, 5}}));
}

}  // namespace subcount
