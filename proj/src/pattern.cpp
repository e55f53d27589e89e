#include "subcount/pattern.hpp"

#include "subcount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace subcount {

Pattern::Pattern(Graph g) : graph_(std::move(g)) {
  if (graph_.num_vertices() == 0) throw InfeasiblePatternError("pattern has no vertices");
  if (graph_.num_vertices() > kMaxPatternVertices) {
    throw InfeasiblePatternError("pattern has " + std::to_string(graph_.num_vertices()) +
                                 " vertices; at most " + std::to_string(kMaxPatternVertices) +
                                 " supported");
  }
  for (VertexId v = 0; v < graph_.num_vertices(); ++v) {
    if (graph_.degree(v) == 0) {
      throw InfeasiblePatternError("pattern vertex " + std::to_string(v) +
                                   " is isolated; no edge cover exists");
    }
  }
}

namespace {

// Kuhn's augmenting-path matching; left vertices scanned in id order.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right,
                   std::vector<std::vector<std::size_t>> adjacency)
      : adj_(std::move(adjacency)), match_left_(left, kNone), match_right_(right, kNone) {}

  void run() {
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      visited_.assign(match_right_.size(), false);
      augment(u);
    }
  }

  std::size_t left_match(std::size_t u) const { return match_left_[u]; }
  std::size_t right_match(std::size_t v) const { return match_right_[v]; }
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  bool augment(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] == kNone || augment(match_right_[v])) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

struct SupportCycle {
  std::vector<VertexId> vertices;     // c0..c_{L-1}
  std::vector<std::size_t> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod L]
};

// Finds any cycle among edges with weight[e] > 0 and !frozen[e].
std::optional<SupportCycle> find_support_cycle(const Graph& h, const std::vector<int>& halves,
                                               const std::vector<bool>& frozen) {
  const std::size_t n = h.num_vertices();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<VertexId> parent(n, 0);
  std::vector<std::size_t> parent_edge(n, static_cast<std::size_t>(-1));

  auto usable = [&](std::size_t e) { return halves[e] > 0 && !frozen[e]; };

  for (VertexId root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    // Iterative DFS keeping (vertex, next adjacency index).
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto nb = h.neighbors(v);
      if (idx == nb.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      VertexId w = nb[idx++];
      std::size_t e = *h.find_edge(v, w);
      if (!usable(e) || e == parent_edge[v]) continue;
      if (state[w] == 1) {
        SupportCycle cyc;
        // Walk back from v to w along parent edges.
        std::vector<VertexId> path{v};
        std::vector<std::size_t> path_edges;
        VertexId cur = v;
        while (cur != w) {
          path_edges.push_back(parent_edge[cur]);
          cur = parent[cur];
          path.push_back(cur);
        }
        // path = v, ..., w ; reverse to w, ..., v then close with e (v-w).
        std::reverse(path.begin(), path.end());
        std::reverse(path_edges.begin(), path_edges.end());
        cyc.vertices = path;
        cyc.edges = path_edges;
        cyc.edges.push_back(e);
        return cyc;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        stack.push_back({w, 0});
      }
    }
  }
  return std::nullopt;
}

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

}  // namespace

EdgeCoverSolution solve_fractional_edge_cover(const Pattern& h) {
  const Graph& g = h.graph();
  const std::size_t n = g.num_vertices();

  // Double cover: left copy a^L, right copy b^R; edge (a,b) yields a^L-b^R and b^L-a^R.
  std::vector<std::vector<std::size_t>> adj(n);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b : g.neighbors(a)) adj[a].push_back(b);
  }
  BipartiteMatcher matcher(n, n, adj);
  matcher.run();

  // y over double-cover edges, keyed by (left, right). Gallai: matching plus
  // one incident edge for every exposed vertex.
  std::vector<std::vector<bool>> chosen(n, std::vector<bool>(n, false));
  for (VertexId a = 0; a < n; ++a) {
    std::size_t b = matcher.left_match(a);
    if (b != BipartiteMatcher::kNone) chosen[a][b] = true;
  }
  for (VertexId a = 0; a < n; ++a) {
    if (matcher.left_match(a) == BipartiteMatcher::kNone) chosen[a][g.neighbors(a).front()] = true;
    if (matcher.right_match(a) == BipartiteMatcher::kNone) chosen[g.neighbors(a).front()][a] = true;
  }

  EdgeCoverSolution sol;
  sol.x.resize(g.num_edges());
  sol.objective = 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    int y = (chosen[e.u][e.v] ? 1 : 0) + (chosen[e.v][e.u] ? 1 : 0);
    sol.x[i] = Rational(y, 2);
    sol.objective += sol.x[i];
  }
  return sol;
}

Decomposition decompose(const Pattern& h) {
  const Graph& g = h.graph();
  const std::size_t n = g.num_vertices();
  const std::size_t edges = g.num_edges();
  const EdgeCoverSolution initial = solve_fractional_edge_cover(h);

  std::vector<int> halves(edges);
  for (std::size_t i = 0; i < edges; ++i) {
    halves[i] = static_cast<int>(initial.x[i].numerator() * 2 / initial.x[i].denominator());
  }
  std::vector<bool> frozen(edges, false);
  std::vector<bool> in_odd_cycle(n, false);
  std::vector<std::vector<VertexId>> odd_cycles;

  auto support_edges_at = [&](VertexId a) {
    std::vector<std::size_t> out;
    for (VertexId b : g.neighbors(a)) {
      std::size_t e = *g.find_edge(a, b);
      if (halves[e] > 0) out.push_back(e);
    }
    return out;
  };

  while (auto cyc = find_support_cycle(g, halves, frozen)) {
    const std::size_t len = cyc->edges.size();

    auto heavy = std::find_if(cyc->edges.begin(), cyc->edges.end(),
                              [&](std::size_t e) { return halves[e] >= 2; });
    if (heavy != cyc->edges.end()) {
      // Both endpoints keep another cycle edge of weight >= 1/2.
      halves[*heavy] = 1;
      continue;
    }

    if (len % 2 == 0) {
      for (std::size_t i = 0; i < len; ++i) halves[cyc->edges[i]] = (i % 2 == 0) ? 2 : 0;
      continue;
    }

    // Odd cycle: look for a support edge leaving it.
    std::optional<std::pair<std::size_t, std::size_t>> exit;  // (position on cycle, edge)
    for (std::size_t i = 0; i < len && !exit; ++i) {
      for (std::size_t e : support_edges_at(cyc->vertices[i])) {
        if (std::find(cyc->edges.begin(), cyc->edges.end(), e) == cyc->edges.end()) {
          exit = {{i, e}};
          break;
        }
      }
    }
    if (!exit) {
      for (std::size_t e : cyc->edges) frozen[e] = true;
      for (VertexId v : cyc->vertices) in_odd_cycle[v] = true;
      odd_cycles.push_back(canonical_cycle(cyc->vertices));
      continue;
    }

    // Rotate so the exit vertex is first; edges then alternate -1/2, +1/2
    // starting and ending with the two edges at the exit vertex.
    auto [pos, exit_edge] = *exit;
    for (std::size_t j = 0; j < len; ++j) {
      std::size_t e = cyc->edges[(pos + j) % len];
      halves[e] += (j % 2 == 0) ? -1 : 1;
    }
    halves[exit_edge] = std::min(halves[exit_edge] + 1, 2);
  }

  // Remaining support is a forest. Cover each tree with stars, greedily from
  // the deepest vertices towards a leaf root.
  std::vector<std::vector<VertexId>> forest(n);
  for (std::size_t i = 0; i < edges; ++i) {
    if (halves[i] > 0 && !frozen[i]) {
      forest[g.edge(i).u].push_back(g.edge(i).v);
      forest[g.edge(i).v].push_back(g.edge(i).u);
    }
  }
  constexpr VertexId kNoParent = static_cast<VertexId>(-1);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> star_of(n, kNoParent);  // petal -> center
  std::vector<bool> is_center(n, false);

  for (VertexId start = 0; start < n; ++start) {
    if (in_odd_cycle[start] || seen[start]) continue;
    // Collect the tree and pick its smallest-id leaf as root.
    std::vector<VertexId> tree;
    std::queue<VertexId> q;
    q.push(start);
    seen[start] = true;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      tree.push_back(v);
      for (VertexId w : forest[v]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    if (tree.size() < 2) {
      throw std::logic_error("uncovered pattern vertex after cover transformation");
    }
    VertexId root = kNoParent;
    for (VertexId v : tree) {
      if (forest[v].size() == 1 && (root == kNoParent || v < root)) root = v;
    }

    std::vector<VertexId> parent(n, kNoParent);
    std::vector<std::size_t> depth(n, 0);
    std::vector<VertexId> order{root};
    std::vector<bool> visited(n, false);
    visited[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      VertexId v = order[i];
      for (VertexId w : forest[v]) {
        if (!visited[w]) {
          visited[w] = true;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          order.push_back(w);
        }
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });

    std::vector<bool> covered(n, false);
    for (VertexId v : order) {
      if (covered[v]) continue;
      VertexId center = (v == root) ? forest[root].front() : parent[v];
      star_of[v] = center;
      is_center[center] = true;
      covered[v] = covered[center] = true;
    }
  }

  Decomposition d;
  d.cycles = std::move(odd_cycles);
  std::sort(d.cycles.begin(), d.cycles.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
  });
  for (VertexId c = 0; c < n; ++c) {
    if (!is_center[c]) continue;
    StarComponent s;
    s.center = c;
    for (VertexId v = 0; v < n; ++v) {
      if (star_of[v] == c) s.petals.push_back(v);
    }
    if (s.petals.size() == 1 && s.petals[0] < s.center) std::swap(s.petals[0], s.center);
    d.stars.push_back(std::move(s));
  }
  std::sort(d.stars.begin(), d.stars.end(), [](const auto& a, const auto& b) {
    return a.petals.size() != b.petals.size() ? a.petals.size() > b.petals.size()
                                              : a.center < b.center;
  });

  d.cover.x.assign(edges, Rational(0));
  std::vector<bool> component_edge(edges, false);
  for (const auto& cyc : d.cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::size_t e = *g.find_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      d.cover.x[e] = Rational(1, 2);
      component_edge[e] = true;
    }
    d.rho_cycle.push_back(Rational(static_cast<std::int64_t>(cyc.size()), 2));
  }
  for (const auto& s : d.stars) {
    for (VertexId p : s.petals) {
      std::size_t e = *g.find_edge(s.center, p);
      d.cover.x[e] = Rational(1);
      component_edge[e] = true;
    }
    d.rho_star.push_back(Rational(static_cast<std::int64_t>(s.petals.size())));
  }
  for (std::size_t i = 0; i < edges; ++i) {
    if (!component_edge[i]) d.cross_edges.push_back(i);
  }
  d.rho = std::accumulate(d.rho_cycle.begin(), d.rho_cycle.end(), Rational(0)) +
          std::accumulate(d.rho_star.begin(), d.rho_star.end(), Rational(0));
  d.cover.objective = d.rho;
  if (d.rho != initial.objective) {
    throw std::logic_error("decomposition lost optimality: " + to_string(d.rho) + " vs " +
                           to_string(initial.objective));
  }
  d.f = normalization_factor(h, d, false);
  return d;
}

Rational normalization_factor(const Pattern& h, const Decomposition& d, bool colored) {
  std::uint64_t self = exact_profile_enumeration(h.graph(), h, d, colored);
  if (self == 0) throw std::logic_error("pattern has no profile inside itself");
  return Rational(1, static_cast<std::int64_t>(self));
}

Rational sub_pattern_rho(const Decomposition& d, const std::vector<std::size_t>& cycle_subset,
                         const std::vector<std::size_t>& star_subset) {
  Rational total(0);
  for (std::size_t i : cycle_subset) {
    if (i >= d.rho_cycle.size()) throw std::out_of_range("cycle index out of range");
    total += d.rho_cycle[i];
  }
  for (std::size_t j : star_subset) {
    if (j >= d.rho_star.size()) throw std::out_of_range("star index out of range");
    total += d.rho_star[j];
  }
  return total;
}

std::vector<VertexId> component_vertices(const Decomposition& d,
                                         const std::vector<std::size_t>& cycle_subset,
                                         const std::vector<std::size_t>& star_subset) {
  std::vector<VertexId> out;
  for (std::size_t i : cycle_subset) {
    out.insert(out.end(), d.cycles.at(i).begin(), d.cycles.at(i).end());
  }
  for (std::size_t j : star_subset) {
    out.push_back(d.stars.at(j).center);
    out.insert(out.end(), d.stars.at(j).petals.begin(), d.stars.at(j).petals.end());
  }
  return out;
}

Pattern induced_pattern(const Pattern& h, const std::vector<VertexId>& vertices) {
  const Graph& g = h.graph();
  std::vector<VertexId> relabel(g.num_vertices(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (relabel[e.u] == static_cast<VertexId>(-1) || relabel[e.v] == static_cast<VertexId>(-1)) {
      continue;
    }
    edges.push_back({relabel[e.u], relabel[e.v]});
    colors.push_back(g.edge_color(i));
  }
  return Pattern(Graph::from_edges(vertices.size(), edges,
                                   g.is_colored() ? std::optional(colors) : std::nullopt));
}

}  // namespace subcount
