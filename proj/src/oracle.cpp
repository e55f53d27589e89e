#include "subcount/oracle.hpp"

#include "subcount/profiles.hpp"

#include <algorithm>
#include <cmath>

namespace subcount {

namespace {

// Order pattern vertices so that each one (after the first of its connected
// component) has an already-placed neighbor; higher degree first.
std::vector<VertexId> matching_order(const Graph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<VertexId> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  while (order.size() < n) {
    VertexId best = 0;
    bool have = false;
    for (VertexId v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!have || links[v] > links[best] ||
          (links[v] == links[best] && h.degree(v) > h.degree(best))) {
        best = v;
        have = true;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (VertexId w : h.neighbors(best)) ++links[w];
  }
  return order;
}

class EmbeddingCounter {
 public:
  EmbeddingCounter(const Graph& g, const Graph& h, bool colored, std::uint64_t budget)
      : g_(g), h_(h), colored_(colored), budget_(budget), order_(matching_order(h)),
        phi_(h.num_vertices(), 0), used_(g.num_vertices(), false) {
    pos_.assign(h.num_vertices(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
  }

  std::uint64_t run() {
    if (h_.num_vertices() > g_.num_vertices()) return 0;
    extend(0);
    return count_;
  }

 private:
  void extend(std::size_t depth) {
    if (++nodes_ > budget_) throw OracleBudgetExceeded("oracle search budget exceeded");
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const VertexId a = order_[depth];
    // Anchor on an already-placed neighbor when one exists.
    std::optional<VertexId> anchor;
    for (VertexId b : h_.neighbors(a)) {
      if (pos_[b] < depth) {
        anchor = b;
        break;
      }
    }
    auto try_candidate = [&](VertexId x) {
      if (used_[x] || g_.degree(x) < h_.degree(a)) return;
      for (std::size_t i = 0; i < h_.degree(a); ++i) {
        VertexId b = h_.neighbors(a)[i];
        if (pos_[b] >= depth) continue;
        auto e = g_.find_edge(x, phi_[b]);
        if (!e) return;
        if (colored_ && g_.edge_color(*e) != h_.neighbor_color(a, i)) return;
      }
      phi_[a] = x;
      used_[x] = true;
      extend(depth + 1);
      used_[x] = false;
    };
    if (anchor) {
      for (VertexId x : g_.neighbors(phi_[*anchor])) try_candidate(x);
    } else {
      for (VertexId x = 0; x < g_.num_vertices(); ++x) try_candidate(x);
    }
  }

  const Graph& g_;
  const Graph& h_;
  bool colored_;
  std::uint64_t budget_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> pos_;
  std::vector<VertexId> phi_;
  std::vector<bool> used_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

// All canonical cycle profiles of the given length: u1 minimal, v1 before w.
void enumerate_cycles(const Graph& g, std::size_t length, std::uint64_t budget,
                      std::vector<CycleProfile>& out) {
  VertexOrder order(g);
  std::vector<VertexId> path;
  std::vector<bool> on_path(g.num_vertices(), false);
  std::uint64_t nodes = 0;

  auto dfs = [&](auto&& self) -> void {
    if (++nodes > budget) throw OracleBudgetExceeded("profile enumeration budget exceeded");
    const VertexId u1 = path.front();
    if (path.size() == length) {
      if (g.has_edge(path.back(), u1) && order.precedes(path[1], path.back())) {
        out.push_back({path});
      }
      return;
    }
    for (VertexId x : g.neighbors(path.back())) {
      if (on_path[x] || !order.precedes(u1, x)) continue;
      on_path[x] = true;
      path.push_back(x);
      self(self);
      path.pop_back();
      on_path[x] = false;
    }
  };

  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    path = {u};
    on_path[u] = true;
    dfs(dfs);
    on_path[u] = false;
  }
}

void enumerate_stars(const Graph& g, std::size_t petals, std::uint64_t budget,
                     std::vector<StarProfile>& out) {
  VertexOrder order(g);
  std::uint64_t nodes = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() < petals) continue;
    if (petals == 1) {
      for (VertexId w : nb) {
        if (order.precedes(v, w)) out.push_back({v, {w}});
      }
      continue;
    }
    std::vector<std::size_t> idx(petals);
    for (std::size_t i = 0; i < petals; ++i) idx[i] = i;
    while (true) {
      if (++nodes > budget) throw OracleBudgetExceeded("profile enumeration budget exceeded");
      StarProfile s{v, {}};
      for (std::size_t i : idx) s.petals.push_back(nb[i]);
      out.push_back(std::move(s));
      // Next combination in lexicographic order.
      std::size_t i = petals;
      while (i > 0 && idx[i - 1] == nb.size() - petals + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < petals; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

std::uint64_t count_embeddings(const Graph& g, const Graph& h, bool colored,
                               std::uint64_t budget) {
  return EmbeddingCounter(g, h, colored, budget).run();
}

std::uint64_t count_automorphisms(const Graph& h, bool colored) {
  return count_embeddings(h, h, colored);
}

std::uint64_t count_copies(const Graph& g, const Graph& h, bool colored, std::uint64_t budget) {
  return count_embeddings(g, h, colored, budget) / count_automorphisms(h, colored);
}

ExactCount exact_count(const Graph& g, const Pattern& h, std::uint64_t budget) {
  ExactCount out;
  out.subgraph_count = count_copies(g, h.graph(), false, budget);
  Decomposition d = decompose(h);
  out.profile_count = out.subgraph_count * static_cast<std::uint64_t>(d.f.denominator());
  if (g.is_colored() && h.is_colored()) {
    out.colorful_count = count_copies(g, h.graph(), true, budget);
  }
  return out;
}

std::uint64_t exact_profile_enumeration(const Graph& g, const Pattern& h, const Decomposition& d,
                                        bool colored, std::uint64_t budget) {
  // Candidate lists per component slot; slots sharing a shape share a list.
  std::vector<std::vector<CycleProfile>> cycle_options(d.cycles.size());
  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    if (i > 0 && d.cycles[i].size() == d.cycles[i - 1].size()) {
      cycle_options[i] = cycle_options[i - 1];
    } else {
      enumerate_cycles(g, d.cycles[i].size(), budget, cycle_options[i]);
    }
  }
  std::vector<std::vector<StarProfile>> star_options(d.stars.size());
  for (std::size_t j = 0; j < d.stars.size(); ++j) {
    if (j > 0 && d.stars[j].petals.size() == d.stars[j - 1].petals.size()) {
      star_options[j] = star_options[j - 1];
    } else {
      enumerate_stars(g, d.stars[j].petals.size(), budget, star_options[j]);
    }
  }

  ProfileChecker checker(h, d, colored);
  DirectAccess access(g);
  SubgraphProfile r;
  r.cycles.resize(d.cycles.size());
  r.stars.resize(d.stars.size());
  std::vector<bool> used(g.num_vertices(), false);
  std::uint64_t total = 0;
  std::uint64_t nodes = 0;

  auto take = [&](const std::vector<VertexId>& vs, bool value) {
    for (VertexId v : vs) used[v] = value;
  };
  auto free_of = [&](const std::vector<VertexId>& vs) {
    return std::none_of(vs.begin(), vs.end(), [&](VertexId v) { return used[v]; });
  };

  auto dfs = [&](auto&& self, std::size_t slot) -> void {
    if (++nodes > budget) throw OracleBudgetExceeded("profile enumeration budget exceeded");
    if (slot == d.cycles.size() + d.stars.size()) {
      total += checker.multiplicity(access, r);
      return;
    }
    if (slot < d.cycles.size()) {
      for (const auto& c : cycle_options[slot]) {
        if (!free_of(c.sequence)) continue;
        r.cycles[slot] = c;
        take(c.sequence, true);
        self(self, slot + 1);
        take(c.sequence, false);
      }
      return;
    }
    const std::size_t j = slot - d.cycles.size();
    for (const auto& s : star_options[j]) {
      std::vector<VertexId> vs = s.petals;
      vs.push_back(s.center);
      if (!free_of(vs)) continue;
      r.stars[j] = s;
      take(vs, true);
      self(self, slot + 1);
      take(vs, false);
    }
  };
  dfs(dfs, 0);
  return total;
}

AgmReport agm_check(const Graph& g, const Pattern& h, const Decomposition& d) {
  AgmReport report;
  const double m = static_cast<double>(g.num_edges());
  report.count = count_copies(g, h.graph());
  report.bound = std::pow(m, to_double(d.rho));
  report.holds = static_cast<double>(report.count) <= report.bound * (1 + 1e-12);

  const std::size_t comps = d.cycles.size() + d.stars.size();
  for (std::uint64_t mask = 1; mask < (1ULL << comps); ++mask) {
    std::vector<std::size_t> cyc, st;
    for (std::size_t i = 0; i < comps; ++i) {
      if (!(mask >> i & 1)) continue;
      if (i < d.cycles.size()) {
        cyc.push_back(i);
      } else {
        st.push_back(i - d.cycles.size());
      }
    }
    Pattern sub = induced_pattern(h, component_vertices(d, cyc, st));
    std::uint64_t c = count_copies(g, sub.graph());
    double bound = std::pow(m, to_double(sub_pattern_rho(d, cyc, st)));
    ++report.sub_patterns_checked;
    if (static_cast<double>(c) > bound * (1 + 1e-12)) report.holds = false;
  }
  return report;
}

}  // namespace subcount
