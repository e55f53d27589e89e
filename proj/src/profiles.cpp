#include "subcount/profiles.hpp"

#include <algorithm>
#include <stdexcept>

namespace subcount {

namespace {

constexpr VertexId kUnassigned = static_cast<VertexId>(-1);

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool all_distinct(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

Color pattern_color(const Graph& h, VertexId a, VertexId b) {
  return h.edge_color(*h.find_edge(a, b));
}

}  // namespace

PairAnswer DirectAccess::pair(VertexId u, VertexId v) {
  auto idx = graph_->find_edge(u, v);
  return idx ? PairAnswer{true, graph_->edge_color(*idx)} : PairAnswer{false, 0};
}

std::size_t SessionAccess::degree(VertexId v) {
  for (const auto& [x, d] : degrees_) {
    if (x == v) return d;
  }
  std::size_t d = session_->degree(v);
  degrees_.push_back({v, d});
  return d;
}

PairAnswer SessionAccess::pair(VertexId u, VertexId v) {
  const std::uint64_t k = key(u, v);
  for (const auto& [x, a] : pairs_) {
    if (x == k) return a;
  }
  PairAnswer a = session_->pair(u, v);
  pairs_.push_back({k, a});
  return a;
}

void SessionAccess::learn_degree(VertexId v, std::size_t d) {
  for (const auto& [x, known] : degrees_) {
    if (x == v) return;
  }
  degrees_.push_back({v, d});
}

void SessionAccess::learn_edge(VertexId u, VertexId v, Color c) {
  const std::uint64_t k = key(u, v);
  for (const auto& [x, a] : pairs_) {
    if (x == k) return;
  }
  pairs_.push_back({k, PairAnswer{true, c}});
}

bool forms_cycle(GraphAccess& g, const CycleProfile& p) {
  const auto& seq = p.sequence;
  if (seq.size() < 3 || seq.size() % 2 == 0) return false;
  if (!all_distinct(seq)) return false;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!g.precedes(p.u1(), seq[i])) return false;
  }
  if (!g.precedes(p.v1(), p.w())) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.pair(seq[i], seq[(i + 1) % seq.size()]).present) return false;
  }
  return true;
}

bool forms_star(GraphAccess& g, const StarProfile& p) {
  if (p.petals.empty()) return false;
  if (!all_distinct(p.petals)) return false;
  if (std::find(p.petals.begin(), p.petals.end(), p.center) != p.petals.end()) return false;
  for (VertexId w : p.petals) {
    if (!g.pair(p.center, w).present) return false;
  }
  if (p.petals.size() == 1 && !g.precedes(p.center, p.petals[0])) return false;
  return true;
}

ProfileChecker::ProfileChecker(const Pattern& h, const Decomposition& d, bool colored)
    : pattern_(&h), decomposition_(&d), colored_(colored) {
  const Graph& hg = h.graph();
  std::vector<std::size_t> pos(hg.num_vertices(), 0);

  for (std::size_t i = 0; i < d.cycles.size(); ++i) {
    for (VertexId a : d.cycles[i]) pos[a] = steps_.size();
    steps_.push_back({Step::Kind::Cycle, i, 0, {}});
  }
  for (std::size_t j = 0; j < d.stars.size(); ++j) {
    const auto& s = d.stars[j];
    if (s.petals.size() == 1) {
      pos[s.center] = pos[s.petals[0]] = steps_.size();
      steps_.push_back({Step::Kind::SingleEdge, j, 0, {}});
      continue;
    }
    pos[s.center] = steps_.size();
    steps_.push_back({Step::Kind::Center, j, s.center, {}});
    for (VertexId p : s.petals) {
      pos[p] = steps_.size();
      steps_.push_back({Step::Kind::Petal, j, p, {}});
    }
  }

  for (std::size_t e : d.cross_edges) {
    const Edge& edge = hg.edge(e);
    std::size_t idx = cross_.size();
    cross_.push_back({edge.u, edge.v});
    cross_color_.push_back(hg.edge_color(e));
    steps_[std::max(pos[edge.u], pos[edge.v])].cross_checks.push_back(idx);
  }
}

bool ProfileChecker::component_colors_match(GraphAccess& g, const SubgraphProfile& r) const {
  const Graph& hg = pattern_->graph();
  for (std::size_t j = 0; j < r.stars.size(); ++j) {
    const auto& hs = decomposition_->stars[j];
    std::vector<Color> want, have;
    for (VertexId p : hs.petals) want.push_back(pattern_color(hg, hs.center, p));
    for (VertexId w : r.stars[j].petals) have.push_back(g.pair(r.stars[j].center, w).color);
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) return false;
  }
  return true;
}

std::uint64_t ProfileChecker::multiplicity(GraphAccess& g, const SubgraphProfile& r) const {
  const Decomposition& d = *decomposition_;
  if (r.cycles.size() != d.cycles.size() || r.stars.size() != d.stars.size()) {
    throw std::invalid_argument("profile arity does not match the decomposition");
  }
  std::vector<VertexId> image;
  for (std::size_t i = 0; i < r.cycles.size(); ++i) {
    if (r.cycles[i].sequence.size() != d.cycles[i].size()) {
      throw std::invalid_argument("cycle profile length does not match the pattern");
    }
    if (!forms_cycle(g, r.cycles[i])) return 0;
    image.insert(image.end(), r.cycles[i].sequence.begin(), r.cycles[i].sequence.end());
  }
  for (std::size_t j = 0; j < r.stars.size(); ++j) {
    if (r.stars[j].petals.size() != d.stars[j].petals.size()) {
      throw std::invalid_argument("star profile petal count does not match the pattern");
    }
    if (!forms_star(g, r.stars[j])) return 0;
    image.push_back(r.stars[j].center);
    image.insert(image.end(), r.stars[j].petals.begin(), r.stars[j].petals.end());
  }
  if (!all_distinct(image)) return 0;
  if (!colored_ && cross_.empty()) return 1;
  if (colored_ && !component_colors_match(g, r)) return 0;

  std::vector<VertexId> phi(pattern_->num_vertices(), kUnassigned);
  std::size_t total_petals = 0;
  for (const auto& s : r.stars) total_petals += s.petals.size();
  std::vector<bool> used(total_petals, false);
  std::vector<std::vector<std::uint64_t>> found;
  search(g, r, 0, phi, used, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found.size();
}

bool ProfileChecker::search(GraphAccess& g, const SubgraphProfile& r, std::size_t step,
                            std::vector<VertexId>& phi, std::vector<bool>& used_petal,
                            std::vector<std::vector<std::uint64_t>>& found) const {
  const Graph& hg = pattern_->graph();
  const Decomposition& d = *decomposition_;

  if (step == steps_.size()) {
    std::vector<std::uint64_t> signature;
    signature.reserve(cross_.size());
    for (const auto& [a, b] : cross_) signature.push_back(edge_key(phi[a], phi[b]));
    std::sort(signature.begin(), signature.end());
    found.push_back(std::move(signature));
    return cross_.empty();  // nothing left to distinguish copies by
  }

  const Step& st = steps_[step];
  auto cross_ok = [&] {
    for (std::size_t idx : st.cross_checks) {
      auto [a, b] = cross_[idx];
      PairAnswer ans = g.pair(phi[a], phi[b]);
      if (!ans.present || (colored_ && ans.color != cross_color_[idx])) return false;
    }
    return true;
  };
  auto color_ok = [&](VertexId a, VertexId b) {
    return !colored_ || g.pair(phi[a], phi[b]).color == pattern_color(hg, a, b);
  };

  switch (st.kind) {
    case Step::Kind::Cycle: {
      const auto& hc = d.cycles[st.component];
      const auto& gc = r.cycles[st.component].sequence;
      const std::size_t len = hc.size();
      for (std::size_t rot = 0; rot < len; ++rot) {
        for (int dir : {1, -1}) {
          for (std::size_t j = 0; j < len; ++j) {
            std::size_t at = dir > 0 ? (rot + j) % len : (rot + len - j) % len;
            phi[hc[j]] = gc[at];
          }
          bool ok = true;
          for (std::size_t j = 0; j < len && ok; ++j) ok = color_ok(hc[j], hc[(j + 1) % len]);
          if (ok && cross_ok() && search(g, r, step + 1, phi, used_petal, found)) return true;
        }
      }
      for (VertexId a : hc) phi[a] = kUnassigned;
      return false;
    }
    case Step::Kind::SingleEdge: {
      const auto& hs = d.stars[st.component];
      const auto& gs = r.stars[st.component];
      const VertexId ends[2] = {gs.center, gs.petals[0]};
      for (int flip = 0; flip < 2; ++flip) {
        phi[hs.center] = ends[flip];
        phi[hs.petals[0]] = ends[1 - flip];
        if (color_ok(hs.center, hs.petals[0]) && cross_ok() &&
            search(g, r, step + 1, phi, used_petal, found)) {
          return true;
        }
      }
      phi[hs.center] = phi[hs.petals[0]] = kUnassigned;
      return false;
    }
    case Step::Kind::Center: {
      phi[st.vertex] = r.stars[st.component].center;
      bool stop = cross_ok() && search(g, r, step + 1, phi, used_petal, found);
      if (!stop) phi[st.vertex] = kUnassigned;
      return stop;
    }
    case Step::Kind::Petal: {
      const auto& hs = d.stars[st.component];
      const auto& gs = r.stars[st.component];
      std::size_t offset = 0;
      for (std::size_t j = 0; j < st.component; ++j) offset += r.stars[j].petals.size();
      for (std::size_t q = 0; q < gs.petals.size(); ++q) {
        if (used_petal[offset + q]) continue;
        used_petal[offset + q] = true;
        phi[st.vertex] = gs.petals[q];
        bool stop = color_ok(hs.center, st.vertex) && cross_ok() &&
                    search(g, r, step + 1, phi, used_petal, found);
        used_petal[offset + q] = false;
        if (stop) return true;
      }
      phi[st.vertex] = kUnassigned;
      return false;
    }
  }
  return false;
}

std::uint64_t copy_multiplicity(GraphAccess& g, const Pattern& h, const Decomposition& d,
                                const SubgraphProfile& r, bool colored) {
  return ProfileChecker(h, d, colored).multiplicity(g, r);
}

}  // namespace subcount
