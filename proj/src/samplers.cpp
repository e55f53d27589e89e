#include "subcount/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subcount {

std::uint64_t cycle_fanout(std::uint64_t d_star, std::uint64_t m) {
  if (m == 0) return 1;
  using Wide = unsigned __int128;
  const Wide d2 = static_cast<Wide>(d_star) * d_star;
  auto enough = [&](std::uint64_t t) { return static_cast<Wide>(t) * t * m >= d2; };
  auto t = static_cast<std::uint64_t>(
      std::ceil(static_cast<double>(d_star) / std::sqrt(static_cast<double>(m))));
  t = std::max<std::uint64_t>(t, 1);
  while (t > 1 && enough(t - 1)) --t;
  while (!enough(t)) ++t;
  return t;
}

double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  double out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / i;
  return std::round(out);
}

CycleBlock sample_odd_cycle(SessionAccess& access, std::size_t k) {
  QuerySession& s = access.session();
  const double two_m = 2.0 * static_cast<double>(s.num_edges());
  CycleBlock block;
  for (std::size_t i = 0; i < k; ++i) {
    EdgeSampleAnswer e = s.sample_edge();
    access.learn_edge(e.u, e.v, e.color);
    bool forward;
    if (i == 0) {
      forward = access.precedes(e.u, e.v);
    } else {
      forward = s.uniform(2) == 0;
    }
    block.u.push_back(forward ? e.u : e.v);
    block.v.push_back(forward ? e.v : e.u);
  }
  block.d_star = access.degree(block.u.front());
  block.t = cycle_fanout(block.d_star, s.num_edges());
  block.root_value = std::pow(two_m, static_cast<double>(k)) / 2;
  return block;
}

VertexId sample_cycle_closer(SessionAccess& access, const CycleBlock& block) {
  QuerySession& s = access.session();
  const VertexId u1 = block.u.front();
  NeighborAnswer nb = s.neighbor(u1, s.uniform(block.d_star));
  access.learn_edge(u1, nb.vertex, nb.color);
  return nb.vertex;
}

StarBlock sample_star(SessionAccess& access, std::size_t petals) {
  QuerySession& s = access.session();
  StarBlock block;
  EdgeSampleAnswer e = s.sample_edge();
  access.learn_edge(e.u, e.v, e.color);
  block.center = s.uniform(2) == 0 ? e.u : e.v;
  block.degree = access.degree(block.center);
  block.root_value = 2.0 * static_cast<double>(s.num_edges()) / static_cast<double>(block.degree);
  if (block.degree < petals) {
    block.dead = true;
    return block;
  }
  // Floyd's algorithm: a uniform subset of `petals` neighbor indices.
  std::vector<std::uint64_t> picked;
  for (std::uint64_t j = block.degree - petals; j < block.degree; ++j) {
    std::uint64_t r = s.uniform(j + 1);
    bool seen = std::find(picked.begin(), picked.end(), r) != picked.end();
    picked.push_back(seen ? j : r);
  }
  for (std::uint64_t idx : picked) {
    NeighborAnswer nb = s.neighbor(block.center, idx);
    access.learn_edge(block.center, nb.vertex, nb.color);
    block.petals.push_back(nb.vertex);
  }
  std::sort(block.petals.begin(), block.petals.end());
  block.leaf_value = binomial(block.degree, petals);
  return block;
}

double DrawTrace::total() const {
  double sum = 0;
  for (const auto& leaf : leaves) {
    double prod = leaf.weight * static_cast<double>(leaf.multiplicity);
    for (double v : leaf.node_values) prod *= v;
    sum += prod;
  }
  return sum;
}

std::string format_trace(double y, const DrawTrace& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "Y=" << y << " leaves=" << trace.leaves.size();
  for (const auto& leaf : trace.leaves) {
    out << " |";
    for (const auto& c : leaf.profile.cycles) {
      out << " cycle=";
      for (std::size_t i = 0; i < c.sequence.size(); ++i) out << (i ? "," : "") << c.sequence[i];
    }
    for (const auto& s : leaf.profile.stars) {
      out << " star=" << s.center << ':';
      for (std::size_t i = 0; i < s.petals.size(); ++i) out << (i ? "," : "") << s.petals[i];
    }
    out << " values=";
    for (std::size_t i = 0; i < leaf.node_values.size(); ++i) {
      out << (i ? "," : "") << leaf.node_values[i];
    }
    out << " weight=" << leaf.weight << " mult=" << leaf.multiplicity;
  }
  return out.str();
}

SubgraphSampler::SubgraphSampler(const Pattern& h, const Decomposition& d, bool colored)
    : decomposition_(&d), checker_(h, d, colored) {}

double SubgraphSampler::draw(QuerySession& session, DrawTrace* trace) {
  if (session.num_edges() == 0) throw QueryError("edge sample on a graph without edges");
  SessionAccess access(session);
  SubgraphProfile profile;
  profile.cycles.resize(decomposition_->cycles.size());
  profile.stars.resize(decomposition_->stars.size());
  if (trace) trace->clear();
  std::vector<double> path;
  return descend(access, 0, profile, trace, path, 1.0);
}

double SubgraphSampler::descend(SessionAccess& access, std::size_t slot, SubgraphProfile& profile,
                                DrawTrace* trace, std::vector<double>& path, double weight) {
  const Decomposition& d = *decomposition_;
  const std::size_t o = d.cycles.size();

  if (slot == o + d.stars.size()) {
    std::uint64_t mult = checker_.multiplicity(access, profile);
    if (trace) trace->leaves.push_back({profile, path, weight, mult});
    return static_cast<double>(mult);
  }

  if (slot < o) {
    CycleBlock block = sample_odd_cycle(access, d.cycle_half_length(slot));
    if (trace) trace->fanouts.push_back(block.t);
    auto& seq = profile.cycles[slot].sequence;
    seq.clear();
    for (std::size_t i = 0; i < block.u.size(); ++i) {
      seq.push_back(block.u[i]);
      seq.push_back(block.v[i]);
    }
    seq.push_back(0);
    path.push_back(block.root_value);
    const double leaf_value = static_cast<double>(block.d_star);
    double sum = 0;
    for (std::uint64_t c = 0; c < block.t; ++c) {
      profile.cycles[slot].sequence.back() = sample_cycle_closer(access, block);
      path.push_back(leaf_value);
      sum += leaf_value *
             descend(access, slot + 1, profile, trace, path, weight / static_cast<double>(block.t));
      path.pop_back();
    }
    path.pop_back();
    return block.root_value * sum / static_cast<double>(block.t);
  }

  const std::size_t j = slot - o;
  StarBlock block = sample_star(access, d.stars[j].petals.size());
  if (block.dead) return 0;
  profile.stars[j] = {block.center, block.petals};
  path.push_back(block.root_value);
  path.push_back(block.leaf_value);
  double y = block.root_value * block.leaf_value *
             descend(access, slot + 1, profile, trace, path, weight);
  path.pop_back();
  path.pop_back();
  return y;
}

}  // namespace subcount
