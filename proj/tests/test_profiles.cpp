#include "subcount/instances.hpp"
#include "subcount/oracle.hpp"
#include "subcount/profiles.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace subcount;
using testing_support::parse;

TEST_CASE("forms_cycle on the triangle") {
  Graph k3 = make_clique(3).graph();
  DirectAccess g(k3);
  CHECK(forms_cycle(g, {{0, 1, 2}}));
  CHECK_FALSE(forms_cycle(g, {{1, 2, 0}}));  // u1 not smallest
  CHECK_FALSE(forms_cycle(g, {{0, 2, 1}}));  // v1 after w
  CHECK_FALSE(forms_cycle(g, {{0, 1, 1}}));  // repeated vertex
}

TEST_CASE("forms_star rules") {
  Graph k3 = make_clique(3).graph();
  DirectAccess g(k3);
  CHECK(forms_star(g, {0, {1, 2}}));
  CHECK_FALSE(forms_star(g, {0, {0, 1}}));
  CHECK_FALSE(forms_star(g, {0, {1, 1}}));

  Graph edge = parse("2 1\n0 1\n");
  DirectAccess e(edge);
  CHECK(forms_star(e, {0, {1}}));
  CHECK_FALSE(forms_star(e, {1, {0}}));

  Graph path = parse("3 2\n0 1\n1 2\n");
  DirectAccess p(path);
  CHECK_FALSE(forms_star(p, {0, {2}}));  // not adjacent
}

TEST_CASE("every odd cycle has exactly one profile") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = testing_support::random_graph(10, 0.45, rng);
    DirectAccess access(g);
    const auto n = static_cast<VertexId>(g.num_vertices());
    for (std::size_t len : {3, 5}) {
      // Count vertex sequences passing forms_cycle and compare with the number
      // of cycles of that length.
      std::uint64_t valid = 0;
      std::vector<VertexId> seq;
      auto dfs = [&](auto&& self) -> void {
        if (seq.size() == len) {
          valid += forms_cycle(access, {seq});
          return;
        }
        for (VertexId v = 0; v < n; ++v) {
          if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
          if (!seq.empty() && !g.has_edge(seq.back(), v)) continue;
          seq.push_back(v);
          self(self);
          seq.pop_back();
        }
      };
      dfs(dfs);
      CHECK(valid == count_copies(g, make_cycle(len).graph()));
    }
  }
}

TEST_CASE("copy multiplicity on a single triangle") {
  Pattern h = make_clique(3);
  Decomposition d = decompose(h);
  Graph k3 = make_clique(3).graph();
  DirectAccess g(k3);
  SubgraphProfile r;
  r.cycles = {{{0, 1, 2}}};
  CHECK(copy_multiplicity(g, h, d, r) == 1);
  CHECK(forms_copy(g, h, d, r));
  r.cycles = {{{0, 2, 1}}};
  CHECK_FALSE(forms_copy(g, h, d, r));
}

TEST_CASE("copy multiplicity counts each aligned copy once") {
  // Triangle with a pendant edge decomposes into two single-edge stars; in
  // K4 the profile {0-1, 2-3} is completed by two distinct copies (the apex
  // is 2 or 3).
  Pattern h(parse("4 4\n0 1\n1 2\n0 2\n2 3\n"));
  Decomposition d = decompose(h);
  REQUIRE(d.num_stars() == 2);
  Graph k4 = make_clique(4).graph();
  DirectAccess g(k4);
  SubgraphProfile r;
  r.stars = {{0, {1}}, {2, {3}}};
  CHECK(copy_multiplicity(g, h, d, r) == 2);

  // Inside H itself only one completion exists; the pendant edge is oriented
  // from its degree-1 end.
  Graph tp = h.graph();
  DirectAccess gh(tp);
  SubgraphProfile self;
  self.stars = {{0, {1}}, {3, {2}}};
  CHECK(copy_multiplicity(gh, h, d, self) == 1);
  self.stars = {{0, {1}}, {2, {3}}};
  CHECK(copy_multiplicity(gh, h, d, self) == 0);
  self.stars = {{0, {1}}, {3, {2}}};
  CHECK(copy_multiplicity(gh, h, d, self) == 1);
}

TEST_CASE("forms_copy on a planted figure-1 pattern") {
  Pattern h = make_figure1();
  Decomposition d = decompose(h);
  Graph g = h.graph();
  DirectAccess access(g);
  // Profiles are oriented by the degree order of G: the triangle starts at
  // vertex 2 (degree 2) and the pendant edge at vertex 4 (degree 1).
  SubgraphProfile r;
  r.cycles = {{{2, 0, 1}}};
  r.stars = {{5, {6, 7}}, {4, {3}}};
  CHECK(forms_copy(access, h, d, r));

  // Remove one cross edge from G: the same profile no longer forms a copy.
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!(e == Edge{1, 5})) edges.push_back(e);
  }
  Graph cut = Graph::from_edges(8, edges);
  DirectAccess cut_access(cut);
  CHECK_FALSE(forms_copy(cut_access, h, d, r));
}

TEST_CASE("colored multiplicity requires matching colors") {
  Graph hg = parse("3 3 colored\n0 1 1\n1 2 0\n0 2 0\n");
  Pattern h(hg);
  Decomposition d = decompose(h);
  SubgraphProfile r;
  r.cycles = {{{0, 1, 2}}};

  Graph same = hg;
  DirectAccess a(same);
  CHECK(copy_multiplicity(a, h, d, r, true) == 1);

  Graph mono = parse("3 3 colored\n0 1 0\n1 2 0\n0 2 0\n");
  DirectAccess b(mono);
  CHECK(copy_multiplicity(b, h, d, r, true) == 0);
  CHECK(copy_multiplicity(b, h, d, r, false) == 1);

  // The color-1 edge may sit anywhere on the triangle.
  Graph rotated = parse("3 3 colored\n0 1 0\n1 2 1\n0 2 0\n");
  DirectAccess c(rotated);
  CHECK(copy_multiplicity(c, h, d, r, true) == 1);
}

TEST_CASE("session access charges each answer once per draw") {
  Graph k4 = make_clique(4).graph();
  QuerySession s(k4, 1);
  SessionAccess a(s);
  a.degree(0);
  a.degree(0);
  a.pair(0, 1);
  a.pair(1, 0);
  CHECK(s.counts().degree == 1);
  CHECK(s.counts().pair == 1);
  a.learn_edge(2, 3, 0);
  CHECK(a.pair(3, 2).present);
  CHECK(s.counts().pair == 1);
  a.reset();
  a.degree(0);
  CHECK(s.counts().degree == 2);
}
