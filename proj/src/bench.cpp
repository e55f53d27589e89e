#include "subcount/bench.hpp"

#include "subcount/estimator.hpp"
#include "subcount/instances.hpp"
#include "subcount/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace subcount {

namespace {

EstimationConfig sampled_config(double eps, double c, std::size_t rounds) {
  EstimationConfig cfg;
  cfg.epsilon = eps;
  cfg.c = c;
  cfg.rounds = rounds;
  cfg.allow_fallback = false;
  return cfg;
}

BenchRow measure(const std::string& instance, const Graph& g, const std::string& pattern_name,
                 const Pattern& h, EstimationConfig cfg, std::uint64_t seed, bool hint_truth) {
  const std::uint64_t exact = count_copies(g, h.graph(), cfg.colored);
  if (hint_truth) cfg.h_hint = std::max<double>(1, static_cast<double>(exact));
  cfg.seed = seed;
  EstimateReport rep = count_subgraph(g, h, cfg);

  BenchRow row;
  row.instance = instance + (rep.fallback_used ? "+fallback" : "");
  row.n = g.num_vertices();
  row.m = g.num_edges();
  row.pattern = pattern_name;
  row.rho = rep.rho;
  row.exact = exact;
  row.estimate = rep.estimate;
  row.rel_err = exact > 0 ? std::abs(rep.estimate - static_cast<double>(exact)) /
                                static_cast<double>(exact)
                          : std::abs(rep.estimate);
  row.q_total = rep.queries.total();
  row.ms = rep.time_ms;
  row.fallback = rep.fallback_used;
  return row;
}

void cliques(BenchResult& out, std::uint64_t seed) {
  const Graph k8 = make_clique(8).graph();
  const Graph k12 = make_clique(12).graph();
  const Graph planted = gen_planted(make_clique(3), 20, 200, 400, seed);
  const EstimationConfig def;
  out.rows.push_back(measure("K8", k8, "K3", make_clique(3), def, seed, false));
  out.rows.push_back(measure("K12", k12, "K3", make_clique(3), def, seed, false));
  out.rows.push_back(measure("K12", k12, "K4", make_clique(4), def, seed, false));
  out.rows.push_back(measure("planted20", planted, "K3", make_clique(3), def, seed, false));
  const EstimationConfig sampled = sampled_config(0.25, 64, 9);
  out.rows.push_back(measure("K12/sampled", k12, "K4", make_clique(4), sampled, seed, true));
  out.rows.push_back(
      measure("planted20/sampled", planted, "K3", make_clique(3), sampled, seed, true));
}

void odd_cycles(BenchResult& out, std::uint64_t seed) {
  // Each planted K5 carries 12 five-cycles; the background keeps m at 2000.
  const Pattern c5 = make_cycle(5);
  const EstimationConfig cfg = sampled_config(0.5, 1, 1);
  std::vector<double> xs, ys;
  for (std::size_t blocks : {1, 3, 13, 53}) {
    const Graph g = gen_planted(make_clique(5), blocks, 4000, 2000, seed + blocks);
    BenchRow row = measure("k5x" + std::to_string(blocks), g, "C5", c5, cfg, seed, false);
    xs.push_back(static_cast<double>(row.exact));
    ys.push_back(static_cast<double>(row.q_total));
    out.rows.push_back(std::move(row));
  }
  out.slope = fit_loglog_slope(xs, ys);
}

void stars(BenchResult& out, std::uint64_t seed) {
  std::vector<Edge> ring;
  for (VertexId v = 0; v < 20000; ++v) ring.push_back({v, (v + 1) % 20000});
  const Graph cycle = Graph::from_edges(20000, ring);
  const Graph sparse = gen_random(20000, 20000, seed);
  const Graph small = gen_random(2000, 2000, seed + 1);
  EstimationConfig cfg = sampled_config(0.5, 1, 1);
  EstimationConfig fast = cfg;
  fast.star_fast = true;
  const Pattern s2 = make_star(2), s3 = make_star(3);
  out.rows.push_back(measure("cycle20000", cycle, "S2", s2, cfg, seed, true));
  out.rows.push_back(measure("cycle20000", cycle, "S2+fast", s2, fast, seed, true));
  out.rows.push_back(measure("gnm20000", sparse, "S2", s2, cfg, seed, true));
  out.rows.push_back(measure("gnm20000", sparse, "S2+fast", s2, fast, seed, true));
  out.rows.push_back(measure("gnm2000", small, "S3", s3, cfg, seed, true));
  out.rows.push_back(measure("gnm2000", small, "S3+fast", s3, fast, seed, true));
}

void figure1(BenchResult& out, std::uint64_t seed) {
  const Pattern h = make_figure1();
  const Graph big = gen_planted(h, 5, 100, 200, seed);
  const Graph tiny = gen_planted(h, 2, 16, 30, seed);
  out.rows.push_back(measure("planted5", big, "figure1", h, EstimationConfig{}, seed, false));
  out.rows.push_back(
      measure("planted2/sampled", tiny, "figure1", h, sampled_config(0.5, 1, 1), seed, true));
}

void join(BenchResult& out, std::uint64_t seed) {
  struct Case {
    const char* name;
    Pattern pattern;
  };
  const Case cases[] = {{"K3", make_clique(3)}, {"C5", make_cycle(5)}};
  for (const auto& c : cases) {
    for (JoinWhich which : {JoinWhich::G0, JoinWhich::G1}) {
      JoinInstance inst = gen_join_lowerbound(c.pattern, 16, which, seed);
      const std::string name =
          std::string("join-") + c.name + (which == JoinWhich::G0 ? "-g0" : "-g1");
      EstimationConfig def;
      def.colored = true;
      EstimationConfig sampled = sampled_config(0.5, 1, 9);
      sampled.colored = true;
      out.rows.push_back(measure(name, inst.graph, c.name, inst.pattern, def, seed, false));
      out.rows.push_back(
          measure(name + "/sampled", inst.graph, c.name, inst.pattern, sampled, seed, false));
    }
  }
}

}  // namespace

const std::vector<std::string>& bench_suites() {
  static const std::vector<std::string> names{"cliques", "odd-cycles", "stars", "figure1", "join"};
  return names;
}

BenchResult run_bench(const std::string& suite, std::uint64_t seed) {
  BenchResult out;
  out.suite = suite;
  if (suite == "cliques") {
    cliques(out, seed);
  } else if (suite == "odd-cycles") {
    odd_cycles(out, seed);
  } else if (suite == "stars") {
    stars(out, seed);
  } else if (suite == "figure1") {
    figure1(out, seed);
  } else if (suite == "join") {
    join(out, seed);
  } else {
    throw std::invalid_argument("unknown bench suite `" + suite + "`");
  }
  return out;
}

void write_bench_csv(std::ostream& out, const BenchResult& result) {
  out << "instance,n,m,pattern,rho,exact,estimate,rel_err,q_total,ms\n";
  char buf[64];
  for (const auto& r : result.rows) {
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.pattern << ','
        << to_string(r.rho) << ',' << r.exact << ',';
    std::snprintf(buf, sizeof buf, "%.10g", r.estimate);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.rel_err);
    out << buf << ',' << r.q_total << ',' << r.ms << '\n';
  }
  if (result.slope) {
    std::snprintf(buf, sizeof buf, "%.4f", *result.slope);
    out << "# slope=" << buf << '\n';
  }
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace subcount
