#include "subcount/cli.hpp"

#include "subcount/bench.hpp"
#include "subcount/estimator.hpp"
#include "subcount/instances.hpp"
#include "subcount/oracle.hpp"
#include "subcount/pattern.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace subcount {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Pattern load_pattern(const std::string& path) { return Pattern(load_graph_file(path)); }

std::pair<std::size_t, std::size_t> parse_hit(const std::string& text) {
  std::istringstream in(text);
  std::size_t i = 0, j = 0;
  char comma = 0;
  if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) {
    throw UsageError("--hit expects `i,j`, got `" + text + "`");
  }
  return {i, j};
}

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

std::string decomposition_line(const Decomposition& d) {
  std::string s = "rho=" + to_string(d.rho) + " f=" + to_string(d.f);
  for (const auto& c : d.cycles) s += " cycle=" + join_ids(c);
  for (const auto& st : d.stars) s += " star=" + std::to_string(st.center) + ":" + join_ids(st.petals);
  return s;
}

std::string exact_line(const Graph& g, const Pattern& h) {
  ExactCount ec = exact_count(g, h);
  std::string s = "count=" + std::to_string(ec.subgraph_count) +
                  " profiles=" + std::to_string(ec.profile_count);
  if (ec.colorful_count) s += " colorful=" + std::to_string(*ec.colorful_count);
  return s;
}

// Writes a generated graph either to `path` (printing a summary line) or to
// `out` followed by a comment carrying the oracle count.
void emit_generated(const Graph& g, std::optional<std::uint64_t> truth, const std::string& path,
                    std::ostream& out) {
  if (path.empty()) {
    write_graph(out, g);
    if (truth) out << "# truth=" << *truth << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  write_graph(file, g);
  out << "n=" << g.num_vertices() << " m=" << g.num_edges();
  if (truth) out << " truth=" << *truth;
  out << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Estimate subgraph counts in large graphs from degree, neighbor, pair and "
               "edge-sample queries."};
  app.name("subcount");
  app.require_subcommand(1);

  // count
  std::string graph_path, pattern_path;
  EstimationConfig cfg;
  double hint = 0;
  std::size_t rounds = 0;
  bool want_exact = false, no_fallback = false, verbose = false;
  auto* count = app.add_subcommand("count", "Estimate the number of copies of a pattern");
  count->add_option("-g,--graph", graph_path, "Graph file")->required();
  count->add_option("-p,--pattern", pattern_path, "Pattern file")->required();
  count->add_option("-e,--eps", cfg.epsilon, "Relative precision in (0,1)")->capture_default_str();
  count->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  auto* hint_opt = count->add_option("--hint", hint, "Known lower bound on the count");
  count->add_flag("--colored", cfg.colored, "Count only color-matching copies");
  count->add_flag("--star-fast", cfg.star_fast, "Use the star-specific sample size");
  count->add_option("--budget", cfg.budget_factor, "Per-round query budget multiplier")
      ->capture_default_str();
  count->add_option("--c", cfg.c, "Averaging constant")->capture_default_str();
  auto* rounds_opt = count->add_option("--rounds", rounds, "Amplification rounds (odd)");
  count->add_flag("--no-fallback", no_fallback, "Never switch to exact enumeration");
  count->add_flag("--exact", want_exact, "Print the exact count instead of estimating");
  count->add_flag("-v,--verbose", verbose, "Report the guess search on stderr");

  // exact
  auto* exact = app.add_subcommand("exact", "Count copies exactly by enumeration");
  exact->add_option("-g,--graph", graph_path, "Graph file")->required();
  exact->add_option("-p,--pattern", pattern_path, "Pattern file")->required();

  // decompose
  auto* decomp = app.add_subcommand("decompose", "Print the cycle/star decomposition");
  decomp->add_option("-p,--pattern", pattern_path, "Pattern file")->required();

  // gen
  std::string out_path, pattern_out, which = "g1", hit_text;
  std::size_t K = 10, k = 2, n = 0, m = 0, copies = 0;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate benchmark and hard instances");
  gen->require_subcommand(1);
  auto* disj = gen->add_subcommand("disj", "Layered set-disjointness instance");
  disj->add_option("--K", K, "Layer size")->capture_default_str();
  disj->add_option("--k", k, "Target cycle C_{2k+1}")->capture_default_str();
  disj->add_option("--hit", hit_text, "Intersecting index i,j");
  disj->add_option("-o,--out", out_path, "Output graph file");
  auto* joinc = gen->add_subcommand("join", "Colored join lower-bound instance");
  joinc->add_option("-p,--pattern", pattern_path, "Pattern file")->required();
  joinc->add_option("--m", m, "Base size")->required();
  joinc->add_option("--which", which, "g0 or g1")
      ->check(CLI::IsMember({"g0", "g1"}))
      ->capture_default_str();
  joinc->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  joinc->add_option("-o,--out", out_path, "Output graph file");
  joinc->add_option("--pattern-out", pattern_out, "Write the colored pattern here");
  auto* gnm = gen->add_subcommand("gnm", "Uniform random graph with n vertices and m edges");
  gnm->add_option("--n", n, "Vertices")->required();
  gnm->add_option("--m", m, "Edges")->required();
  gnm->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gnm->add_option("-o,--out", out_path, "Output graph file");
  auto* planted = gen->add_subcommand("planted", "Disjoint pattern copies plus random edges");
  planted->add_option("-p,--pattern", pattern_path, "Pattern file")->required();
  planted->add_option("--copies", copies, "Planted copies")->required();
  planted->add_option("--n", n, "Vertices")->required();
  planted->add_option("--m", m, "Total edges")->required();
  planted->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  planted->add_option("-o,--out", out_path, "Output graph file");

  // bench
  std::string suite;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and print CSV");
  bench->add_option("-s,--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(bench_suites()));
  bench->add_option("-o,--out", out_path, "CSV output file");
  bench->add_option("--seed", bench_seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      const Graph g = load_graph_file(graph_path);
      const Pattern h = load_pattern(pattern_path);
      if (want_exact) {
        out << exact_line(g, h) << '\n';
        return kExitOk;
      }
      if (hint_opt->count()) cfg.h_hint = hint;
      if (rounds_opt->count()) cfg.rounds = rounds;
      cfg.allow_fallback = !no_fallback;
      EstimateReport rep = count_subgraph(g, h, cfg);
      if (verbose) {
        for (const auto& t : rep.h_trace) {
          err << "guess " << t.h << ": k=" << t.k << " median=" << t.median
              << " aborted=" << t.aborted << '\n';
        }
      }
      out << rep.line() << '\n';
    } else if (exact->parsed()) {
      const Graph g = load_graph_file(graph_path);
      out << exact_line(g, load_pattern(pattern_path)) << '\n';
    } else if (decomp->parsed()) {
      out << decomposition_line(decompose(load_pattern(pattern_path))) << '\n';
    } else if (disj->parsed()) {
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      if (!hit_text.empty()) hit = parse_hit(hit_text);
      DisjInstance inst = gen_disjointness(K, k, hit);
      emit_generated(inst.graph, count_copies(inst.graph, make_cycle(2 * k + 1).graph()),
                     out_path, out);
    } else if (joinc->parsed()) {
      JoinInstance inst = gen_join_lowerbound(load_pattern(pattern_path), m,
                                              which == "g0" ? JoinWhich::G0 : JoinWhich::G1,
                                              gen_seed);
      if (!pattern_out.empty()) {
        std::ofstream file(pattern_out);
        if (!file) throw UsageError("cannot write " + pattern_out);
        write_graph(file, inst.pattern.graph());
      }
      emit_generated(inst.graph, count_copies(inst.graph, inst.pattern.graph(), true), out_path,
                     out);
    } else if (gnm->parsed()) {
      emit_generated(gen_random(n, m, gen_seed), std::nullopt, out_path, out);
    } else if (planted->parsed()) {
      const Pattern h = load_pattern(pattern_path);
      const Graph g = gen_planted(h, copies, n, m, gen_seed);
      emit_generated(g, count_copies(g, h.graph()), out_path, out);
    } else if (bench->parsed()) {
      BenchResult result = run_bench(suite, bench_seed);
      if (out_path.empty()) {
        write_bench_csv(out, result);
      } else {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
        write_bench_csv(file, result);
        out << "rows=" << result.rows.size();
        if (result.slope) out << " slope=" << *result.slope;
        out << '\n';
      }
    }
  } catch (const GraphFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InfeasiblePatternError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const OracleBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ColorModeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMode;
  } catch (const NotAStarError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMode;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace subcount
