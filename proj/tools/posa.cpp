// Command-line front end: run, gen, verify, oracle, stats, lemma.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "posa/connector.hpp"
#include "posa/extremal.hpp"
#include "posa/extremity.hpp"
#include "posa/generators.hpp"
#include "posa/oracle.hpp"
#include "posa/pathcover.hpp"
#include "posa/pipeline.hpp"
#include "posa/reservoir.hpp"

namespace {

using namespace posa;

constexpr int kInputError = 4;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

OrderedEdge parse_edge(const std::string& text, int n) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  const Sequence e = parse_sequence(s, n);
  if (e.size() != 2) throw std::invalid_argument("an edge is two vertices, got '" + text + "'");
  return {e[0], e[1]};
}

VertexSet parse_set(const std::string& text, int n) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  return VertexSet::of(n, parse_sequence(s, n));
}

struct BudgetOpts {
  long long nodes = 100'000'000;
  double secs = 60.0;
  SearchBudget get() const { return {nodes, secs}; }
};

void add_budget(CLI::App* app, BudgetOpts& b) {
  app->add_option("--budget-nodes", b.nodes, "search node limit")->check(CLI::PositiveNumber);
  app->add_option("--budget-secs", b.secs, "search time limit in seconds")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian square cycles in graphs of minimum degree at least 2n/3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  int code = 0;

  // run
  std::string run_graph, run_json;
  PipelineConfig cfg;
  BudgetOpts run_budget;
  auto* run = app.add_subcommand("run", "find and verify a hamiltonian square cycle");
  run->add_option("graph", run_graph, "graph file")->required();
  run->add_flag("--strict", cfg.strict, "reject graphs below the degree threshold");
  run->add_option("--seed", cfg.seed, "random seed");
  run->add_option("--json", run_json, "write the JSON report here");
  add_budget(run, run_budget);
  run->callback([&] {
    cfg.budget = run_budget.get();
    const Graph g = load_graph_file(run_graph);
    const RunReport r = run_pipeline(g, cfg);
    std::cout << "status " << to_string(r.status) << "  branch " << r.branch << "  n " << r.n << "  delta "
              << r.delta << "\n";
    for (const StageOutcome& s : r.stages) std::cout << "  " << s.name << ": " << s.status << "  " << s.detail << "\n";
    if (!r.cycle.empty()) std::cout << format_sequence(r.cycle) << "\n";
    if (!r.diagnosis.empty()) std::cout << r.diagnosis << "\n";
    if (!run_json.empty()) write_text(run_json, report_json(r));
    code = r.exit_code();
  });

  // gen
  std::string family, gen_out;
  GeneratorSpec spec;
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("family", family,
                  "random-mindeg, tight, planted-extreme, square-cycle, complete or tripartite")
      ->required();
  gen->add_option("--n", spec.n, "order (t for tight)");
  gen->add_option("--t", spec.n, "t for the tight family");
  gen->add_option("--delta", spec.delta, "target minimum degree (random-mindeg)");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("-o,--out", gen_out, "output file (stdout when absent)");
  gen->callback([&] {
    spec.family = parse_family(family);
    const Graph g = generate(spec);
    write_text(gen_out, format_graph(g, family + " n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed)));
  });

  // verify
  std::string ver_graph, ver_cycle;
  auto* ver = app.add_subcommand("verify", "check a cycle file against a graph file");
  ver->add_option("graph", ver_graph)->required();
  ver->add_option("cycle", ver_cycle)->required();
  ver->callback([&] {
    const FileVerdict v = verify_file(ver_graph, ver_cycle);
    if (v.ok) {
      std::cout << "accept\n";
    } else if (v.verdict.accepted) {
      std::cout << "reject: square cycle but not hamiltonian\n";
    } else {
      std::cout << "reject: " << v.verdict.reason;
      if (v.verdict.first >= 0) std::cout << " at positions " << v.verdict.first + 1 << ", " << v.verdict.second + 1;
      std::cout << "\n";
    }
    code = v.ok ? 0 : 1;
  });

  // oracle
  std::string or_graph;
  BudgetOpts or_budget;
  auto* orc = app.add_subcommand("oracle", "exact search for a hamiltonian square cycle");
  orc->add_option("graph", or_graph)->required();
  add_budget(orc, or_budget);
  orc->callback([&] {
    const Graph g = load_graph_file(or_graph);
    const SearchResult<Sequence> r = exact_hsc(g, or_budget.get());
    std::cout << "n " << g.order() << "  delta " << (g.order() ? min_degree(g) : 0) << "\n";
    std::cout << "hsc " << to_string(r.status) << "  nodes " << r.nodes << "\n";
    if (r.found()) std::cout << format_sequence(r.value) << "\n";
    if (g.order() <= 64) {
      try {
        const VertexSet mis = max_independent_set_exact(g, or_budget.get());
        std::cout << "independence number " << mis.size() << "\n";
      } catch (const std::runtime_error&) {
        std::cout << "independence number: budget exhausted\n";
      }
    }
    code = r.found() ? 0 : r.status == SearchStatus::proven_absent ? 2 : 3;
  });

  // stats
  std::string kind, csv_out, json_out;
  StatsParams sp;
  std::string rho = "1/4", eps = "1/10";
  int trials = 100;
  std::uint64_t stats_seed = 0;
  auto* stats = app.add_subcommand("stats", "Monte Carlo experiments on one random graph");
  stats->add_option("kind", kind, "reservoir-weak, reservoir-special or connector-success")->required();
  stats->add_option("--n", sp.n);
  stats->add_option("--delta", sp.delta);
  stats->add_option("--rho", rho, "reservoir share, p/q or decimal");
  stats->add_option("--epsilon", eps, "weak tolerance, p/q or decimal");
  stats->add_option("--samples", sp.samples, "special-set samples per check");
  stats->add_option("--avoid", sp.avoid, "|L| in connector trials");
  stats->add_option("--threads", sp.threads);
  stats->add_option("--trials", trials)->check(CLI::PositiveNumber);
  stats->add_option("--seed", stats_seed);
  stats->add_option("--csv", csv_out, "per-trial CSV");
  stats->add_option("--json", json_out, "JSON summary");
  stats->callback([&] {
    sp.rho = parse_rational(rho);
    sp.epsilon = parse_rational(eps);
    const StatsSummary s = stats_experiment(parse_stats_kind(kind), sp, trials, stats_seed);
    std::cout << to_string(s.kind) << "  trials " << s.rows.size() << "  passes " << s.passes << "  rate "
              << s.rate() << "  unsound " << s.unsound << "\n";
    if (!csv_out.empty()) write_text(csv_out, stats_csv(s));
    if (!json_out.empty()) write_text(json_out, stats_json(s));
    code = s.unsound == 0 ? 0 : 1;
  });

  // lemma
  auto* lemma = app.add_subcommand("lemma", "run one construction on its own");
  lemma->require_subcommand(1);

  std::string lc_graph, lc_ab, lc_cd, lc_avoid;
  bool lc_faithful = false;
  auto* lc = lemma->add_subcommand("connect", "square path of order at most 14 between two edges");
  lc->add_option("graph", lc_graph)->required();
  lc->add_option("--ab", lc_ab, "first edge, e.g. 1,2")->required();
  lc->add_option("--cd", lc_cd, "second edge")->required();
  lc->add_option("--avoid", lc_avoid, "vertices L the interior must avoid");
  lc->add_flag("--faithful", lc_faithful, "check the hypotheses and follow the counted case only");
  lc->callback([&] {
    const Graph g = load_graph_file(lc_graph);
    ConnectorParams p;
    p.faithful = lc_faithful;
    const ConnectResult r =
        connect(g, parse_edge(lc_ab, g.order()), parse_edge(lc_cd, g.order()), parse_set(lc_avoid, g.order()), p);
    std::cout << to_string(r.status) << "  case " << to_string(r.trace.case_taken) << "\n";
    if (r.ok()) std::cout << format_sequence(r.path) << "\n";
    code = r.ok() ? 0 : 3;
  });

  std::string lr_graph, lr_rho = "1/4", lr_eps = "1/10";
  int lr_retries = 10;
  long long lr_samples = 2000;
  std::uint64_t lr_seed = 0;
  auto* lr = lemma->add_subcommand("reservoir", "draw and certify a special reservoir");
  lr->add_option("graph", lr_graph)->required();
  lr->add_option("--rho", lr_rho);
  lr->add_option("--epsilon", lr_eps);
  lr->add_option("--retries", lr_retries);
  lr->add_option("--samples", lr_samples, "special-set samples (exhaustive up to 60 vertices)");
  lr->add_option("--seed", lr_seed);
  lr->callback([&] {
    const Graph g = load_graph_file(lr_graph);
    const ReservoirParams p = exploratory_params(kExtremalAlpha, parse_rational(lr_eps), parse_rational(lr_rho),
                                                 Rational(3, 2), Rational(1, 2));
    const ScanMode scan =
        g.order() <= kExhaustiveScanLimit ? ScanMode::exhaustive() : ScanMode::sampled(lr_samples, lr_seed);
    const ReservoirSearch s = build_special_reservoir(g, p, lr_retries, lr_seed, scan);
    const ReservoirCertificate& c = s.certificate;
    std::cout << (s.found ? "certified" : "not certified") << "  attempts " << s.attempts << "  scan "
              << to_string(scan) << "\n";
    std::cout << "weak " << c.weak_ok << "  (ii) " << c.prop_ii_ok() << "  (iii) " << c.prop_iii_ok << "\n";
    if (!c.R.empty()) std::cout << format_sequence(c.R.members()) << "\n";
    code = s.found ? 0 : 3;
  });

  std::string lp_graph, lp_eps = "1/500";
  std::uint64_t lp_seed = 0;
  auto* lp = lemma->add_subcommand("pathcover", "two disjoint square paths covering most of the graph");
  lp->add_option("graph", lp_graph)->required();
  lp->add_option("--epsilon", lp_eps);
  lp->add_option("--seed", lp_seed);
  lp->callback([&] {
    const Graph g = load_graph_file(lp_graph);
    const CoverResult r = cover_two_paths(g, parse_rational(lp_eps), {}, lp_seed);
    std::cout << "route " << r.route << "  |P1|+|P2| " << r.sum << "  bound " << to_string(r.bound)
              << (r.bound_met ? "  met" : "  missed") << "\n";
    std::cout << format_sequence(r.p1) << "\n" << format_sequence(r.p2) << "\n";
    code = 0;
  });

  std::string le_graph, le_set;
  std::uint64_t le_seed = 0;
  auto* le = lemma->add_subcommand("extremal", "hamiltonian square cycle from a 1/36-extreme set");
  le->add_option("graph", le_graph)->required();
  le->add_option("--set", le_set, "the extreme set, e.g. 1,2,3 (searched for when absent)");
  le->add_option("--seed", le_seed);
  le->callback([&] {
    const Graph g = load_graph_file(le_graph);
    VertexSet S;
    if (le_set.empty()) {
      const AlphaExtremeSearch f = find_alpha_extreme(g, kExtremalAlpha);
      if (!f.certificate) {
        std::cout << "no 1/36-extreme set found (" << f.method << ")\n";
        code = 3;
        return;
      }
      S = f.certificate->S;
    } else {
      S = parse_set(le_set, g.order());
    }
    try {
      const ExtremalRun r = extremal_hsc(g, S, {}, le_seed);
      std::cout << "branch " << r.report.branch << "  k " << r.report.k << "  |T0| " << r.report.t0_size << "  m "
                << r.report.m << "  ports " << r.report.ports << "\n";
      for (const std::string& s : r.report.stages) std::cout << "  " << s << "\n";
      std::cout << format_sequence(r.cycle) << "\n";
    } catch (const ExtremalError& e) {
      std::cout << "failed at " << e.step() << ": " << e.what() << "\n";
      code = 3;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  } catch (const GraphFormatError& e) {
    std::cerr << "input error: line " << e.line() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
