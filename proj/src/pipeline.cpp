#include "posa/pipeline.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "posa/connector.hpp"
#include "posa/extremal.hpp"
#include "posa/extremity.hpp"
#include "posa/generators.hpp"
#include "posa/oracle.hpp"
#include "posa/pathcover.hpp"
#include "posa/random.hpp"
#include "posa/reservoir.hpp"

namespace posa {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

class Stage {
 public:
  Stage(RunReport& r, std::string name) : r_(r), name_(std::move(name)), start_(Clock::now()) {}
  void done(const std::string& status, const std::string& detail) {
    const double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    r_.stages.push_back({name_, status, detail, secs});
  }

 private:
  RunReport& r_;
  std::string name_;
  Clock::time_point start_;
};

std::string str(long long v) { return std::to_string(v); }

// Ordered edge of a host path, in the local coordinates of h.
OrderedEdge local_edge(const InducedSubgraph& h, Vertex a, Vertex b) { return {h.from_host[a], h.from_host[b]}; }

// The reservoir / path cover / connect / complete route. Returns the cycle
// handed to completion's result, or nothing after the first failed stage.
std::optional<Sequence> nonextremal_route(const Graph& g, const PipelineConfig& cfg, RunReport& r) {
  const int n = g.order();
  const ReservoirParams p = exploratory_params(kExtremalAlpha, cfg.epsilon, cfg.rho, cfg.cap_ii, cfg.gamma);

  Stage res(r, "reservoir");
  const ScanMode scan = ScanMode::sampled(cfg.scan_samples, derive_seed(cfg.seed, 1));
  const ReservoirSearch rs = build_special_reservoir(g, p, cfg.reservoir_retries, derive_seed(cfg.seed, 0), scan);
  const VertexSet& R = rs.certificate.R;
  const std::string rdetail = "|R|=" + str(R.size()) + " attempts=" + str(rs.attempts) + " scan=" + to_string(scan);
  if (!rs.found) {
    res.done("failed", rdetail + " no attempt certified");
    return std::nullopt;
  }
  res.done("ok", rdetail);

  Stage cov(r, "pathcover");
  const InducedSubgraph rest = induced(g, R.complement());
  const CoverResult cover = cover_two_paths(rest.graph, cfg.epsilon, cfg.budget, cfg.seed);
  Sequence p1 = rest.lift(cover.p1);
  Sequence p2 = rest.lift(cover.p2);
  std::string cdetail = "route=" + cover.route + " |P1|=" + str(p1.size()) + " |P2|=" + str(p2.size()) +
                        " bound=" + to_string(cover.bound) + (cover.bound_met ? " met" : " missed");
  if (p2.size() < 2) p2.clear();
  if (p1.size() < (p2.empty() ? 4U : 2U)) {
    cov.done("failed", cdetail + " paths too short to connect");
    return std::nullopt;
  }
  cov.done("ok", cdetail);

  // First call joins P1's end to P2's start (or P1's own start), the second
  // closes from P2's end with L = reservoir vertices of the first.
  Sequence cycle = p1;
  VertexSet used(n);
  const auto join = [&](const std::string& name, Vertex a, Vertex b, Vertex c, Vertex d) -> bool {
    Stage st(r, name);
    VertexSet hs = R;
    for (Vertex v : {a, b, c, d}) hs.insert(v);
    const InducedSubgraph h = induced(g, hs);
    const VertexSet L = h.restrict(used);
    ConnectResult cr;
    try {
      cr = connect(h.graph, local_edge(h, a, b), local_edge(h, c, d), L);
    } catch (const std::invalid_argument& e) {
      st.done("failed", e.what());
      return false;
    }
    const std::string detail = "h=G[R+{" + str(a + 1) + "," + str(b + 1) + "," + str(c + 1) + "," + str(d + 1) +
                               "}] |L|=" + str(L.size()) + " case=" + to_string(cr.trace.case_taken);
    if (!cr.ok()) {
      st.done("failed", detail + " " + to_string(cr.status));
      return false;
    }
    const Sequence path = h.lift(cr.path);
    for (std::size_t i = 2; i + 2 < path.size(); ++i) {
      cycle.push_back(path[i]);
      used.insert(path[i]);
    }
    st.done("ok", detail + " order=" + str(path.size()));
    return true;
  };
  if (p2.empty()) {
    if (!join("connect-1", p1[p1.size() - 2], p1.back(), p1[0], p1[1])) return std::nullopt;
  } else {
    if (!join("connect-1", p1[p1.size() - 2], p1.back(), p2[0], p2[1])) return std::nullopt;
    cycle.insert(cycle.end(), p2.begin(), p2.end());
    if (!join("connect-2", p2[p2.size() - 2], p2.back(), p1[0], p1[1])) return std::nullopt;
  }

  Stage len(r, "length");
  const std::string ldetail = "|C|=" + str(cycle.size()) + " 2n/3=" + to_string(Rational(2 * n, 3));
  if (!verify_square_cycle(g, cycle)) throw std::logic_error("joined cycle is not a square cycle");
  if (3 * static_cast<long long>(cycle.size()) <= 2LL * n) {
    len.done("failed", ldetail);
    return std::nullopt;
  }
  len.done("ok", ldetail);

  Stage fk3(r, "fk3_complete");
  const SearchResult<Sequence> done = fk3_complete(g, cycle, cfg.budget, cfg.seed);
  const std::string fdetail = "status=" + to_string(done.status) + " |C|=" + str(done.value.size());
  if (!done.found()) {
    fk3.done("failed", fdetail);
    return std::nullopt;
  }
  fk3.done("ok", fdetail);
  return done.value;
}

}  // namespace

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::success: return "success";
    case RunStatus::proven_absent: return "proven-absent";
    case RunStatus::undecided: return "undecided";
    case RunStatus::rejected: return "rejected";
  }
  return "?";
}

int RunReport::exit_code() const {
  switch (status) {
    case RunStatus::success: return 0;
    case RunStatus::proven_absent: return 2;
    case RunStatus::undecided: return 3;
    case RunStatus::rejected: return 4;
  }
  return 1;
}

RunReport run_pipeline(const Graph& g, const PipelineConfig& cfg) {
  RunReport r;
  r.seed = cfg.seed;
  r.n = g.order();
  r.m = g.edge_count();
  if (r.n < 3) {
    r.status = RunStatus::rejected;
    r.diagnosis = "a square cycle needs at least 3 vertices";
    return r;
  }
  r.delta = min_degree(g);
  r.required_degree = (2 * r.n + 2) / 3;
  r.degree_ok = r.delta >= r.required_degree;
  {
    Stage st(r, "degree");
    const std::string detail = "delta=" + str(r.delta) + " required=" + str(r.required_degree);
    if (!r.degree_ok) {
      st.done("failed", detail + " shortfall=" + str(r.required_degree - r.delta));
      if (cfg.strict) {
        r.status = RunStatus::rejected;
        r.diagnosis = "minimum degree " + str(r.delta) + " below ceil(2n/3) = " + str(r.required_degree);
        return r;
      }
    } else {
      st.done("ok", detail);
    }
  }

  std::optional<Sequence> cycle;
  std::vector<std::string> failures;

  std::optional<ExtremeCertificate> cert;
  {
    Stage st(r, "detect");
    const AlphaExtremeSearch found = find_alpha_extreme(g, kExtremalAlpha, cfg.budget);
    cert = found.certificate;
    if (cert)
      st.done("ok", "1/36-extreme set |S|=" + str(cert->S.size()) + " method=" + found.method);
    else
      st.done("ok", std::string("none found") + (found.exact ? " (exact)" : " (heuristic)") + " method=" + found.method);
  }
  if (cert) {
    Stage st(r, "extremal");
    try {
      ExtremalRun run = extremal_hsc(g, cert->S, cfg.budget, cfg.seed);
      st.done("ok", "branch=" + run.report.branch + " k=" + str(run.report.k) + " woven=" + str(run.report.woven));
      cycle = std::move(run.cycle);
      r.branch = "extremal";
    } catch (const ExtremalError& e) {
      st.done("failed", "step " + e.step() + ": " + e.what());
      failures.push_back("extremal step " + e.step());
    } catch (const std::invalid_argument& e) {
      st.done("failed", e.what());
      failures.push_back("extremal precondition");
    }
  } else {
    Stage(r, "extremal").done("skipped", "no extreme set");
  }

  if (!cycle) {
    if (r.n >= cfg.nonextremal_min_order) {
      cycle = nonextremal_route(g, cfg, r);
      if (cycle)
        r.branch = "non-extremal";
      else
        failures.push_back("non-extremal " + r.stages.back().name);
    } else {
      Stage(r, "non-extremal").done("skipped", "n=" + str(r.n) + " < " + str(cfg.nonextremal_min_order));
    }
  }

  if (!cycle) {
    Stage st(r, "fallback-exact");
    const SearchResult<Sequence> ex = exact_hsc(g, cfg.budget);
    st.done(ex.found() ? "ok" : "failed", "status=" + to_string(ex.status) + " nodes=" + str(ex.nodes));
    if (ex.found()) {
      cycle = ex.value;
      r.branch = "fallback-exact";
    } else {
      std::string why;
      for (const std::string& f : failures) why += f + "; ";
      if (ex.status == SearchStatus::proven_absent) {
        r.status = RunStatus::proven_absent;
        r.diagnosis = why + "exact search proved that no hamiltonian square cycle exists";
      } else {
        r.status = RunStatus::undecided;
        r.diagnosis = why + "exact search ran out of budget";
      }
      return r;
    }
  }

  Stage st(r, "verify");
  const Verdict v = verify_square_cycle(g, *cycle);
  if (!v.accepted || !v.hamiltonian)
    throw std::logic_error("pipeline produced an invalid cycle: " + (v.accepted ? "not hamiltonian" : v.reason));
  st.done("ok", "hamiltonian square cycle of length " + str(cycle->size()));
  r.cycle = std::move(*cycle);
  r.status = RunStatus::success;
  return r;
}

std::string report_json(const RunReport& r, bool timing) {
  json j;
  j["schema"] = kRunSchema;
  j["version"] = kVersion;
  j["seed"] = r.seed;
  j["input"] = {{"n", r.n}, {"delta", r.delta}, {"m", r.m}, {"required_degree", r.required_degree},
                {"degree_ok", r.degree_ok}};
  j["branch"] = r.branch;
  j["status"] = to_string(r.status);
  j["exit_code"] = r.exit_code();
  json stages = json::array();
  for (const StageOutcome& s : r.stages) {
    json e = {{"name", s.name}, {"status", s.status}, {"detail", s.detail}};
    if (timing) e["seconds"] = s.seconds;
    stages.push_back(std::move(e));
  }
  j["stages"] = std::move(stages);
  json cyc = json::array();
  for (Vertex v : r.cycle) cyc.push_back(v + 1);
  j["cycle"] = std::move(cyc);
  j["diagnosis"] = r.diagnosis;
  return j.dump(2) + "\n";
}

FileVerdict verify_file(const std::string& graph_path, const std::string& cycle_path) {
  const Graph g = load_graph_file(graph_path);
  std::ifstream in(cycle_path);
  if (!in) throw std::invalid_argument("cannot open " + cycle_path);
  std::stringstream text;
  text << in.rdbuf();
  const Sequence seq = parse_sequence(text.str(), g.order());
  FileVerdict out;
  if (seq.size() < 3) {
    out.verdict.reason = "fewer than 3 vertices";
    return out;
  }
  out.verdict = verify_square_cycle(g, seq);
  out.ok = out.verdict.accepted && out.verdict.hamiltonian;
  return out;
}

StatsKind parse_stats_kind(const std::string& name) {
  if (name == "reservoir-weak") return StatsKind::reservoir_weak;
  if (name == "reservoir-special") return StatsKind::reservoir_special;
  if (name == "connector-success") return StatsKind::connector_success;
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

std::string to_string(StatsKind k) {
  switch (k) {
    case StatsKind::reservoir_weak: return "reservoir-weak";
    case StatsKind::reservoir_special: return "reservoir-special";
    case StatsKind::connector_success: return "connector-success";
  }
  return "?";
}

namespace {

TrialRow connector_trial(const Graph& g, const StatsParams& sp, Rng& rng) {
  TrialRow row;
  const int n = g.order();
  // Two disjoint edges, then L from the rest.
  Vertex a = -1, b = -1, c = -1, d = -1;
  for (int tries = 0; tries < 1000 && d < 0; ++tries) {
    a = static_cast<Vertex>(rng.below(n));
    const std::vector<Vertex> na = g.neighbors(a).members();
    if (na.empty()) continue;
    b = na[rng.below(na.size())];
    c = static_cast<Vertex>(rng.below(n));
    if (c == a || c == b) continue;
    std::vector<Vertex> nc;
    for (Vertex v : g.neighbors(c).members())
      if (v != a && v != b) nc.push_back(v);
    if (!nc.empty()) d = nc[rng.below(nc.size())];
  }
  if (d < 0) {
    row.note = "no disjoint edges";
    return row;
  }
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != a && v != b && v != c && v != d) others.push_back(v);
  rng.shuffle(others);
  VertexSet L(n);
  for (int i = 0; i < std::min<int>(sp.avoid, static_cast<int>(others.size())); ++i) L.insert(others[i]);

  const ConnectResult cr = connect(g, {a, b}, {c, d}, L);
  row.note = to_string(cr.status) + " " + to_string(cr.trace.case_taken);
  if (!cr.ok()) return row;
  const Sequence& p = cr.path;
  const std::size_t len = p.size();
  bool sound = len >= 4 && len <= static_cast<std::size_t>(kMaxConnectorOrder) && verify_square_path(g, p) &&
               p[0] == a && p[1] == b && p[len - 2] == c && p[len - 1] == d;
  for (std::size_t i = 2; sound && i + 2 < len; ++i)
    if (L.contains(p[i])) sound = false;
  row.sound = sound;
  row.pass = sound;
  row.metric = static_cast<double>(len);
  return row;
}

}  // namespace

StatsSummary stats_experiment(StatsKind kind, const StatsParams& sp, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  StatsSummary out;
  out.kind = kind;
  out.params = sp;
  out.seed = seed;
  const Graph g = random_mindeg_graph(sp.n, sp.delta, seed);
  const ReservoirParams p = exploratory_params(kExtremalAlpha, sp.epsilon, sp.rho, Rational(3, 2), Rational(1, 2));
  const int size = reservoir_size(sp.n, sp.rho);
  out.rows.resize(static_cast<std::size_t>(trials));

  const auto run = [&](int i) {
    TrialRow row;
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 1);
    Rng rng(s);
    try {
      if (kind == StatsKind::connector_success) {
        row = connector_trial(g, sp, rng);
      } else {
        const VertexSet R = VertexSet::of(sp.n, rng.subset(sp.n, size));
        if (kind == StatsKind::reservoir_weak) {
          const WeakCheck w = check_weak(g, R, sp.epsilon, sp.rho);
          row.pass = w.ok;
          row.metric = w.worst_slack;
        } else {
          const ScanMode scan = sp.n <= kExhaustiveScanLimit ? ScanMode::exhaustive() : ScanMode::sampled(sp.samples, s);
          const ReservoirCertificate c = check_special_properties(g, R, p, scan);
          row.pass = c.ok();
          row.metric = c.margins.weak;
          if (!c.weak_ok) row.note += "weak ";
          if (!c.prop_ii_a_ok || !c.prop_ii_b_ok) row.note += "ii ";
          if (!c.prop_iii_ok) row.note += "iii ";
        }
      }
    } catch (const std::exception& e) {
      row.pass = false;
      row.note = e.what();
    }
    row.trial = i;
    row.seed = s;
    out.rows[static_cast<std::size_t>(i)] = std::move(row);
  };

  int threads = sp.threads > 0 ? sp.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, trials);
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < trials; i = next++) run(i);
    });
  pool.clear();

  for (const TrialRow& row : out.rows) {
    out.passes += row.pass;
    out.unsound += !row.sound;
  }
  return out;
}

std::string stats_csv(const StatsSummary& s) {
  std::ostringstream out;
  out << "trial,seed,pass,sound,metric,note\n";
  for (const TrialRow& r : s.rows)
    out << r.trial << ',' << r.seed << ',' << r.pass << ',' << r.sound << ',' << r.metric << ",\"" << r.note
        << "\"\n";
  return out.str();
}

std::string stats_json(const StatsSummary& s) {
  json j;
  j["schema"] = "posa.stats/1";
  j["version"] = kVersion;
  j["kind"] = to_string(s.kind);
  j["seed"] = s.seed;
  j["params"] = {{"n", s.params.n},
                 {"delta", s.params.delta},
                 {"rho", to_string(s.params.rho)},
                 {"epsilon", to_string(s.params.epsilon)},
                 {"samples", s.params.samples},
                 {"avoid", s.params.avoid}};
  j["trials"] = s.rows.size();
  j["passes"] = s.passes;
  j["unsound"] = s.unsound;
  j["rate"] = s.rate();
  json rows = json::array();
  for (const TrialRow& r : s.rows)
    rows.push_back({{"trial", r.trial}, {"seed", r.seed}, {"pass", r.pass}, {"sound", r.sound},
                    {"metric", r.metric}, {"note", r.note}});
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

Rational parse_rational(const std::string& text) {
  const auto whole = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
      throw std::invalid_argument("malformed number '" + text + "'");
    return v;
  };
  const std::string_view t = text;
  if (const auto slash = t.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = whole(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(whole(t.substr(0, slash)), den);
  }
  if (const auto dot = t.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = t.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals in '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string_view ip = t.substr(0, dot);
    const bool neg = !ip.empty() && ip[0] == '-';
    const std::int64_t i = ip.empty() || ip == "-" ? 0 : whole(ip);
    const std::int64_t f = frac.empty() ? 0 : whole(frac);
    if (f < 0 || frac.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("malformed number '" + text + "'");
    const Rational mag = Rational(neg ? -i : i) + Rational(f, scale);
    return neg ? -mag : mag;
  }
  return Rational(whole(t));
}

}  // namespace posa
