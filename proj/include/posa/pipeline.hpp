#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posa/budget.hpp"
#include "posa/graph.hpp"
#include "posa/rational.hpp"
#include "posa/square.hpp"

namespace posa {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kRunSchema = "posa.run/1";

struct PipelineConfig {
  bool strict = false;  // reject inputs below the degree threshold
  std::uint64_t seed = 0;
  SearchBudget budget{};
  // The non-extremal route is attempted from this order on, with
  // exploratory constants (the faithful ones only work near 2e8).
  int nonextremal_min_order = 1000;
  Rational epsilon{1, 10};
  Rational rho{1, 4};
  Rational cap_ii{3, 2};
  Rational gamma{1, 2};
  int reservoir_retries = 3;
  long long scan_samples = 2000;
};

struct StageOutcome {
  std::string name;
  std::string status;  // "ok", "failed" or "skipped"
  std::string detail;
  double seconds = 0.0;
};

enum class RunStatus { success, proven_absent, undecided, rejected };

std::string to_string(RunStatus s);

struct RunReport {
  int n = 0;
  int delta = 0;
  long long m = 0;
  int required_degree = 0;  // ceil(2n/3)
  bool degree_ok = false;
  std::string branch = "none";  // "extremal", "non-extremal", "fallback-exact"
  RunStatus status = RunStatus::undecided;
  std::vector<StageOutcome> stages;
  Sequence cycle;
  std::string diagnosis;
  std::uint64_t seed = 0;

  /// 0 success, 2 proven absent, 3 undecided, 4 rejected input.
  int exit_code() const;
};

/// Degree gate, extremal detection and construction, the non-extremal route
/// for large orders, exact search as the last resort, then verification.
/// A returned success always carries a verified hamiltonian square cycle;
/// a cycle that fails to verify throws std::logic_error.
RunReport run_pipeline(const Graph& g, const PipelineConfig& config = {});

/// JSON under kRunSchema. Without timing the text depends only on the
/// input, seed and config.
std::string report_json(const RunReport& r, bool timing = true);

struct FileVerdict {
  Verdict verdict;
  bool ok = false;  // accepted and hamiltonian
};

/// Throws GraphFormatError or std::invalid_argument on parse errors.
FileVerdict verify_file(const std::string& graph_path, const std::string& cycle_path);

enum class StatsKind { reservoir_weak, reservoir_special, connector_success };

StatsKind parse_stats_kind(const std::string& name);
std::string to_string(StatsKind k);

struct StatsParams {
  int n = 1000;
  int delta = 670;
  Rational rho{1, 4};
  Rational epsilon{1, 10};
  long long samples = 2000;  // special-set samples per reservoir check
  int avoid = 10;            // |L| for connector trials
  int threads = 0;           // 0: hardware concurrency
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  bool sound = true;  // connector trials: the returned path checked out
  double metric = 0.0;
  std::string note;
};

struct StatsSummary {
  StatsKind kind = StatsKind::reservoir_weak;
  StatsParams params;
  std::uint64_t seed = 0;
  std::vector<TrialRow> rows;
  int passes = 0;
  int unsound = 0;

  double rate() const { return rows.empty() ? 0.0 : static_cast<double>(passes) / rows.size(); }
};

/// Independent trials on one random-mindeg(n, delta) graph drawn from seed;
/// trial i uses derive_seed(seed, i + 1). Trials run concurrently, rows come
/// back in trial order.
StatsSummary stats_experiment(StatsKind kind, const StatsParams& params, int trials, std::uint64_t seed);

std::string stats_csv(const StatsSummary& s);
std::string stats_json(const StatsSummary& s);

/// "p/q", an integer or a decimal like 0.12 (taken exactly).
Rational parse_rational(const std::string& text);

}  // namespace posa
