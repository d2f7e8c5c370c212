#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posa/extremity.hpp"
#include "posa/graph.hpp"
#include "posa/rational.hpp"

namespace posa {

struct ReservoirParams {
  Rational alpha;
  Rational c;
  Rational alpha_prime;  // (1-3c) alpha
  Rational beta_prime;   // c alpha
  Rational epsilon;
  Rational rho;
  Rational gamma;        // 2 beta'/(1 - alpha' - beta') unless relaxed
  Rational cap_ii{21, 20};
  bool faithful = true;
};

/// c = 1/14, epsilon = (50/1057) alpha, rho = 1 - (2/3+eps)/(5/6-2eps).
/// Throws std::invalid_argument unless 0 < alpha < 1.
ReservoirParams derive_params(const Rational& alpha);

/// Same alpha', beta' but caller-chosen epsilon and rho, and optionally a
/// looser cap for property (ii) and a larger gamma. Not faithful.
ReservoirParams exploratory_params(const Rational& alpha, const Rational& epsilon, const Rational& rho,
                                   std::optional<Rational> cap_ii = std::nullopt,
                                   std::optional<Rational> gamma = std::nullopt);

struct ConstantCheck {
  std::string name;
  std::string detail;
  bool exact = true;  // false for the floating point exponent estimates
  bool holds = false;
};

/// Every hypothesis of the reservoir, connecting and path cover lemmas and
/// the arithmetic used to chain them, evaluated for params at order n0.
std::vector<ConstantCheck> check_constants(const ReservoirParams& p, std::int64_t n0);

inline constexpr std::int64_t kN0 = 200'000'000;

int reservoir_size(int n, const Rational& rho);

struct WeakCheck {
  bool ok = false;
  bool size_ok = true;
  Vertex worst = -1;          // vertex with the least slack
  double worst_slack = 0.0;   // negative when violated
};

/// (d(u)/n - eps)|R| <= ||u,R|| <= (d(u)/n + eps)|R| for every u. When rho
/// is given, |R| = ceil(rho n) is required as well.
WeakCheck check_weak(const Graph& g, const VertexSet& R, const Rational& epsilon,
                     std::optional<Rational> rho = std::nullopt);

struct ReservoirMargins {
  double weak = 0.0;
  double ii_a = 0.0;  // 1.05 rho |S| - |S∩R| (or the relaxed cap)
  double ii_b = 0.0;  // (1+gamma) rho |S| - |S∩R|
  double iii = 0.0;   // high-degree vertices found minus the number required
};

struct ReservoirCertificate {
  VertexSet R;
  bool weak_ok = false;
  bool prop_ii_a_ok = true;
  bool prop_ii_b_ok = true;
  bool prop_iii_ok = true;
  ScanMode scan_mode;
  bool probabilistic = false;
  ScanStats stats;
  ReservoirMargins margins;
  Vertex weak_worst = -1;
  std::optional<SpecialSetDescriptor> witness;  // first violating special set

  bool prop_ii_ok() const { return prop_ii_a_ok && prop_ii_b_ok; }
  bool ok() const { return weak_ok && prop_ii_ok() && prop_iii_ok; }
};

/// Properties (i)-(iii) over the special sets of the scan. Margins are +inf
/// when no scanned set falls under a clause.
ReservoirCertificate check_special_properties(const Graph& g, const VertexSet& R, const ReservoirParams& p,
                                              const ScanMode& scan);

struct ReservoirSearch {
  bool found = false;
  int attempts = 0;
  ReservoirCertificate certificate;  // the passing one, else the best attempt
};

/// Draws uniform ceil(rho n)-subsets (attempt i uses derive_seed(seed, i))
/// until one is certified. With retries = 0 nothing is drawn.
ReservoirSearch build_special_reservoir(const Graph& g, const ReservoirParams& p, int retries, std::uint64_t seed,
                                        const ScanMode& scan);

struct NonExtremeVerdict {
  bool ok = true;
  bool chain_ok = true;  // (ii)+(iii) chain held for every qualifying set
  long long qualifying = 0;
  std::optional<SpecialSetDescriptor> witness;
};

/// For every scanned S with |S∩R| >= (1-a'+b') rho n/3, checks that S∩R is
/// not (a', b')-extreme in G[R], both through the chain of properties and
/// directly on the induced graph.
NonExtremeVerdict special_reservoir_implies_nonextreme(const Graph& g, const VertexSet& R, const ReservoirParams& p,
                                                       const ScanMode& scan);

}  // namespace posa
