#include "posa/reservoir.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "posa/random.hpp"

namespace posa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Rational third_of(const Rational& x, std::int64_t n) { return x * Rational(n, 3); }

std::string show(const Rational& r) {
  std::ostringstream out;
  out << to_string(r) << " (" << to_double(r) << ")";
  return out.str();
}

struct Checks {
  std::vector<ConstantCheck> list;

  void le(const std::string& name, const Rational& lhs, const Rational& rhs) {
    list.push_back({name, show(lhs) + " <= " + show(rhs), true, lhs <= rhs});
  }
  void lt(const std::string& name, const Rational& lhs, const Rational& rhs) {
    list.push_back({name, show(lhs) + " < " + show(rhs), true, lhs < rhs});
  }
  void eq(const std::string& name, const Rational& lhs, const Rational& rhs) {
    list.push_back({name, show(lhs) + " = " + show(rhs), true, lhs == rhs});
  }
  void numeric_lt(const std::string& name, double lhs, double rhs) {
    std::ostringstream out;
    out << lhs << " < " << rhs;
    list.push_back({name, out.str(), false, lhs < rhs});
  }
};

Rational rho_formula(const Rational& eps) {
  return 1 - (Rational(2, 3) + eps) / (Rational(5, 6) - 2 * eps);
}

}  // namespace

ReservoirParams derive_params(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
  ReservoirParams p;
  p.alpha = alpha;
  p.c = Rational(1, 14);
  p.alpha_prime = (1 - 3 * p.c) * alpha;
  p.beta_prime = p.c * alpha;
  p.epsilon = Rational(50, 1057) * alpha;
  p.rho = rho_formula(p.epsilon);
  p.gamma = 2 * p.beta_prime / (1 - p.alpha_prime - p.beta_prime);
  return p;
}

ReservoirParams exploratory_params(const Rational& alpha, const Rational& epsilon, const Rational& rho,
                                   std::optional<Rational> cap_ii, std::optional<Rational> gamma) {
  ReservoirParams p = derive_params(alpha);
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (rho <= 0 || rho > 1) throw std::invalid_argument("rho must lie in (0, 1]");
  p.epsilon = epsilon;
  p.rho = rho;
  if (cap_ii) p.cap_ii = *cap_ii;
  if (gamma) p.gamma = *gamma;
  p.faithful = false;
  return p;
}

std::vector<ConstantCheck> check_constants(const ReservoirParams& p, std::int64_t n0) {
  Checks k;
  const Rational n(n0);
  const Rational a1 = p.alpha_prime, b1 = p.beta_prime, eps = p.epsilon, rho = p.rho;
  const Rational l(10);

  // Definitions.
  k.eq("c = 1/14", p.c, Rational(1, 14));
  k.eq("epsilon = (50/1057) alpha", eps, Rational(50, 1057) * p.alpha);
  k.eq("alpha' = (1-3c) alpha", a1, (1 - 3 * p.c) * p.alpha);
  k.eq("beta' = c alpha", b1, p.c * p.alpha);
  k.eq("gamma = 2 beta'/(1-alpha'-beta')", p.gamma, 2 * b1 / (1 - a1 - b1));
  k.eq("rho = 1 - (2/3+eps)/(5/6-2eps)", rho, rho_formula(eps));

  // Reservoir lemma hypotheses.
  k.le("reservoir: alpha >= 1/36", Rational(1, 36), p.alpha);
  k.le("reservoir: c >= 1/14", Rational(1, 14), p.c);
  k.le("reservoir: eps >= (alpha'-beta')/15.1", (a1 - b1) * Rational(10, 151), eps);
  k.le("reservoir: rho >= 1 - (2/3+eps)/(5/6-2eps)", rho_formula(eps), rho);
  k.le("reservoir: 0 <= rho", Rational(0), rho);
  k.le("reservoir: rho <= 1", rho, Rational(1));
  k.le("reservoir: n0 >= 2e8", Rational(kN0), n);

  // Connecting lemma hypotheses for (alpha', beta', eps) on G[R].
  const std::int64_t r = ceil(rho * n);
  const Rational rn(r);
  k.lt("connecting: 0 < beta'", Rational(0), b1);
  k.lt("connecting: beta' < alpha'", b1, a1);
  k.le("connecting: alpha' <= 1/36", a1, Rational(1, 36));
  k.lt("connecting: 0 < eps", Rational(0), eps);
  k.le("connecting: eps <= (alpha'-beta')/15.1", eps, (a1 - b1) * Rational(10, 151));
  k.le("connecting: 660/eps <= n0", 660 / eps, n);
  k.le("connecting: 69/beta' <= n0", 69 / b1, n);
  k.le("connecting: 660/eps <= |R| = ceil(rho n0)", 660 / eps, rn);
  k.le("connecting: 69/beta' <= |R|", 69 / b1, rn);
  k.lt("(ne): l+12 < floor(beta' |R|/3)", l + 12, Rational(floor(third_of(b1, r))));
  k.lt("(ne): l+12 < alpha' |R|/3", l + 12, third_of(a1, r));
  k.le("N(a,b): (1-alpha'+beta') <= 1 - 6 eps", 1 - a1 + b1, 1 - 6 * eps);
  k.le("case 1: (1-alpha'+beta')|R|/3 <= |R|/3 - 5 eps |R| - l - 12", third_of(1 - a1 + b1, r),
       rn / 3 - 5 * eps * rn - l - 12);
  k.le("case 2.a/2.b: (1-alpha'+beta')|R|/3 <= |R|/3 - 5 eps |R| - l - 8", third_of(1 - a1 + b1, r),
       rn / 3 - 5 * eps * rn - l - 8);
  {
    // |U ∩ V''| >= |R| - 2(|R|/3 + eps|R| + l + 8) - (l + 12)
    const Rational u_low = rn / 3 - 2 * eps * rn - 3 * l - 28;
    k.lt("case 2.a: 6 eps |R| + 3l + 32 < |U∩V''|/5", 6 * eps * rn + 3 * l + 32, u_low / 5);
    k.lt("case 2.a: l + 12 < |U∩V''|/5", l + 12, u_low / 5);
  }

  // Chain closing the reservoir lemma.
  k.eq("(1-alpha'+beta')/(1+gamma) = 1-alpha'-beta'", (1 - a1 + b1) / (1 + p.gamma), 1 - a1 - b1);
  k.eq("1-alpha'-beta' = 1-alpha+2c alpha", 1 - a1 - b1, 1 - p.alpha + 2 * p.c * p.alpha);
  k.le("(iii): |S'| = floor(2c alpha n0/3) >= 2", Rational(2), Rational(floor(third_of(2 * p.c * p.alpha, n0))));

  // Path cover lemma on H = G - R.
  const std::int64_t h = n0 - r;
  k.le("path cover: eps <= 1/500", eps, Rational(1, 500));
  k.le("path cover: h = n0 - |R| >= 6000", Rational(6000), Rational(h));
  k.le("path cover: |R| <= h so delta(H) >= (2/3 - eps)h", rn, Rational(h));
  k.eq("(5/6-2eps)(1-rho) = 2/3+eps", (Rational(5, 6) - 2 * eps) * (1 - rho), Rational(2, 3) + eps);
  k.le("non-extremal: (2/3+eps)n0 - 1 <= (5/6-2eps)h", (Rational(2, 3) + eps) * n - 1,
       (Rational(5, 6) - 2 * eps) * Rational(h));
  k.lt("non-extremal: 2n0/3 < (2/3+eps)n0 - 1", Rational(2, 3) * n, (Rational(2, 3) + eps) * n - 1);
  k.lt("overview: rho < 1/3", rho, Rational(1, 3));

  // The five probability estimates, in floating point.
  const double nd = static_cast<double>(n0);
  const double e = to_double(eps), rh = to_double(rho), a = to_double(p.alpha), c = to_double(p.c);
  const double ap = to_double(a1), bp = to_double(b1), g = to_double(p.gamma);
  k.numeric_lt("(i): 2 exp(-eps^2 rho n/3) < 1/(3n)", 2 * std::exp(-e * e * rh * nd / 3), 1 / (3 * nd));
  k.numeric_lt("(ii) 1.05 cap: -log(9n^5) > -.0025 rho^2 (1-a'+b')/(2(1+.05/3)) n/3",
               -0.0025 * rh * rh * (1 - ap + bp) / (2 * (1 + 0.05 / 3)) * nd / 3, -std::log(9 * std::pow(nd, 5)));
  k.numeric_lt("(ii) gamma cap: exponent < log(1/(3n^5))",
               -g * g * rh * (1 - ap + bp) / (1.05 * (2 + 2 * g / 3)) * nd / 3, -std::log(3 * std::pow(nd, 5)));
  k.numeric_lt("(iii) |T'|: -rho(2c alpha n/3 - 1)/32 < log(1/(9n^5))", -rh * (2 * c * a * nd / 3 - 1) / 32,
               -std::log(9 * std::pow(nd, 5)));
  k.numeric_lt("(iii) degrees: -3c^2 rho alpha n/2 < log(1/(9n^6))", -3 * c * c * rh * a * nd / 2,
               -std::log(9 * std::pow(nd, 6)));
  return k.list;
}

int reservoir_size(int n, const Rational& rho) { return static_cast<int>(ceil(rho * Rational(n))); }

WeakCheck check_weak(const Graph& g, const VertexSet& R, const Rational& epsilon, std::optional<Rational> rho) {
  const int n = g.order();
  WeakCheck out;
  if (rho) out.size_ok = R.size() == reservoir_size(n, *rho);
  out.worst_slack = kInf;
  const Rational r(R.size());
  for (Vertex u = 0; u < n; ++u) {
    const Rational share(g.degree(u), n);
    const Rational hit(g.neighbors(u).intersection_size(R));
    const Rational slack = std::min(hit - (share - epsilon) * r, (share + epsilon) * r - hit);
    const double s = to_double(slack);
    if (s < out.worst_slack) {
      out.worst_slack = s;
      out.worst = u;
    }
  }
  if (n == 0) out.worst_slack = 0;
  out.ok = out.size_ok && out.worst_slack >= 0;
  return out;
}

namespace {

struct Thresholds {
  Rational big_s;     // (1-a'+b') rho n/3, clauses (ii)
  Rational third_s;   // (1-a'-b') n/3, clause (iii)
  int min_degree;     // ceil(a' rho n/3)
  int need;           // ceil(b' rho n/3)
};

Thresholds thresholds(const ReservoirParams& p, int n) {
  Thresholds t;
  t.big_s = third_of((1 - p.alpha_prime + p.beta_prime) * p.rho, n);
  t.third_s = third_of(1 - p.alpha_prime - p.beta_prime, n);
  t.min_degree = static_cast<int>(ceil(third_of(p.alpha_prime * p.rho, n)));
  t.need = static_cast<int>(ceil(third_of(p.beta_prime * p.rho, n)));
  return t;
}

int high_degree_count(const Graph& g, const VertexSet& SR, int min_degree) {
  int count = 0;
  SR.for_each([&](Vertex z) {
    if (g.neighbors(z).intersection_size(SR) >= min_degree) ++count;
  });
  return count;
}

int scan_floor(const Thresholds& t) {
  return static_cast<int>(std::max<std::int64_t>(0, ceil(std::min(t.big_s, t.third_s))));
}

}  // namespace

ReservoirCertificate check_special_properties(const Graph& g, const VertexSet& R, const ReservoirParams& p,
                                              const ScanMode& scan) {
  const int n = g.order();
  ReservoirCertificate cert;
  cert.R = R;
  cert.scan_mode = scan;
  cert.probabilistic = scan.kind == ScanMode::Kind::sampled;
  const WeakCheck weak = check_weak(g, R, p.epsilon, p.rho);
  cert.weak_ok = weak.ok;
  cert.weak_worst = weak.worst;
  cert.margins = {weak.worst_slack, kInf, kInf, kInf};

  const Thresholds t = thresholds(p, n);
  const auto fail = [&](const SpecialSetDescriptor& d) {
    if (!cert.witness) cert.witness = d;
  };
  cert.stats = for_each_special_set(g, scan, scan_floor(t), [&](const SpecialSetDescriptor& d) {
    const VertexSet SR = d.realized & R;
    const Rational s(d.realized.size()), sr(SR.size());
    if (s >= t.big_s) {
      const double m = to_double(p.cap_ii * p.rho * s - sr);
      cert.margins.ii_a = std::min(cert.margins.ii_a, m);
      if (m < 0) {
        cert.prop_ii_a_ok = false;
        fail(d);
      }
    }
    if (sr >= t.big_s) {
      const double m = to_double((1 + p.gamma) * p.rho * s - sr);
      cert.margins.ii_b = std::min(cert.margins.ii_b, m);
      if (m < 0) {
        cert.prop_ii_b_ok = false;
        fail(d);
      }
    }
    if (s >= t.third_s) {
      const double m = high_degree_count(g, SR, t.min_degree) - t.need;
      cert.margins.iii = std::min(cert.margins.iii, m);
      if (m < 0) {
        cert.prop_iii_ok = false;
        fail(d);
      }
    }
  });
  return cert;
}

namespace {

// Orders attempts: more properties passing first, then larger weak slack.
bool better(const ReservoirCertificate& a, const ReservoirCertificate& b) {
  const auto score = [](const ReservoirCertificate& c) {
    return int(c.weak_ok) + int(c.prop_ii_a_ok) + int(c.prop_ii_b_ok) + int(c.prop_iii_ok);
  };
  if (score(a) != score(b)) return score(a) > score(b);
  return a.margins.weak > b.margins.weak;
}

}  // namespace

ReservoirSearch build_special_reservoir(const Graph& g, const ReservoirParams& p, int retries, std::uint64_t seed,
                                        const ScanMode& scan) {
  const int n = g.order();
  const int r = reservoir_size(n, p.rho);
  ReservoirSearch out;
  out.certificate.R = VertexSet(n);
  out.certificate.scan_mode = scan;
  for (int i = 0; i < retries; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const std::vector<int> pick = rng.subset(n, r);
    ReservoirCertificate cert = check_special_properties(g, VertexSet::of(n, pick), p, scan);
    ++out.attempts;
    if (cert.ok()) {
      out.found = true;
      out.certificate = std::move(cert);
      return out;
    }
    if (i == 0 || better(cert, out.certificate)) out.certificate = std::move(cert);
  }
  return out;
}

NonExtremeVerdict special_reservoir_implies_nonextreme(const Graph& g, const VertexSet& R, const ReservoirParams& p,
                                                       const ScanMode& scan) {
  const int n = g.order();
  const Thresholds t = thresholds(p, n);
  const InducedSubgraph gr = induced(g, R);
  NonExtremeVerdict out;
  const auto fail = [&](const SpecialSetDescriptor& d) {
    out.ok = false;
    if (!out.witness) out.witness = d;
  };
  const int floor_size = static_cast<int>(std::max<std::int64_t>(0, ceil(t.big_s)));
  for_each_special_set(g, scan, floor_size, [&](const SpecialSetDescriptor& d) {
    const VertexSet SR = d.realized & R;
    const Rational s(d.realized.size()), sr(SR.size());
    if (sr < t.big_s) return;
    ++out.qualifying;
    // (ii) bounds |S| from below, which brings (iii) into play.
    const bool ii = (1 + p.gamma) * p.rho * s >= sr;
    const bool large = s >= t.third_s;
    const bool iii = large && high_degree_count(g, SR, t.min_degree) >= t.need;
    if (!(ii && iii)) {
      out.chain_ok = false;
      fail(d);
      return;
    }
    if (is_alpha_beta_extreme(gr.graph, gr.restrict(SR), p.alpha_prime, p.beta_prime)) fail(d);
  });
  return out;
}

}  // namespace posa
