#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "perisplit/detvar/probe.hpp"
#include "perisplit/detvar/sample.hpp"
#include "perisplit/jpw/oracle.hpp"
#include "perisplit/splitrings/compat.hpp"
#include "perisplit/splitrings/discriminant.hpp"
#include "perisplit/splitrings/specialize.hpp"

namespace perisplit {

enum class Profile { Quick, Full };

inline Profile parse_profile(const std::string& s) {
  if (s == "quick") return Profile::Quick;
  if (s == "full") return Profile::Full;
  throw std::invalid_argument("unknown profile '" + s + "' (quick or full)");
}

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::string anchor;  // the identity or claim being checked
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceConfig {
  Profile profile = Profile::Full;
  std::string golden_dir;  // empty: golden comparison skipped
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

namespace acceptance_detail {

// Tolerances: every criterion is an exact equality; only the runtime limits are soft numbers.
constexpr double kLimitRanks = 60;
constexpr double kLimitDiscriminants = 30;
constexpr double kLimitProbes = 5;
constexpr double kLimitPhiChi = 120;
constexpr double kLimitBetti = 1200;
constexpr double kLimitEuler = 600;
constexpr double kLimitCompat = 120;
constexpr double kLimitSpecialize = 60;
constexpr double kLimitMultiplicity = 60;
constexpr double kLimitBoundary = 60;

struct Log {
  bool ok = true;
  std::ostringstream os;
  void fail(const std::string& s) {
    if (!ok) os << "; ";
    else os.str("");
    ok = false;
    os << s;
  }
  void note(const std::string& s) {
    if (ok) os << (os.tellp() > 0 ? "; " : "") << s;
  }
};

inline unsigned long long total(const IntPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s.get_ui();
}

inline unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

inline unsigned long long binomial(int n, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c.get_ui();
}

// a_2i -> (-1)^i e_i(eta^2), alpha -> prod eta.
inline MPoly in_roots(const MPoly& p, std::size_t n, const RingPtr& er) {
  if (!p.ring()) return p.lifted(er);
  std::vector<MPoly> sq;
  MPoly prod = MPoly::constant(er, Rat(1));
  for (std::size_t i = 0; i < n; ++i) {
    MPoly e = MPoly::variable(er, i);
    sq.push_back(e * e);
    prod = prod * e;
  }
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < p.ring()->size(); ++v) {
    const auto& name = p.ring()->name(v);
    if (name == "alpha") {
      images.push_back(prod);
      continue;
    }
    std::size_t i = std::stoul(name.substr(1)) / 2;
    images.push_back(elementary_symmetric(i, sq).scaled(Rat(i % 2 ? -1 : 1)));
  }
  return p.substitute(images);
}

struct BettiCase {
  int n, r, max_i, max_j;
  bool quick;
};

inline const std::vector<BettiCase>& betti_cases() {
  static const std::vector<BettiCase> c{{4, 3, 2, 4, true}, {5, 4, 3, 6, true}, {3, 1, 2, 6, true}, {4, 1, 2, 6, false}};
  return c;
}

inline std::string pair_name(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

}  // namespace acceptance_detail

/// 1. Ranks of the universal fibers.
inline CriterionResult criterion_ranks(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    auto u = universal_even(static_cast<std::size_t>(n), false);
    auto d = universal_even(static_cast<std::size_t>(n), true);
    auto expect = [&](const std::string& what, std::optional<unsigned long long> got, unsigned long long want) {
      ++checked;
      if (got != want) log.fail(what + " n=" + std::to_string(n) + ": " + (got ? std::to_string(*got) : "infinite") + " != " + std::to_string(want));
    };
    expect("signed", fiber_dimension(signed_split(u.base, u.f)), (1ULL << n) * factorial(n));
    expect("type D", fiber_dimension(typeD_split(d.base, d.f)), (1ULL << (n - 1)) * factorial(n));
    for (int p = 0; p <= n; ++p) {
      unsigned long long b = (1ULL << p) * binomial(n, p);
      expect("B-fact p=" + std::to_string(p), fiber_dimension(signed_fact(u.base, u.f, p, n - p)), b);
      expect("D-fact p=" + std::to_string(p), fiber_dimension(typeD_fact(d.base, d.f, p, n - p)), p < n ? b : 1ULL << (n - 1));
    }
  }
  log.note(std::to_string(checked) + " ranks exact");
  return {1, "ring ranks", log.ok, log.os.str(), "free of rank 2^n n! / 2^(n-1) n! / 2^p C(n,p)", 0, kLimitRanks};
}

/// 2. Delta = 4^n a_2n Delta~, alpha Delta-bar = Delta, and the quartic discriminant.
inline CriterionResult criterion_discriminants(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto u = universal_even(n, true);
    std::vector<Variable> ev;
    for (std::size_t i = 1; i <= n; ++i) ev.push_back({"eta" + std::to_string(i), 1});
    RingPtr er = make_ring(ev);
    MPoly vs = MPoly::constant(er, Rat(1)), eta2 = vs;
    for (std::size_t i = 0; i < n; ++i) {
      MPoly ei = MPoly::variable(er, i);
      eta2 = eta2 * ei * ei;
      for (std::size_t j = i + 1; j < n; ++j) {
        MPoly d = ei * ei - MPoly::variable(er, j) * MPoly::variable(er, j);
        vs = vs * d * d;
      }
    }
    auto d = discriminant(u.f);
    Rat c = pow(Rat(4), static_cast<unsigned>(n)) * Rat(n % 2 ? -1 : 1);
    // Delta~ is the product of squared differences of the eta_i^2; Delta adds 4^n a_2n.
    if (in_roots(d.delta_tilde, n, er) != vs) log.fail("Delta~ root formula n=" + std::to_string(n));
    if (in_roots(d.delta, n, er) != (eta2 * vs).scaled(c)) log.fail("Delta = 4^n a_2n Delta~ n=" + std::to_string(n));
    auto gb = groebner_basis(u.base, MonomialOrder::grevlex());
    if (!gb.contains(*u.f.alpha * reduced_discriminant(u.f) - d.delta)) log.fail("alpha Delta-bar = Delta n=" + std::to_string(n));
  }
  RingPtr ring = make_ring({{"b", 1}, {"c", 1}});
  MPoly b = MPoly::variable(ring, "b"), c = MPoly::variable(ring, "c");
  MPoly quartic = delta_of(std::vector<MPoly>{b, c});
  if (quartic != ((b * b - c.scaled(Rat(4))) * c).scaled(Rat(16))) log.fail("quartic: Delta = " + quartic.to_string());
  log.note("n <= 3 identities exact; quartic Delta = 16 (b^2 - 4c) c");
  return {2, "discriminant identities", log.ok, log.os.str(), "Delta = 4^n a_2n Delta~, alpha Delta-bar = Delta", 0, kLimitDiscriminants};
}

/// 3. epsilon probes.
inline CriterionResult criterion_probes(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  std::vector<std::vector<Rat>> lambdas{{Rat(2), Rat(3)}, {Rat(2)}, {Rat(-1, 2), Rat(3), Rat(5)}};
  for (auto fam : {ProbeFamily::BV0, ProbeFamily::BVA, ProbeFamily::DV0, ProbeFamily::DDetG})
    for (const auto& l : lambdas) {
      auto p = epsilon_probe(fam, l);
      std::string tag = family_name(fam) + " |lambda|=" + std::to_string(l.size());
      if (!p.value.value().is_zero()) log.fail(tag + ": value " + p.value.to_string());
      if (p.value.slope().is_zero()) log.fail(tag + ": zero slope");
      if (fam == ProbeFamily::BVA && p.value.slope() != Rat(16)) log.fail(tag + ": quartic slope " + p.value.slope().to_string());
    }
  auto va = epsilon_probe(ProbeFamily::BVA, {Rat(2), Rat(3)});
  log.note("4 families x 3 lambda sets; B-case-VA quartic value " + va.value.to_string());
  return {3, "epsilon probes", log.ok, log.os.str(), "Its discriminant is 16 eps", 0, kLimitProbes};
}

/// 4. Phi^2 = +-chibar(0), chibar even and divisible.
inline CriterionResult criterion_phi_chi(const AcceptanceConfig& cfg) {
  using namespace acceptance_detail;
  Log log;
  std::uint64_t seeds = cfg.profile == Profile::Full ? 100 : 20;
  int points = 0;
  std::vector<std::pair<int, int>> pairs{{3, 1}, {4, 1}, {4, 2}, {5, 2}, {3, 2}, {4, 3}, {5, 3}};
  for (auto [n, r] : pairs)
    for (std::uint64_t s = 0; s < seeds; ++s) {
      std::uint64_t seed = cfg.seed + s;
      std::vector<Rat> eig;
      sample_detail::Draw d(seed ^ 0x9e3779b97f4a7c15ULL);
      for (int i = 0; i < eigen_count(n, r); ++i) eig.push_back(d.rat());
      ZPoint p = sample_Z_point(n, r, eig, seed);
      ++points;
      std::string tag = pair_name(n, r) + " seed " + std::to_string(seed);
      try {
        std::string z = z_membership_failure(p);
        if (!z.empty()) {
          log.fail(tag + ": off Z: " + z);
          continue;
        }
        auto c = chi_bar_coeffs(p.f, p.g, r);  // throws on divisibility or evenness failure
        if (c.size() != static_cast<std::size_t>(2 * std::min(r, n - r) + 1)) log.fail(tag + ": chibar degree");
        if (2 * r <= n && !verify_phi_chi(p).holds) log.fail(tag + ": Phi^2 != +-chibar(0)");
      } catch (const InvariantViolation& e) {
        log.fail(tag + ": " + e.what());
      }
    }
  log.note(std::to_string(points) + " points, " + std::to_string(seeds) + " seeds per pair");
  return {4, "Phi/chibar identity", log.ok, log.os.str(), "Phi^2 = +-chibar(0); chibar even", 0, kLimitPhiChi};
}

/// 5. Closed-form Betti tables against Koszul homology, and against the golden files.
inline CriterionResult criterion_betti(const AcceptanceConfig& cfg) {
  using namespace acceptance_detail;
  Log log;
  KoszulOptions k;
  k.jobs = cfg.jobs;
  for (const auto& c : betti_cases()) {
    if (cfg.profile == Profile::Quick && !c.quick) continue;
    std::string tag = pair_name(c.n, c.r);
    auto d = jpw_oracle_diff(c.n, c.r, c.max_i, c.max_j, JpwRing::ZPrime, k);
    for (const auto& x : d) log.fail(tag + " koszul " + x);
    if (!cfg.golden_dir.empty()) {
      std::string path = cfg.golden_dir + "/betti_" + std::to_string(c.n) + "_" + std::to_string(c.r) + ".json";
      std::ifstream in(path);
      if (!in) {
        log.fail("missing golden file " + path);
        continue;
      }
      BettiTable g;
      try {
        g = BettiTable::from_json(nlohmann::json::parse(in));
      } catch (const std::exception& e) {
        log.fail("unreadable golden file " + path + ": " + e.what());
        continue;
      }
      for (const auto& x : betti_table_jpw(c.n, c.r, c.max_i, c.max_j).diff(g)) log.fail(tag + " golden " + path + " " + x);
    }
    log.note(tag + " i<=" + std::to_string(c.max_i) + " j<=" + std::to_string(c.max_j));
  }
  return {5, "Betti oracle agreement", log.ok, log.os.str(), "Tor_i(O_Z', C) = sum over P(a,b,alpha)", 0, kLimitBetti};
}

/// 6. Alternating Betti sums against Hilbert functions.
inline CriterionResult criterion_euler(const AcceptanceConfig& cfg) {
  using namespace acceptance_detail;
  Log log;
  for (const auto& c : betti_cases()) {
    if (cfg.profile == Profile::Quick && !c.quick) continue;
    std::string tag = pair_name(c.n, c.r);
    BettiTable full = betti_table_jpw(c.n, c.r, c.max_j, c.max_j);
    std::vector<mpz_class> want;
    int nvars = 0;
    if (2 * c.r > c.n) {
      auto m = jpw_oracle_module(c.n, c.r);
      nvars = m.nvars;
      want = hilbert_series(m.ideal).expand(static_cast<std::size_t>(c.max_j));
    } else {
      auto z = z_prime_ideal(c.n, c.r);
      nvars = static_cast<int>(z.g_names.size());
      for (auto h : z.hilbert) want.push_back(static_cast<unsigned long>(h));
      if (static_cast<int>(want.size()) > c.max_j + 1) want.resize(static_cast<std::size_t>(c.max_j) + 1);
    }
    auto got = hilbert_from_betti(full, nvars, static_cast<int>(want.size()) - 1);
    for (std::size_t j = 0; j < want.size(); ++j)
      if (got[j] != want[j]) log.fail(tag + " j=" + std::to_string(j) + ": " + got[j].get_str() + " != " + want[j].get_str());
    log.note(tag + " j<=" + std::to_string(want.size() - 1));
  }
  return {6, "Euler consistency", log.ok, log.os.str(), "alternating Betti sums = Hilbert function", 0, kLimitEuler};
}

/// 7. Iterated factorization rings equal the direct ones.
inline CriterionResult criterion_compat(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= n; ++p)
      for (bool d : {false, true}) {
        ++checked;
        if (!factorization_compatibility(n, p, d).equal)
          log.fail(std::string(d ? "D" : "B") + " n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
  log.note(std::to_string(checked) + " (n, p, type) cases equal both ways");
  return {7, "factorization compatibility", log.ok, log.os.str(), "iterated construction = direct construction", 0, kLimitCompat};
}

/// 8. Specializations at f = u^2n and the ranks s0, s1.
inline CriterionResult criterion_specialize(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  for (int k = 1; k <= 4; ++k) {
    IntPoly expect{1};
    for (int i = 1; i <= k; ++i) {
      IntPoly f(static_cast<std::size_t>(i) + 1, 0);
      f[0] = f[static_cast<std::size_t>(i)] = 1;
      expect = poly_mul(expect, f);
    }
    IntPoly got = poincare_polynomial(SplitKind::BFact, k, k, 1);
    if (got != expect) log.fail("B-fact k=" + std::to_string(k) + ": " + poly_to_string(got));
    if (total(got) != 1ULL << k) log.fail("B-fact total k=" + std::to_string(k));
    unsigned long long sflag = total(poincare_polynomial(SplitKind::Signed, k));
    unsigned long long dflag = total(poincare_polynomial(SplitKind::D, k));
    if (sflag != (1ULL << k) * factorial(k)) log.fail("signed flag total k=" + std::to_string(k));
    if (dflag != (1ULL << (k - 1)) * factorial(k)) log.fail("type D flag total k=" + std::to_string(k));
  }
  // s0 is the flag total and s1 the Grassmannian total of the factor in each case.
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      bool big = 2 * r > n;
      int m = big ? n - r : r;
      if (m > 4) continue;
      unsigned long long flag = total(poincare_polynomial(big ? SplitKind::Signed : SplitKind::D, m));
      if (flag != s0_rank(n, r)) log.fail("s0 " + pair_name(n, r));
      if (total(A_poincare(n, r)) != s1_rank(n, r)) log.fail("s1 " + pair_name(n, r));
    }
  log.note("k <= 4; s0, s1 for n <= 6");
  return {8, "cohomology specialization", log.ok, log.os.str(), "prod (1 + t^i); ranks s0, s1", 0, kLimitSpecialize};
}

/// 9. Multiplicity-freeness and parity disjointness.
inline CriterionResult criterion_multiplicity(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  for (const auto& c : betti_cases()) {
    auto m = multiplicity_free_check(c.n, c.r, 6);
    if (!m.ok) log.fail(pair_name(c.n, c.r) + ": " + m.violation);
  }
  log.note("acceptance pairs, k <= 6");
  return {9, "multiplicity-free", log.ok, log.os.str(), "L_k multiplicity-free; Ltilde_k, Ltilde_k+1 disjoint", 0, kLimitMultiplicity};
}

/// 10. r = n and r = 0.
inline CriterionResult criterion_boundary(const AcceptanceConfig&) {
  using namespace acceptance_detail;
  Log log;
  for (int n = 1; n <= 6; ++n) {
    int s = n * (n - 1) / 2, t = n * (n + 1) / 2;
    auto top = betti_table_jpw(n, n, t, t), bottom = betti_table_jpw(n, 0, t, t);
    for (int j = 0; j <= t; ++j) {
      unsigned long long a = j <= s ? binomial(s, j) : 0, b = binomial(t, j);
      if (top.at(j, j) != a) log.fail("r=n n=" + std::to_string(n) + " j=" + std::to_string(j));
      if (bottom.at(j, j) != b) log.fail("r=0 n=" + std::to_string(n) + " j=" + std::to_string(j));
    }
  }
  log.note("n <= 6");
  return {10, "boundary cases", log.ok, log.os.str(), "coordinate ring wedge(wedge^2 V) / wedge(Sym^2 V*)", 0, kLimitBoundary};
}

using Criterion = std::function<CriterionResult(const AcceptanceConfig&)>;

inline std::vector<Criterion> all_criteria() {
  return {criterion_ranks,  criterion_discriminants, criterion_probes,      criterion_phi_chi,      criterion_betti,
          criterion_euler,  criterion_compat,        criterion_specialize,  criterion_multiplicity, criterion_boundary};
}

/// Runs one criterion, turning exceptions into failures and recording the time.
inline CriterionResult run_criterion(const Criterion& c, int id, const AcceptanceConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c(cfg);
  } catch (const std::exception& e) {
    r.id = id;
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.pass && r.seconds > r.limit_seconds) {
    r.pass = false;
    r.detail += "; over time limit";
  }
  return r;
}

inline std::vector<CriterionResult> verify_all(const AcceptanceConfig& cfg) {
  std::vector<CriterionResult> out;
  auto cs = all_criteria();
  for (std::size_t i = 0; i < cs.size(); ++i) out.push_back(run_criterion(cs[i], static_cast<int>(i) + 1, cfg));
  return out;
}

/// One line per criterion; timings are left out unless asked for so documents stay reproducible.
inline std::string format_line(const CriterionResult& r, bool with_time = false) {
  std::string t;
  if (with_time) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs, limit %.0fs)", r.seconds, r.limit_seconds);
    t = buf;
  }
  return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " [" + r.name + "]" + t + ": " +
         r.detail + (r.pass ? "" : " {" + r.anchor + "}");
}

inline nlohmann::json to_json(const CriterionResult& r) {
  return {{"criterion", r.id}, {"name", r.name},       {"pass", r.pass},
          {"detail", r.detail}, {"anchor", r.anchor},   {"limit_seconds", r.limit_seconds}};
}

}  // namespace perisplit
