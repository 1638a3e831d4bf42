#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "perisplit/exactcore/mpoly.hpp"
#include "perisplit/groebner/buchberger.hpp"

namespace perisplit {

/// f = u^{2n} + a_2 u^{2n-2} + ... + a_{2n}, optionally with a square root alpha of (-1)^n a_{2n}.
struct EvenMonicPoly {
  std::vector<MPoly> a;  // a[i - 1] = a_{2i}
  std::optional<MPoly> alpha;

  std::size_t n() const { return a.size(); }
  /// a_{2i}; a_0 = 1.
  MPoly coeff(std::size_t i) const { return i == 0 ? MPoly(1) : a.at(i - 1); }
};

enum class SplitKind { A, Signed, D, BFact, DFact, Generalized };

inline std::string kind_name(SplitKind k) {
  switch (k) {
    case SplitKind::A: return "A";
    case SplitKind::Signed: return "B-signed";
    case SplitKind::D: return "D";
    case SplitKind::BFact: return "B-fact";
    case SplitKind::DFact: return "D-fact";
    case SplitKind::Generalized: return "generalized";
  }
  return "?";
}

struct SplitRing {
  SplitKind kind = SplitKind::Signed;
  int n = 0, p = 0, q = 0;  // p, q: factorization type
  int m = 0, mp = 0;        // the G(m, mp, n) parameters of a generalized ring
  IdealPresentation base;
  IdealPresentation result;
  std::vector<std::string> roots;  // names of the root variables, if any
  std::vector<std::string> added;  // every variable added to the base
  std::string group;

  nlohmann::json to_json() const {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : result.ring->vars()) vars.push_back({{"name", v.name}, {"weight", v.weight}});
    nlohmann::json j{{"kind", kind_name(kind)}, {"n", n},          {"variables", vars},
                     {"generators", result.serialized()}, {"group", group}};
    if (kind == SplitKind::BFact || kind == SplitKind::DFact) {
      j["p"] = p;
      j["q"] = q;
    }
    if (kind == SplitKind::Generalized) {
      j["m"] = m;
      j["p"] = mp;
    }
    return j;
  }
};

/// Naming and grading of the variables a constructor adds.
struct SplitNames {
  std::string root = "eta";
  int first_root = 1;
  int root_weight = 1;  // 2 gives the cohomological grading
  std::string b = "b", c = "c", beta = "beta";
};

namespace split_detail {

inline MPoly in(const RingPtr& r, const MPoly& f) { return f.ring() ? f.rebase(r) : f.lifted(r); }

inline std::vector<Variable> root_vars(std::size_t n, const SplitNames& names) {
  std::vector<Variable> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back({names.root + std::to_string(names.first_root + static_cast<int>(i)), names.root_weight});
  return v;
}

inline void check_coefficients(const IdealPresentation& base, const EvenMonicPoly& f) {
  for (std::size_t i = 1; i <= f.n(); ++i) {
    try {
      in(base.ring, f.coeff(i));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("coefficient a_" + std::to_string(2 * i) + " is not in the base ring");
    }
  }
}

inline void check_alpha(const IdealPresentation& base, const EvenMonicPoly& f) {
  if (!f.alpha) throw std::invalid_argument("type D construction needs alpha");
  MPoly al = in(base.ring, *f.alpha);
  MPoly rel = al * al - in(base.ring, f.coeff(f.n())).scaled(Rat(f.n() % 2 ? -1 : 1));
  if (rel.is_zero()) return;
  if (base.generators.empty() || !groebner_basis(base, MonomialOrder::grevlex()).contains(rel))
    throw std::invalid_argument("alpha^2 is not (-1)^n a_2n in the base");
}

inline std::vector<MPoly> variables(const RingPtr& r, const std::vector<Variable>& vs) {
  std::vector<MPoly> out;
  for (const auto& v : vs) out.push_back(MPoly::variable(r, v.name));
  return out;
}

/// Coefficients of u^0, u^1, ... of p, moved into `target` (which lacks u).
inline std::vector<MPoly> u_coefficients(const MPoly& p, std::size_t u, const RingPtr& target) {
  std::vector<std::vector<Term>> by(static_cast<std::size_t>(std::max(0, p.degree_in(u))) + 1);
  for (const auto& t : p.terms()) {
    Term s = t;
    std::size_t k = static_cast<std::size_t>(s.exps[u]);
    s.exps[u] = 0;
    by[k].push_back(std::move(s));
  }
  std::vector<MPoly> out;
  for (auto& ts : by) out.push_back(MPoly::from_terms(p.ring(), std::move(ts)).rebase(target));
  return out;
}

inline std::vector<MPoly> squares(const std::vector<MPoly>& v) {
  std::vector<MPoly> out;
  for (const auto& x : v) out.push_back(x * x);
  return out;
}

inline MPoly product(const std::vector<MPoly>& v) {
  MPoly p(1);
  for (const auto& x : v) p = p * x;
  return p;
}

inline Rat sign(std::size_t i) { return Rat(i % 2 ? -1 : 1); }

}  // namespace split_detail

/// Adjoin eta_1..eta_n with a_{2i} = (-1)^i e_i(eta^2).
inline SplitRing signed_split(const IdealPresentation& base, const EvenMonicPoly& f, const SplitNames& names = {}) {
  using namespace split_detail;
  check_coefficients(base, f);
  std::size_t n = f.n();
  auto rv = root_vars(n, names);
  RingPtr ring = extend_ring(base.ring, rv);
  auto eta = variables(ring, rv);
  auto sq = squares(eta);
  std::vector<MPoly> gens = base.generators;
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(in(ring, f.coeff(i)) - elementary_symmetric(i, sq).scaled(sign(i)));
  SplitRing r;
  r.kind = SplitKind::Signed;
  r.n = static_cast<int>(n);
  r.base = base;
  r.result = IdealPresentation(ring, gens);
  for (const auto& v : rv) r.roots.push_back(v.name);
  r.added = r.roots;
  r.group = "hyperoctahedral W_" + std::to_string(n);
  return r;
}

/// Adjoin eta_1..eta_n with a_{2i} = (-1)^i e_i(eta^2) for i < n and eta_1...eta_n = alpha.
inline SplitRing typeD_split(const IdealPresentation& base, const EvenMonicPoly& f, const SplitNames& names = {}) {
  using namespace split_detail;
  check_coefficients(base, f);
  check_alpha(base, f);
  std::size_t n = f.n();
  auto rv = root_vars(n, names);
  RingPtr ring = extend_ring(base.ring, rv);
  auto eta = variables(ring, rv);
  auto sq = squares(eta);
  std::vector<MPoly> gens = base.generators;
  for (std::size_t i = 1; i < n; ++i)
    gens.push_back(in(ring, f.coeff(i)) - elementary_symmetric(i, sq).scaled(sign(i)));
  gens.push_back(product(eta) - in(ring, *f.alpha));
  SplitRing r;
  r.kind = SplitKind::D;
  r.n = static_cast<int>(n);
  r.base = base;
  r.result = IdealPresentation(ring, gens);
  for (const auto& v : rv) r.roots.push_back(v.name);
  r.added = r.roots;
  r.group = "demihyperoctahedral (even sign changes) in W_" + std::to_string(n);
  return r;
}

namespace split_detail {

// Shared body of the two factorization rings: adjoin b_1..b_p and the h coefficients
// and equate f(u) = (-1)^p g(u) g(-u) h(u) with g = u^p + b_1 u^{p-1} + ... + b_p.
inline SplitRing factorization(const IdealPresentation& base, const EvenMonicPoly& f, int p, int q, bool typeD,
                               const SplitNames& names) {
  check_coefficients(base, f);
  if (p < 0 || q < 0 || static_cast<std::size_t>(p + q) != f.n())
    throw std::invalid_argument("factorization ring needs p + q = n");
  if (typeD) check_alpha(base, f);
  int rw = names.root_weight;
  std::vector<Variable> nv;
  for (int i = 1; i <= p; ++i) nv.push_back({names.b + std::to_string(i), i * rw});
  int last_c = typeD ? q - 1 : q;
  for (int i = 1; i <= last_c; ++i) nv.push_back({names.c + std::to_string(2 * i), 2 * i * rw});
  bool has_beta = typeD && q > 0;
  if (has_beta) nv.push_back({names.beta, q * rw});
  RingPtr ring = extend_ring(base.ring, nv);
  RingPtr uring = extend_ring(ring, {{"__u", 1}});
  std::size_t ui = uring->size() - 1;
  MPoly u = MPoly::variable(uring, ui);

  std::vector<MPoly> b;
  for (int i = 1; i <= p; ++i) b.push_back(MPoly::variable(uring, names.b + std::to_string(i)));
  MPoly g = MPoly(0), gm = MPoly(0);
  for (int i = 0; i <= p; ++i) {
    MPoly bi = i == 0 ? MPoly(1) : b[static_cast<std::size_t>(i - 1)];
    g = g + bi * u.pow(static_cast<unsigned>(p - i));
    gm = gm + (bi * u.pow(static_cast<unsigned>(p - i))).scaled(sign(static_cast<std::size_t>(p - i)));
  }
  MPoly h = MPoly(0);
  for (int i = 0; i <= std::max(last_c, 0); ++i) {
    MPoly ci = i == 0 ? MPoly(1) : MPoly::variable(uring, names.c + std::to_string(2 * i));
    h = h + ci * u.pow(static_cast<unsigned>(2 * (q - i)));
  }
  MPoly beta = has_beta ? MPoly::variable(uring, names.beta) : MPoly(1);
  if (has_beta) h = h + (beta * beta).scaled(sign(static_cast<std::size_t>(q)));
  MPoly fu = MPoly(0);
  std::size_t n = f.n();
  for (std::size_t i = 0; i <= n; ++i) fu = fu + in(uring, f.coeff(i)) * u.pow(static_cast<unsigned>(2 * (n - i)));

  MPoly diff = fu - (g * gm * h).scaled(sign(static_cast<std::size_t>(p)));
  std::vector<MPoly> gens = base.generators;
  for (auto& c : u_coefficients(diff.lifted(uring), ui, ring))
    if (!c.is_zero()) gens.push_back(c);
  if (typeD) {
    MPoly bp = p == 0 ? MPoly(1) : MPoly::variable(ring, names.b + std::to_string(p));
    MPoly bt = has_beta ? MPoly::variable(ring, names.beta) : MPoly(1);
    gens.push_back(in(ring, *f.alpha) - (bp * bt).scaled(sign(static_cast<std::size_t>(p))));
  }
  SplitRing r;
  r.kind = typeD ? SplitKind::DFact : SplitKind::BFact;
  r.n = static_cast<int>(n);
  r.p = p;
  r.q = q;
  r.base = base;
  r.result = IdealPresentation(ring, gens);
  for (const auto& v : nv) r.added.push_back(v.name);
  r.group = typeD ? "S_" + std::to_string(p) + " x D_" + std::to_string(q) + " parabolic"
                  : "S_" + std::to_string(p) + " x W_" + std::to_string(q) + " parabolic";
  return r;
}

}  // namespace split_detail

/// f = (-1)^p g(u) g(-u) h(u), h = u^{2q} + c_2 u^{2q-2} + ... + c_{2q}.
inline SplitRing signed_fact(const IdealPresentation& base, const EvenMonicPoly& f, int p, int q,
                             const SplitNames& names = {}) {
  return split_detail::factorization(base, f, p, q, false, names);
}

/// As signed_fact with h = u^{2q} + ... + c_{2q-2} u^2 + (-1)^q beta^2 and alpha = (-1)^p b_p beta.
/// For q = 0 there is no beta and the relation reads alpha = (-1)^n b_n.
inline SplitRing typeD_fact(const IdealPresentation& base, const EvenMonicPoly& f, int p, int q,
                            const SplitNames& names = {}) {
  return split_detail::factorization(base, f, p, q, true, names);
}

/// Roots of a monic polynomial in u^m: a_{mi} = (-1)^i e_i(eta^m) for i < n and (eta_1...eta_n)^{m/p} = alpha.
/// coeffs[i - 1] = a_{mi}. Without alpha, p must be 1 and alpha = (-1)^n a_{mn}.
inline SplitRing generalized_split(const IdealPresentation& base, const std::vector<MPoly>& coeffs,
                                   std::optional<MPoly> alpha, int m, int p, const SplitNames& names = {}) {
  using namespace split_detail;
  if (m < 1 || p < 1 || m % p != 0) throw std::invalid_argument("generalized_split: p must divide m");
  std::size_t n = coeffs.size();
  if (n == 0) throw std::invalid_argument("generalized_split: empty polynomial");
  if (!alpha) {
    if (p != 1) throw std::invalid_argument("generalized_split: alpha required when p > 1");
    alpha = coeffs.back().scaled(sign(n));
  }
  auto rv = root_vars(n, names);
  RingPtr ring = extend_ring(base.ring, rv);
  auto eta = variables(ring, rv);
  std::vector<MPoly> pw;
  for (const auto& e : eta) pw.push_back(e.pow(static_cast<unsigned>(m)));
  std::vector<MPoly> gens = base.generators;
  for (std::size_t i = 1; i < n; ++i) gens.push_back(in(ring, coeffs[i - 1]) - elementary_symmetric(i, pw).scaled(sign(i)));
  gens.push_back(product(eta).pow(static_cast<unsigned>(m / p)) - in(ring, *alpha));
  SplitRing r;
  r.kind = m == 1 ? SplitKind::A : SplitKind::Generalized;
  r.n = static_cast<int>(n);
  r.m = m;
  r.mp = p;
  r.base = base;
  r.result = IdealPresentation(ring, gens);
  for (const auto& v : rv) r.roots.push_back(v.name);
  r.added = r.roots;
  r.group = m == 1 ? "symmetric S_" + std::to_string(n)
                   : "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  return r;
}

/// Type A splitting ring of u^n + c_1 u^{n-1} + ... + c_n.
inline SplitRing split_ring(const IdealPresentation& base, const std::vector<MPoly>& coeffs,
                            const SplitNames& names = {}) {
  return generalized_split(base, coeffs, std::nullopt, 1, 1, names);
}

/// Universal base ring Q[a_2, ..., a_2n] (deg a_2i = 2i), optionally with alpha (deg n)
/// and the relation alpha^2 = (-1)^n a_2n.
struct UniversalEven {
  IdealPresentation base;
  EvenMonicPoly f;
};

inline UniversalEven universal_even(std::size_t n, bool with_alpha, int weight_scale = 1) {
  std::vector<Variable> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back({"a" + std::to_string(2 * i), static_cast<int>(2 * i) * weight_scale});
  if (with_alpha) v.push_back({"alpha", static_cast<int>(n) * weight_scale});
  RingPtr ring = make_ring(v);
  UniversalEven u;
  for (std::size_t i = 1; i <= n; ++i) u.f.a.push_back(MPoly::variable(ring, "a" + std::to_string(2 * i)));
  std::vector<MPoly> gens;
  if (with_alpha) {
    MPoly al = MPoly::variable(ring, "alpha");
    u.f.alpha = al;
    gens.push_back(al * al - u.f.a.back().scaled(split_detail::sign(n)));
  }
  u.base = IdealPresentation(ring, gens);
  return u;
}

/// f = u^{2n} over Q, with alpha = 0.
inline UniversalEven power_poly(std::size_t n) {
  UniversalEven u;
  RingPtr ring = make_ring({});
  u.base = IdealPresentation(ring, {});
  for (std::size_t i = 1; i <= n; ++i) u.f.a.push_back(MPoly::constant(ring, Rat(0)));
  u.f.alpha = MPoly::constant(ring, Rat(0));
  return u;
}

/// Vector-space dimension of the fiber over the origin of the base.
inline std::optional<unsigned long long> fiber_dimension(const SplitRing& r, const GroebnerOptions& opts = {}) {
  std::vector<MPoly> zero;
  for (std::size_t i = 0; i < r.base.ring->size(); ++i) zero.push_back(MPoly::variable(r.result.ring, r.base.ring->name(i)));
  return quotient_dimension(r.result.with(zero), opts);
}

}  // namespace perisplit
