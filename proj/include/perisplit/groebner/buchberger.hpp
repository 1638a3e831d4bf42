#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perisplit/exactcore/errors.hpp"
#include "perisplit/exactcore/mpoly.hpp"
#include "perisplit/groebner/ideal.hpp"
#include "perisplit/groebner/order.hpp"

namespace perisplit {

/// Step limit for Buchberger runs; PERISPLIT_BUDGET overrides the default.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("PERISPLIT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000000;
}

struct GroebnerOptions {
  std::size_t budget = default_budget();
  // Skip S-pairs above this weighted degree (homogeneous input only).
  long max_degree = -1;
};

namespace gb_detail {

using Poly = std::vector<Term>;

inline std::uint64_t support_mask(const Exponents& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) m |= std::uint64_t(1) << (i % 64);
  return m;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

struct Ctx {
  MonomialOrder order;
  std::vector<int> w;
  int cmp(const Exponents& a, const Exponents& b) const { return order.compare(a, b, w); }
};

struct Greater {
  const Ctx* ctx;
  bool operator()(const Exponents& a, const Exponents& b) const { return ctx->cmp(a, b) > 0; }
};

class Reducer {
 public:
  void add(const Poly* p) {
    polys_.push_back(p);
    masks_.push_back(support_mask(p->front().exps));
  }
  const Poly* find(const Exponents& e) const {
    std::uint64_t m = support_mask(e);
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if ((masks_[i] & ~m) == 0 && divides(polys_[i]->front().exps, e)) return polys_[i];
    return nullptr;
  }
  bool empty() const { return polys_.empty(); }

 private:
  std::vector<const Poly*> polys_;
  std::vector<std::uint64_t> masks_;
};

// Full reduction; `raw` may contain repeated monomials.
inline Poly reduce(const std::vector<Term>& raw, const Reducer& red, const Ctx& ctx) {
  std::map<Exponents, Rat, Greater> work(Greater{&ctx});
  for (const auto& t : raw) {
    auto [it, fresh] = work.try_emplace(t.exps, t.coeff);
    if (!fresh) {
      it->second += t.coeff;
      if (it->second.is_zero()) work.erase(it);
    } else if (it->second.is_zero()) {
      work.erase(it);
    }
  }
  Poly out;
  Exponents e;
  while (!work.empty()) {
    auto it = work.begin();
    const Poly* g = red.find(it->first);
    if (!g) {
      out.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Rat f = it->second / g->front().coeff;
    Exponents shift = it->first;
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= g->front().exps[i];
    work.erase(it);
    for (std::size_t k = 1; k < g->size(); ++k) {
      const Term& t = (*g)[k];
      e = t.exps;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
      Rat v = f * t.coeff;
      auto [jt, fresh] = work.try_emplace(e, -v);
      if (!fresh) {
        jt->second -= v;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

inline void make_monic(Poly& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  Rat inv = p.front().coeff.inverse();
  for (auto& t : p) t.coeff *= inv;
}

inline Poly from_mpoly(const MPoly& f, const Ctx& ctx) {
  Poly p(f.terms().begin(), f.terms().end());
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ctx.cmp(a.exps, b.exps) > 0; });
  return p;
}

inline std::vector<Term> shifted(const Poly& p, const Exponents& by, const Rat& c) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p) {
    Exponents e = t.exps;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += by[i];
    out.push_back({std::move(e), t.coeff * c});
  }
  return out;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
  long deg;
};

}  // namespace gb_detail

/// Reduced Groebner basis with respect to a fixed monomial order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<gb_detail::Poly> polys, bool truncated, long bound)
      : ring_(std::move(ring)), ctx_{std::move(order), ring_->weights()}, polys_(std::move(polys)),
        truncated_(truncated), bound_(bound) {
    for (const auto& p : polys_) reducer_.add(&p);
  }
  GroebnerBasis(const GroebnerBasis& o)
      : ring_(o.ring_), ctx_(o.ctx_), polys_(o.polys_), truncated_(o.truncated_), bound_(o.bound_) {
    for (const auto& p : polys_) reducer_.add(&p);
  }
  GroebnerBasis& operator=(const GroebnerBasis&) = delete;

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ctx_.order; }
  /// True when S-pairs above degree_bound() were skipped.
  bool truncated() const { return truncated_; }
  long degree_bound() const { return bound_; }
  std::size_t size() const { return polys_.size(); }
  bool is_unit() const {
    return polys_.size() == 1 && std::all_of(polys_[0].front().exps.begin(), polys_[0].front().exps.end(),
                                             [](int x) { return x == 0; });
  }

  std::vector<MPoly> polynomials() const {
    std::vector<MPoly> out;
    for (const auto& p : polys_) out.push_back(MPoly::from_terms(ring_, p));
    return out;
  }
  std::vector<Exponents> leading_exponents() const {
    std::vector<Exponents> out;
    for (const auto& p : polys_) out.push_back(p.front().exps);
    return out;
  }
  std::vector<std::string> serialized() const {
    std::vector<std::string> out;
    for (const auto& p : polys_) out.push_back(MPoly::from_terms(ring_, p).to_string());
    return out;
  }

  MPoly normal_form(const MPoly& f) const {
    MPoly g = f.ring() ? f.rebase(ring_) : f.lifted(ring_);
    return MPoly::from_terms(ring_, gb_detail::reduce(g.terms(), reducer_, ctx_));
  }
  /// Normal form as terms sorted in this basis' order.
  gb_detail::Poly normal_form_terms(const std::vector<Term>& raw) const { return gb_detail::reduce(raw, reducer_, ctx_); }
  bool contains(const MPoly& f) const { return normal_form(f).is_zero(); }
  bool is_standard(const Exponents& e) const { return reducer_.find(e) == nullptr; }
  int compare(const Exponents& a, const Exponents& b) const { return ctx_.cmp(a, b); }

 private:
  RingPtr ring_;
  gb_detail::Ctx ctx_;
  std::vector<gb_detail::Poly> polys_;
  gb_detail::Reducer reducer_;
  bool truncated_;
  long bound_;
};

/// Buchberger's algorithm, Gebauer-Moeller pair pruning, normal selection strategy.
inline GroebnerBasis groebner_basis(const IdealPresentation& ideal, const MonomialOrder& order,
                                    const GroebnerOptions& opts = {}) {
  using namespace gb_detail;
  const RingPtr& ring = ideal.ring;
  Ctx ctx{order, ring->weights()};
  if (order.kind() == MonomialOrder::Kind::Elimination && order.killed().size() != ring->size())
    throw std::invalid_argument("groebner_basis: elimination mask has the wrong length");

  std::vector<Poly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::size_t steps = 0;
  bool skipped = false;

  auto lt = [&](std::size_t i) -> const Exponents& { return polys[i].front().exps; };
  auto pair_of = [&](std::size_t i, std::size_t j) {
    Exponents l = lcm(lt(i), lt(j));
    long d = weighted_degree(l, ctx.w);
    return Pair{i, j, std::move(l), d};
  };

  auto update = [&](std::size_t h) {
    std::vector<Pair> c, d;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) c.push_back(pair_of(h, g));
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = coprime(lt(h), lt(p.j));
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (divides(c[m].lcm, p.lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (divides(d[m].lcm, p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = divides(lt(h), p.lcm) && lcm(lt(p.i), lt(h)) != p.lcm && lcm(lt(p.j), lt(h)) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!coprime(lt(p.i), lt(p.j))) next.push_back(std::move(p));
    pairs = std::move(next);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && divides(lt(h), lt(g))) active[g] = false;
    active.push_back(true);
  };

  auto reducer_now = [&]() {
    Reducer r;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) r.add(&polys[i]);
    return r;
  };

  std::vector<MPoly> gens = ideal.generators;
  std::sort(gens.begin(), gens.end(), [&](const MPoly& a, const MPoly& b) {
    return weighted_degree(a.leading_term().exps, ctx.w) < weighted_degree(b.leading_term().exps, ctx.w);
  });
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Poly p = reduce(from_mpoly(g.ring() ? g.rebase(ring) : g.lifted(ring), ctx), reducer_now(), ctx);
    if (p.empty()) continue;
    make_monic(p);
    polys.push_back(std::move(p));
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.deg != b.deg ? a.deg < b.deg : ctx.cmp(a.lcm, b.lcm) < 0) best = k;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (opts.max_degree >= 0 && p.deg > opts.max_degree) {
      skipped = true;
      continue;
    }
    if (++steps > opts.budget)
      throw BudgetExceeded("groebner_basis: step budget of " + std::to_string(opts.budget) + " exceeded");
    const Poly& f = polys[p.i];
    const Poly& g = polys[p.j];
    Exponents sf = p.lcm, sg = p.lcm;
    for (std::size_t i = 0; i < sf.size(); ++i) {
      sf[i] -= f.front().exps[i];
      sg[i] -= g.front().exps[i];
    }
    std::vector<Term> s = shifted(f, sf, f.front().coeff.inverse());
    auto s2 = shifted(g, sg, -g.front().coeff.inverse());
    s.insert(s.end(), s2.begin(), s2.end());
    Poly h = reduce(s, reducer_now(), ctx);
    if (h.empty()) continue;
    make_monic(h);
    polys.push_back(std::move(h));
    update(polys.size() - 1);
  }

  // minimal basis, then tail reduction
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!active[i]) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < polys.size() && !redundant; ++j)
      if (j != i && active[j] && divides(lt(j), lt(i)) && (lt(j) != lt(i) || j < i)) redundant = true;
    if (!redundant) minimal.push_back(polys[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Reducer r;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) r.add(&minimal[j]);
    Poly tail(minimal[i].begin() + 1, minimal[i].end());
    Poly t = reduce(tail, r, ctx);
    Poly out{minimal[i].front()};
    out.insert(out.end(), t.begin(), t.end());
    make_monic(out);
    reduced.push_back(std::move(out));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return ctx.cmp(a.front().exps, b.front().exps) < 0; });
  return GroebnerBasis(ring, order, std::move(reduced), skipped, opts.max_degree);
}

/// I intersected with the subring on the variables not in `kill`.
inline IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::string>& kill,
                                   const GroebnerOptions& opts = {}) {
  std::vector<bool> mask(ideal.ring->size(), false);
  for (const auto& k : kill) mask[ideal.ring->index(k)] = true;
  GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::elimination(mask), opts);
  std::vector<Variable> keep;
  for (std::size_t i = 0; i < ideal.ring->size(); ++i)
    if (!mask[i]) keep.push_back(ideal.ring->var(i));
  RingPtr sub = make_ring(keep);
  std::vector<MPoly> out;
  for (const auto& p : gb.polynomials()) {
    bool clean = true;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i] && p.involves(i)) clean = false;
    if (clean) out.push_back(p.rebase(sub));
  }
  return IdealPresentation(sub, out);
}

/// Every generator of `b` reduces to zero modulo a basis of `a`.
inline bool ideal_contains(const IdealPresentation& a, const IdealPresentation& b, const GroebnerOptions& opts = {}) {
  GroebnerBasis gb = groebner_basis(a, MonomialOrder::grevlex(), opts);
  for (const auto& g : b.generators)
    if (!gb.contains(g.rebase(a.ring))) return false;
  return true;
}

inline bool ideals_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerOptions& opts = {}) {
  return ideal_contains(a, b, opts) && ideal_contains(b, a, opts);
}

/// Dimension of ambient/I as a vector space; nullopt when infinite.
inline std::optional<unsigned long long> quotient_dimension(const GroebnerBasis& gb) {
  std::size_t n = gb.ring()->size();
  auto lts = gb.leading_exponents();
  if (gb.is_unit()) return 0ULL;
  std::vector<int> bound(n, -1);
  for (const auto& e : lts) {
    int nz = 0;
    std::size_t v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) {
        ++nz;
        v = i;
      }
    if (nz == 1 && (bound[v] < 0 || e[v] < bound[v])) bound[v] = e[v];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  unsigned long long count = 0;
  Exponents cur(n, 0);
  // depth-first over the box, pruning as soon as a prefix is divisible
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      cur[i] = k;
      bool dead = false;
      for (const auto& e : lts)
        if (gb_detail::divides(e, cur)) {
          dead = true;
          break;
        }
      if (dead) break;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  return count;
}

inline std::optional<unsigned long long> quotient_dimension(const IdealPresentation& ideal,
                                                            const GroebnerOptions& opts = {}) {
  return quotient_dimension(groebner_basis(ideal, MonomialOrder::grevlex(), opts));
}

/// Standard monomials of weighted degree 0..max_degree (all weights >= 1).
inline std::vector<std::vector<Exponents>> standard_monomials_by_degree(const GroebnerBasis& gb, int max_degree) {
  std::size_t n = gb.ring()->size();
  auto w = gb.ring()->weights();
  for (int x : w)
    if (x < 1) throw std::invalid_argument("standard_monomials_by_degree: weights must be positive");
  std::vector<std::vector<Exponents>> out(static_cast<std::size_t>(max_degree) + 1);
  if (gb.is_unit()) return out;
  out[0].push_back(Exponents(n, 0));
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Exponents> cand;
    for (std::size_t v = 0; v < n; ++v) {
      int from = d - w[v];
      if (from < 0) continue;
      for (const auto& m : out[static_cast<std::size_t>(from)]) {
        // only extend by variables at or after the last used one to avoid duplicates
        bool ok = true;
        for (std::size_t u = v + 1; u < n; ++u)
          if (m[u]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Exponents e = m;
        ++e[v];
        if (gb.is_standard(e)) cand.push_back(std::move(e));
      }
    }
    std::sort(cand.begin(), cand.end(), [&](const Exponents& a, const Exponents& b) { return gb.compare(a, b) > 0; });
    out[static_cast<std::size_t>(d)] = std::move(cand);
  }
  return out;
}

}  // namespace perisplit
