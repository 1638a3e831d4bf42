#pragma once

#include <map>
#include <string>

#include "perisplit/groebner/buchberger.hpp"
#include "perisplit/splitrings/construct.hpp"

namespace perisplit {

struct CompatibilityReport {
  bool equal = false;
  IdealPresentation iterated;  // after renaming xi_i -> eta_i
  IdealPresentation direct;    // direct splitting ring plus b, c, beta written in the roots
};

/// Factorization ring of f, then the type A split of g and the signed (or type D) split of h,
/// compared with the direct splitting ring of f. Base is the universal ring of degree n.
inline CompatibilityReport factorization_compatibility(int n, int p, bool typeD, const GroebnerOptions& opts = {}) {
  int q = n - p;
  auto u = universal_even(static_cast<std::size_t>(n), typeD);
  SplitRing fact = typeD ? typeD_fact(u.base, u.f, p, q) : signed_fact(u.base, u.f, p, q);
  IdealPresentation cur = fact.result;

  SplitNames xi;
  xi.root = "xi";
  if (p > 0) {
    std::vector<MPoly> bs;
    for (int i = 1; i <= p; ++i) bs.push_back(MPoly::variable(cur.ring, "b" + std::to_string(i)));
    cur = split_ring(cur, bs, xi).result;
  }
  if (q > 0) {
    EvenMonicPoly h;
    for (int i = 1; i <= (typeD ? q - 1 : q); ++i) h.a.push_back(MPoly::variable(cur.ring, "c" + std::to_string(2 * i)));
    xi.first_root = p + 1;
    if (typeD) {
      MPoly beta = MPoly::variable(cur.ring, "beta");
      h.a.push_back((beta * beta).scaled(Rat(q % 2 ? -1 : 1)));
      h.alpha = beta;
      cur = typeD_split(cur, h, xi).result;
    } else {
      cur = signed_split(cur, h, xi).result;
    }
  }

  std::vector<Variable> vars = cur.ring->vars();
  std::map<std::string, std::string> rename;
  for (auto& v : vars)
    if (v.name.rfind("xi", 0) == 0) {
      std::string to = "eta" + v.name.substr(2);
      rename[v.name] = to;
      v.name = to;
    }
  RingPtr ring = make_ring(vars);
  std::vector<MPoly> it;
  for (const auto& g : cur.generators) it.push_back(g.renamed(ring, rename));

  SplitRing d = typeD ? typeD_split(u.base, u.f) : signed_split(u.base, u.f);
  std::vector<MPoly> dir;
  for (const auto& g : d.result.generators) dir.push_back(g.rebase(ring));
  std::vector<MPoly> first, second;
  for (int i = 1; i <= p; ++i) first.push_back(MPoly::variable(ring, "eta" + std::to_string(i)));
  for (int i = p + 1; i <= n; ++i) {
    MPoly e = MPoly::variable(ring, "eta" + std::to_string(i));
    second.push_back(e);
  }
  for (int i = 1; i <= p; ++i)
    dir.push_back(MPoly::variable(ring, "b" + std::to_string(i)) -
                  elementary_symmetric(static_cast<std::size_t>(i), first).scaled(Rat(i % 2 ? -1 : 1)));
  std::vector<MPoly> sq;
  for (const auto& e : second) sq.push_back(e * e);
  for (int i = 1; i <= (typeD ? q - 1 : q); ++i)
    dir.push_back(MPoly::variable(ring, "c" + std::to_string(2 * i)) -
                  elementary_symmetric(static_cast<std::size_t>(i), sq).scaled(Rat(i % 2 ? -1 : 1)));
  if (typeD && q > 0) {
    MPoly prod(1);
    for (const auto& e : second) prod = prod * e;
    dir.push_back(MPoly::variable(ring, "beta") - prod);
  }

  CompatibilityReport rep;
  rep.iterated = IdealPresentation(ring, it);
  rep.direct = IdealPresentation(ring, dir);
  rep.equal = ideals_equal(rep.iterated, rep.direct, opts);
  return rep;
}

}  // namespace perisplit
