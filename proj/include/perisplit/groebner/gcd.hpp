#pragma once

#include <stdexcept>

#include "perisplit/groebner/buchberger.hpp"

namespace perisplit {

/// a / b when b divides a exactly; throws otherwise. Uses grlex leading terms.
inline MPoly exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  RingPtr ring = a.ring() ? a.ring() : b.ring();
  MPoly r = a.ring() ? a : a.lifted(ring);
  MPoly bb = b.ring() ? b.rebase(ring) : b.lifted(ring);
  MPoly q = MPoly::constant(ring, Rat(0));
  const Term& lb = bb.leading_term();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    Exponents e = lr.exps;
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] -= lb.exps[i];
      if (e[i] < 0) throw std::invalid_argument("exact_divide: not divisible");
    }
    MPoly t = MPoly::monomial(ring, e, lr.coeff / lb.coeff);
    q += t;
    r -= t * bb;
  }
  return q;
}

/// gcd over Q, normalized to leading coefficient 1, via lcm = (a) cap (b).
inline MPoly polynomial_gcd(const MPoly& a, const MPoly& b, const GroebnerOptions& opts = {}) {
  if (a.is_zero()) return b.is_zero() ? b : b.scaled(b.leading_term().coeff.inverse());
  if (b.is_zero()) return a.scaled(a.leading_term().coeff.inverse());
  RingPtr base = a.ring() ? a.ring() : b.ring();
  if (!base || a.is_constant() || b.is_constant()) return MPoly(1).lifted(base);
  RingPtr ring = extend_ring(base, {{"__t", 1}});
  MPoly t = MPoly::variable(ring, ring->size() - 1);
  MPoly ar = a.rebase(ring), br = b.rebase(ring);
  IdealPresentation both(ring, {t * ar, (MPoly(1) - t) * br});
  IdealPresentation inter = eliminate(both, {"__t"}, opts);
  if (inter.generators.size() != 1) throw std::logic_error("polynomial_gcd: intersection is not principal");
  MPoly l = inter.generators[0].rebase(base);
  MPoly g = exact_divide(a.rebase(base) * b.rebase(base), l);
  return g.scaled(g.leading_term().coeff.inverse());
}

/// True when no square of a nonconstant polynomial divides p: gcd(p, all partials) is constant.
inline bool is_squarefree(const MPoly& p, const GroebnerOptions& opts = {}) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  MPoly g = p;
  for (std::size_t i = 0; i < p.nvars() && !g.is_constant(); ++i) {
    MPoly d = p.derivative(i);
    if (!d.is_zero()) g = polynomial_gcd(g, d, opts);
  }
  return g.is_constant();
}

}  // namespace perisplit
