#pragma once

#include <stdexcept>
#include <string>

#include "perisplit/groebner/hilbert.hpp"
#include "perisplit/splitrings/construct.hpp"

namespace perisplit {

/// The ring built from f = u^{2n} (alpha = 0) over Q, graded with roots of degree eta_weight.
inline SplitRing specialized_ring(SplitKind kind, int n, int p = 0, int eta_weight = 2) {
  if (n < 1) throw std::invalid_argument("cohomology_specialize: n must be positive");
  auto u = power_poly(static_cast<std::size_t>(n));
  SplitNames names;
  names.root_weight = eta_weight;
  switch (kind) {
    case SplitKind::Signed: return signed_split(u.base, u.f, names);
    case SplitKind::D: return typeD_split(u.base, u.f, names);
    case SplitKind::BFact:
    case SplitKind::DFact:
      if (p < 0 || p > n) throw std::invalid_argument("cohomology_specialize: need 0 <= p <= n");
      return kind == SplitKind::BFact ? signed_fact(u.base, u.f, p, n - p, names) : typeD_fact(u.base, u.f, p, n - p, names);
    default: throw std::invalid_argument("cohomology_specialize: kind " + kind_name(kind) + " has no specialization");
  }
}

/// Hilbert series of the specialized ring; with eta_weight = 2 it is the Poincare polynomial
/// of the corresponding isotropic flag variety or Grassmannian.
inline HilbertSeries cohomology_specialize(SplitKind kind, int n, int p = 0, int eta_weight = 2,
                                           const GroebnerOptions& opts = {}) {
  return hilbert_series(specialized_ring(kind, n, p, eta_weight).result, opts);
}

/// The polynomial itself; throws if the ring is not finite dimensional.
inline IntPoly poincare_polynomial(SplitKind kind, int n, int p = 0, int eta_weight = 2,
                                   const GroebnerOptions& opts = {}) {
  auto poly = cohomology_specialize(kind, n, p, eta_weight, opts).polynomial();
  if (!poly) throw InvariantViolation("finite rank", "specialized ring is not finite dimensional");
  return *poly;
}

}  // namespace perisplit
