#pragma once

#include <stdexcept>
#include <vector>

#include "perisplit/groebner/buchberger.hpp"
#include "perisplit/splitrings/construct.hpp"

namespace perisplit {

/// eta_i -> signs[i] * eta_{perm[i]}.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> signs;

  static SignedPermutation identity(std::size_t n) {
    SignedPermutation g;
    for (std::size_t i = 0; i < n; ++i) g.perm.push_back(i);
    g.signs.assign(n, 1);
    return g;
  }
  int sign_product() const {
    int s = 1;
    for (int x : signs) s *= x;
    return s;
  }
};

/// Images of every variable of a ring under a substitution.
struct RingMap {
  RingPtr ring;
  std::vector<MPoly> images;

  MPoly apply(const MPoly& f) const { return f.rebase(ring).substitute(images); }
};

/// Substitution of a signed permutation of the roots; base variables are fixed.
inline RingMap weyl_action(const SplitRing& r, const SignedPermutation& g) {
  std::size_t n = r.roots.size();
  if (n == 0) throw std::invalid_argument("weyl_action: ring has no root variables");
  if (g.perm.size() != n || g.signs.size() != n) throw std::invalid_argument("weyl_action: wrong element size");
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.perm[i] >= n || seen[g.perm[i]]) throw std::invalid_argument("weyl_action: not a permutation");
    seen[g.perm[i]] = true;
    if (g.signs[i] != 1 && g.signs[i] != -1) throw std::invalid_argument("weyl_action: signs must be +1 or -1");
  }
  bool any_minus = g.sign_product() < 0;
  for (int s : g.signs)
    if (s < 0) any_minus = true;
  bool even = g.sign_product() > 0;
  bool signs_ok = false;
  switch (r.kind) {
    case SplitKind::Signed: signs_ok = true; break;
    case SplitKind::D: signs_ok = even; break;
    case SplitKind::A: signs_ok = !any_minus; break;
    case SplitKind::Generalized:
      if (r.m == 2) signs_ok = r.mp == 1 || even;
      else signs_ok = !any_minus;
      break;
    default: break;
  }
  if (!signs_ok) throw std::invalid_argument("weyl_action: element is not in the group of " + kind_name(r.kind));

  RingMap map{r.result.ring, {}};
  for (std::size_t i = 0; i < r.result.ring->size(); ++i) map.images.push_back(MPoly::variable(r.result.ring, i));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t from = r.result.ring->index(r.roots[i]);
    MPoly to = MPoly::variable(r.result.ring, r.roots[g.perm[i]]);
    map.images[from] = g.signs[i] < 0 ? -to : to;
  }
  return map;
}

/// Generators of the acting group: adjacent transpositions plus the sign changes it allows.
inline std::vector<SignedPermutation> group_generators(const SplitRing& r) {
  std::size_t n = r.roots.size();
  std::vector<SignedPermutation> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto g = SignedPermutation::identity(n);
    std::swap(g.perm[i], g.perm[i + 1]);
    out.push_back(g);
  }
  bool all_signs = r.kind == SplitKind::Signed || (r.kind == SplitKind::Generalized && r.m == 2 && r.mp == 1);
  bool even_signs = r.kind == SplitKind::D || (r.kind == SplitKind::Generalized && r.m == 2 && r.mp == 2);
  if (all_signs && n >= 1) {
    auto g = SignedPermutation::identity(n);
    g.signs[0] = -1;
    out.push_back(g);
  }
  if (even_signs && n >= 2) {
    auto g = SignedPermutation::identity(n);
    std::swap(g.perm[0], g.perm[1]);
    g.signs[0] = g.signs[1] = -1;
    out.push_back(g);
  }
  return out;
}

/// Every generator's image reduces to zero modulo the result ideal.
inline bool preserves_ideal(const SplitRing& r, const RingMap& map, const GroebnerOptions& opts = {}) {
  GroebnerBasis gb = groebner_basis(r.result, MonomialOrder::grevlex(), opts);
  for (const auto& g : r.result.generators)
    if (!gb.contains(map.apply(g))) return false;
  return true;
}

}  // namespace perisplit
