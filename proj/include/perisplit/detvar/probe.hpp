#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/detvar/chi.hpp"
#include "perisplit/splitrings/discriminant.hpp"

namespace perisplit {

enum class ProbeFamily { BV0, BVA, DV0, DDetG };

inline std::string family_name(ProbeFamily f) {
  switch (f) {
    case ProbeFamily::BV0: return "B-case-V0";
    case ProbeFamily::BVA: return "B-case-VA";
    case ProbeFamily::DV0: return "D-case-V0";
    case ProbeFamily::DDetG: return "D-case-detg";
  }
  return "?";
}

inline ProbeFamily parse_family(const std::string& s) {
  for (auto f : {ProbeFamily::BV0, ProbeFamily::BVA, ProbeFamily::DV0, ProbeFamily::DDetG})
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown probe family '" + s + "'");
}

/// A dual-number point (f, g) with everything the discriminant test needs.
struct ProbeResult {
  ProbeFamily family{};
  int n = 0;
  int r = 0;
  Matrix<DualRat> f;
  Matrix<DualRat> g;
  std::vector<DualRat> chibar;     // constant first
  std::optional<DualRat> phi;      // D families
  std::vector<DualRat> quartic;    // B-case-VA: charpoly of the 4 x 4 block, constant first
  std::string quantity;            // what value holds
  DualRat value;                   // the family's discriminant
  DualRat full;                    // Delta (B) or reduced Delta (D) of chibar
  DualRat delta;                   // Delta of chibar in every family
};

namespace probe_detail {

inline void put(Matrix<DualRat>& m, std::size_t at, const Matrix<DualRat>& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(at + i, at + j) = b(i, j);
}

// [[0, l], [-l, 0]]
inline Matrix<DualRat> rot(const DualRat& l) { return Matrix<DualRat>{{DualRat(0), l}, {-l, DualRat(0)}}; }

inline void check_lambdas(const std::vector<Rat>& lambda, bool avoid_one) {
  std::vector<Rat> seen;
  for (const auto& l : lambda) {
    if (l.is_zero()) throw std::invalid_argument("probe: lambda must be nonzero");
    if (avoid_one && (l * l).is_one()) throw std::invalid_argument("probe: lambda must avoid -1, 0, 1");
    if (std::find(seen.begin(), seen.end(), l * l) != seen.end())
      throw std::invalid_argument("probe: lambdas must be distinct up to sign");
    seen.push_back(l * l);
  }
}

}  // namespace probe_detail

/// Evaluate the discriminant on the tangent vectors at V(Delta) used to show that
/// V(Delta, dDelta) is small.  value must vanish at eps = 0 with nonzero slope.
/// pad is the size of the zero block (2r - n for B families, n - 2r for D-case-V0).
inline ProbeResult epsilon_probe(ProbeFamily family, const std::vector<Rat>& lambda, int pad = 1) {
  using namespace probe_detail;
  const DualRat eps = DualRat::eps(), one(1), zero(0);
  ProbeResult res;
  res.family = family;
  bool B = family == ProbeFamily::BV0 || family == ProbeFamily::BVA;
  check_lambdas(lambda, family == ProbeFamily::BVA);
  if (family == ProbeFamily::DDetG) pad = 0;
  if (pad < 0 || (B && pad < 1)) throw std::invalid_argument("probe: pad must be >= 1 (B) or >= 0 (D)");
  std::size_t L = lambda.size(), P = static_cast<std::size_t>(pad);
  // Size of the nondegenerate block.
  std::size_t m = 2 * L + (family == ProbeFamily::BVA ? 4 : 2);
  std::size_t N = m + P;
  res.n = static_cast<int>(N);
  res.r = B ? static_cast<int>(P + m / 2) : static_cast<int>(m / 2);
  res.f = Matrix<DualRat>(N, N);
  res.g = Matrix<DualRat>(N, N);
  // Trailing blocks: f = [[0, l], [-l, 0]] per lambda and g = I.
  std::size_t tail = P + m - 2 * L;
  auto rot_tail = [&] {
    for (std::size_t i = 0; i < L; ++i) put(res.f, tail + 2 * i, rot(DualRat(lambda[i])));
    for (std::size_t i = tail; i < N; ++i) res.g(i, i) = one;
  };
  switch (family) {
    case ProbeFamily::BV0:
      put(res.f, P, rot(one));
      res.g(P, P) = eps;
      res.g(P + 1, P + 1) = one;
      rot_tail();
      break;
    case ProbeFamily::BVA: {
      // f g on the first block is [[0, M], [N, 0]] with M = [[1,1],[1,eps]], N = [[-eps,-1],[-1,-1]].
      Matrix<DualRat> f4{{zero, zero, one, zero}, {zero, zero, zero, one}, {-one, zero, zero, zero}, {zero, -one, zero, zero}};
      Matrix<DualRat> g4{{eps, one, zero, zero}, {one, one, zero, zero}, {zero, zero, one, one}, {zero, zero, one, eps}};
      put(res.f, P, f4);
      put(res.g, P, g4);
      rot_tail();
      break;
    }
    case ProbeFamily::DV0: {
      // g block is J; f pairs i with r + i through mu = (eps, lambda_1, ...), so fg = diag(mu, -mu).
      std::size_t r = m / 2;
      std::vector<DualRat> mu{eps};
      for (const auto& l : lambda) mu.push_back(DualRat(l));
      Matrix<DualRat> phi(N, m);
      for (std::size_t i = 0; i < r; ++i) {
        res.f(P + i, P + r + i) = mu[i];
        res.f(P + r + i, P + i) = -mu[i];
        res.g(P + i, P + r + i) = res.g(P + r + i, P + i) = one;
      }
      for (std::size_t i = 0; i < m; ++i) phi(P + i, i) = one;
      res.phi = phi_invariant(phi, res.f);
      break;
    }
    case ProbeFamily::DDetG:
      // g = diag(0, 1, ..., 1) with det g = 0 and the Plucker coordinate moving as eps.
      put(res.f, 0, rot(one));
      res.g(1, 1) = one;
      rot_tail();
      res.phi = phi_from_plucker(std::vector<DualRat>{eps}, res.f, res.r);
      break;
  }
  res.chibar = chi_bar_coeffs(res.f, res.g, res.r);
  auto a = even_coefficients(res.chibar);
  res.delta = delta_of(a);
  if (B) {
    res.full = res.delta;
    if (family == ProbeFamily::BVA) {
      Matrix<DualRat> fg = res.f * res.g;
      std::vector<std::size_t> idx{P, P + 1, P + 2, P + 3};
      res.quartic = charpoly_coeffs(fg.submatrix(idx, idx));
      if (!res.quartic[1].is_zero() || !res.quartic[3].is_zero())
        throw InvariantViolation("quartic factor even", "odd coefficient in the quartic factor");
      const DualRat& b = res.quartic[2];
      const DualRat& c = res.quartic[0];
      res.value = (b * b - DualRat(4) * c) * c;
      res.quantity = "(b^2-4c)c of the quartic factor";
    } else {
      res.value = res.full;
      res.quantity = "Delta";
    }
  } else {
    res.full = reduced_delta_of(a, *res.phi);
    res.value = res.full;
    res.quantity = "reduced Delta";
  }
  return res;
}

inline ProbeResult epsilon_probe(const std::string& family, const std::vector<Rat>& lambda, int pad = 1) {
  return epsilon_probe(parse_family(family), lambda, pad);
}

}  // namespace perisplit
