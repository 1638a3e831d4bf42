#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/exactcore/errors.hpp"
#include "perisplit/groebner/betti.hpp"
#include "perisplit/jpw/partition.hpp"
#include "perisplit/splitrings/specialize.hpp"

namespace perisplit {

/// Which coordinate ring the Tor modules belong to.  They differ only when 2r <= n,
/// where O_Z is the part of O_Z' with b even.
enum class JpwRing { ZPrime, Z };

/// One summand of L_k: S_P V (or S_P V*) sitting in Tor_i at internal degree j.
struct LSummand {
  PartitionRep rep;
  int i = 0;
  int j = 0;
  int b = 0;
  Partition alpha;
};

inline void check_boundary_nr(int n, int r) {
  if (n < 1 || r < 0 || r > n) throw std::invalid_argument("jpw: need 0 <= r <= n and n >= 1");
}

inline void check_interior_nr(int n, int r) {
  check_boundary_nr(n, r);
  if (r == 0 || r == n)
    throw std::invalid_argument("jpw: needs 0 < r < n; for r = 0 or r = n the Grassmannian is a point "
                                "with an exterior algebra as coordinate ring");
}

namespace jpw_detail {

// L_0 for r = n (wedge of wedge^2 V, Frobenius (c-1 | c)) or r = 0 (wedge of Sym^2 V*, (c | c-1)).
inline std::vector<LSummand> boundary_summands(int n, int r) {
  bool skew = r == n;
  int top = skew ? n * (n - 1) / 2 : n * (n + 1) / 2;
  std::vector<LSummand> out;
  for (int j = 0; j <= top; ++j)
    for (const auto& c : strict_partitions(j)) {
      std::vector<int> arms, legs;
      for (int x : c) {
        arms.push_back(skew ? x - 1 : x);
        legs.push_back(skew ? x : x - 1);
      }
      Partition p = from_frobenius(arms, legs);
      if (static_cast<int>(p.size()) > n) continue;
      out.push_back({PartitionRep{p, !skew, 1}, j, j, 0, c});
    }
  return out;
}

}  // namespace jpw_detail

/// Column height a of the P(a, b, alpha) family: 2n - 2r + 1 when 2r > n, 2r - 1 otherwise.
inline int jpw_a(int n, int r) { return 2 * r > n ? 2 * n - 2 * r + 1 : 2 * r - 1; }

/// Step of k between consecutive b: n - r when 2r > n, r otherwise.
inline int jpw_step(int n, int r) { return 2 * r > n ? n - r : r; }

/// All summands of L_k with b >= 0, in b order then lex order of alpha.
inline std::vector<LSummand> L_all(int n, int r, JpwRing ring = JpwRing::ZPrime) {
  check_boundary_nr(n, r);
  if (r == 0 || r == n) return jpw_detail::boundary_summands(n, r);
  bool big = 2 * r > n;
  int a = jpw_a(n, r), step = jpw_step(n, r);
  std::vector<LSummand> out;
  // l(P) = a + b + alpha_1 for b > 0, so b <= n - a and alpha fits in a b x (n - a - b) box.
  for (int b = 0; b == 0 || a + b <= n; ++b) {
    if (!big && ring == JpwRing::Z && b % 2) continue;
    for (const auto& alpha : partitions_in_box(b, b == 0 ? 0 : n - a - b)) {
      Partition p = P_partition(a, b, alpha);
      if (static_cast<int>(p.size()) > n) continue;
      int size = partition_size(p), al = partition_size(alpha);
      if (size % 2) throw InvariantViolation("|P| even", "odd |P| for " + partition_to_string(p));
      int j = size / 2;
      int expect = big ? al + b * (n - r) + b * (b + 1) / 2 : al + b * r + b * (b - 1) / 2;
      if (j != expect || size != 2 * al + b * b + a * b)
        throw InvariantViolation("internal degree", "|P|/2 = " + std::to_string(j) + " but the column formula gives " +
                                                        std::to_string(expect));
      int i = big ? al + b * (b + 1) / 2 : al + b * (b - 1) / 2;
      if (j - i != b * step) throw InvariantViolation("internal degree", "j - i is not b times the step");
      out.push_back({PartitionRep{p, !big, 1}, i, j, b, alpha});
    }
  }
  return out;
}

/// L_k = sum over p of Tor_p(O_Z', C)_{p+k} as labelled summands.
inline std::vector<LSummand> L_module(int n, int r, int k, JpwRing ring = JpwRing::ZPrime) {
  std::vector<LSummand> out;
  for (auto& s : L_all(n, r, ring))
    if (s.j - s.i == k) out.push_back(std::move(s));
  return out;
}

/// Betti table of O_Z' (or O_Z) over S with Schur labels; every summand inside the box is present.
inline BettiTable betti_table_jpw(int n, int r, int max_i, int max_j, JpwRing ring = JpwRing::ZPrime) {
  BettiTable t(max_i, max_j);
  for (const auto& s : L_all(n, r, ring)) {
    mpz_class d = schur_dim(s.rep.parts, n);
    if (!d.fits_ulong_p()) throw std::overflow_error("betti_table_jpw: dimension too large");
    t.add(s.i, s.j, d.get_ui(), {s.rep});
  }
  return t;
}

/// Poincare polynomial of the isotropic (2r > n) or orthogonal (2r <= n) Grassmannian factor A.
inline IntPoly A_poincare(int n, int r) {
  check_interior_nr(n, r);
  return 2 * r > n ? poincare_polynomial(SplitKind::BFact, n - r, n - r) : poincare_polynomial(SplitKind::DFact, r, r);
}

/// Ranks of O_Ztilde-cal and O_Ztilde over O_Z'.
inline unsigned long long s0_rank(int n, int r) {
  check_interior_nr(n, r);
  int m = 2 * r > n ? n - r : r;
  unsigned long long f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<unsigned long long>(i);
  return (2 * r > n ? 1ULL << m : 1ULL << (m - 1)) * f;
}

inline unsigned long long s1_rank(int n, int r) {
  check_interior_nr(n, r);
  return 2 * r > n ? 1ULL << (n - r) : 1ULL << (r - 1);
}

struct MultiplicityReport {
  bool ok = true;
  std::string violation;
};

/// No label repeats inside an L_k, and Ltilde_k = sum_i A_{k-i} L_i shares no label with Ltilde_{k+1}.
inline MultiplicityReport multiplicity_free_check(int n, int r, int max_k) {
  check_interior_nr(n, r);
  IntPoly A = A_poincare(n, r);
  std::vector<std::set<PartitionRep>> L(static_cast<std::size_t>(max_k) + 2);
  MultiplicityReport rep;
  for (int k = 0; k <= max_k + 1; ++k)
    for (const auto& s : L_module(n, r, k)) {
      if (s.rep.multiplicity != 1 && rep.ok) {
        rep.ok = false;
        rep.violation = "multiplicity " + std::to_string(s.rep.multiplicity) + " in L_" + std::to_string(k);
      }
      if (!L[static_cast<std::size_t>(k)].insert(s.rep).second && rep.ok) {
        rep.ok = false;
        rep.violation = "L_" + std::to_string(k) + " repeats " + s.rep.to_string();
      }
    }
  if (!rep.ok) return rep;
  auto tilde = [&](int k) {
    std::set<PartitionRep> out;
    for (int i = 0; i <= k; ++i) {
      std::size_t d = static_cast<std::size_t>(k - i);
      if (d < A.size() && A[d] != 0) out.insert(L[static_cast<std::size_t>(i)].begin(), L[static_cast<std::size_t>(i)].end());
    }
    return out;
  };
  for (int k = 0; k < max_k; ++k) {
    auto x = tilde(k), y = tilde(k + 1);
    for (const auto& p : x)
      if (y.count(p)) {
        rep.ok = false;
        rep.violation = "Ltilde_" + std::to_string(k) + " and Ltilde_" + std::to_string(k + 1) + " share " + p.to_string();
        return rep;
      }
  }
  return rep;
}

/// series[k][j]: cohomological degree k, internal degree j.
using GradedSeries = std::map<int, std::map<int, unsigned long long>>;

struct CohomologyProfile {
  int n = 0;
  int r = 0;
  IntPoly A_poincare;
  GradedSeries E_series;    // from O_Z'
  GradedSeries H_series;    // A convolved with E_series
  GradedSeries E_series_Z;  // from O_Z; equals E_series when 2r > n
  GradedSeries H_series_Z;
  unsigned long long s0 = 0;
  unsigned long long s1 = 0;
  MultiplicityReport multiplicity;

  /// Total dimension of H^k summed over internal degrees.
  unsigned long long H_total(int k, bool z = false) const {
    const auto& s = z ? H_series_Z : H_series;
    unsigned long long t = 0;
    auto it = s.find(k);
    if (it != s.end())
      for (const auto& [j, d] : it->second) t += d;
    return t;
  }
};

namespace jpw_detail {

inline GradedSeries e_series(int n, int r, int max_k, int max_j, JpwRing ring) {
  GradedSeries e;
  for (const auto& s : L_all(n, r, ring)) {
    int k = s.j - s.i;
    if (k > max_k || s.j > max_j) continue;
    e[k][s.j] += schur_dim(s.rep.parts, n).get_ui();
  }
  return e;
}

inline GradedSeries convolve(const IntPoly& A, const GradedSeries& e, int max_k) {
  GradedSeries h;
  for (const auto& [k, row] : e)
    for (std::size_t d = 0; d < A.size(); ++d) {
      if (A[d] == 0 || k + static_cast<int>(d) > max_k) continue;
      for (const auto& [j, dim] : row) h[k + static_cast<int>(d)][j] += A[d].get_ui() * dim;
    }
  return h;
}

}  // namespace jpw_detail

/// H^*(X, O_X) = A (x) E with E^k = sum_p Tor_p^S(O, C)_{k+p}, computed for both O_Z' and O_Z.
inline CohomologyProfile cohomology_series(int n, int r, int max_k, int max_j) {
  check_interior_nr(n, r);
  CohomologyProfile c;
  c.n = n;
  c.r = r;
  c.A_poincare = A_poincare(n, r);
  c.s0 = s0_rank(n, r);
  c.s1 = s1_rank(n, r);
  mpz_class total = 0;
  for (const auto& x : c.A_poincare) total += x;
  if (total != static_cast<unsigned long>(c.s1)) throw InvariantViolation("rank s1", "A has total dimension " + total.get_str() + ", expected " + std::to_string(c.s1));
  c.E_series = jpw_detail::e_series(n, r, max_k, max_j, JpwRing::ZPrime);
  c.E_series_Z = jpw_detail::e_series(n, r, max_k, max_j, JpwRing::Z);
  c.H_series = jpw_detail::convolve(c.A_poincare, c.E_series, max_k);
  c.H_series_Z = jpw_detail::convolve(c.A_poincare, c.E_series_Z, max_k);
  c.multiplicity = multiplicity_free_check(n, r, max_k);
  return c;
}

/// dim (S/I)_j predicted by a Betti table over a polynomial ring with nvars variables of degree 1:
/// sum over j' <= j of euler(j') binomial(nvars - 1 + j - j', nvars - 1).
inline std::vector<mpz_class> hilbert_from_betti(const BettiTable& t, int nvars, int max_j) {
  std::vector<mpz_class> out(static_cast<std::size_t>(max_j) + 1, 0);
  for (int j = 0; j <= max_j; ++j)
    for (int jp = 0; jp <= j; ++jp) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(nvars - 1 + j - jp), static_cast<unsigned long>(nvars - 1));
      out[static_cast<std::size_t>(j)] += c * static_cast<long>(t.euler(jp));
    }
  return out;
}

}  // namespace perisplit
