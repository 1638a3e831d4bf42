#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/exactcore/matrix.hpp"
#include "perisplit/groebner/ideal.hpp"

namespace perisplit {

inline std::string index_name(const std::string& stem, const std::vector<std::size_t>& idx) {
  std::string s = stem;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "_" : "") + std::to_string(idx[k] + 1);
  return s;
}

inline void check_nr(int n, int r) {
  if (n < 1 || r < 0 || r > n) throw std::invalid_argument("need n >= 1 and 0 <= r <= n");
}

/// Generic skew f and symmetric g over the ring on f_i_j (i<j) and g_i_j (i<=j).
struct GenericPair {
  int n = 0;
  int r = 0;
  RingPtr ring;
  Matrix<MPoly> f;
  Matrix<MPoly> g;

  std::vector<std::string> f_names() const {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.push_back(index_name("f", {std::size_t(i), std::size_t(j)}));
    return out;
  }
  std::vector<std::string> g_names() const {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) out.push_back(index_name("g", {std::size_t(i), std::size_t(j)}));
    return out;
  }
};

/// Symmetric n x n matrix of variables g_i_j from ring (which must contain them).
inline Matrix<MPoly> symmetric_variables(const RingPtr& ring, int n, const std::string& stem = "g") {
  Matrix<MPoly> g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MPoly v = MPoly::variable(ring, index_name(stem, {std::size_t(i), std::size_t(j)}));
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

inline GenericPair generic_pair(int n, int r) {
  check_nr(n, r);
  GenericPair p;
  p.n = n;
  p.r = r;
  std::vector<Variable> vars;
  for (const auto& s : p.f_names()) vars.push_back({s, 1});
  for (const auto& s : p.g_names()) vars.push_back({s, 1});
  p.ring = make_ring(vars);
  p.f = Matrix<MPoly>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MPoly v = MPoly::variable(p.ring, index_name("f", {std::size_t(i), std::size_t(j)}));
      p.f(i, j) = v;
      p.f(j, i) = -v;
    }
  p.g = symmetric_variables(p.ring, n);
  return p;
}

/// Distinct generators up to sign (minors of a symmetric matrix repeat).
inline std::vector<MPoly> distinct_up_to_sign(const std::vector<MPoly>& in) {
  std::set<std::string> seen;
  std::vector<MPoly> out;
  for (const auto& p : in) {
    if (p.is_zero()) continue;
    MPoly m = p.scaled(p.leading_term().coeff.inverse());
    if (seen.insert(m.to_string()).second) out.push_back(p);
  }
  return out;
}

/// Ideal of Z: (2(n-r)+2)-Pfaffians of f and (2r+1)-minors of g, when those sizes fit.
inline IdealPresentation z_ideal(const GenericPair& p) {
  std::vector<MPoly> gens;
  std::size_t pf = 2 * static_cast<std::size_t>(p.n - p.r) + 2;
  std::size_t mi = 2 * static_cast<std::size_t>(p.r) + 1;
  if (pf <= static_cast<std::size_t>(p.n))
    for (auto& x : sub_pfaffians(p.f, pf)) gens.push_back(std::move(x));
  if (mi <= static_cast<std::size_t>(p.n))
    for (auto& x : distinct_up_to_sign(minors(p.g, mi))) gens.push_back(std::move(x));
  return IdealPresentation(p.ring, gens);
}

/// J = [[0, I_r], [I_r, 0]], the fixed orthogonal form on E.
template <class T = Rat>
Matrix<T> orthogonal_form(int r) {
  Matrix<T> j(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) {
    j(i, r + i) = T(1);
    j(r + i, i) = T(1);
  }
  return j;
}

/// A point (f, g) of Z, with a witness g = phi J phi^T and its Plucker vector when 2r <= n.
template <class T>
struct ZPointT {
  int n = 0;
  int r = 0;
  Matrix<T> f;
  Matrix<T> g;
  std::optional<Matrix<T>> phi;
  std::optional<std::vector<T>> plucker;
};
using ZPoint = ZPointT<Rat>;

/// Maximal minors of an n x k matrix, rows in lex order of subsets.
template <class T>
std::vector<T> maximal_minors(const Matrix<T>& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  std::vector<T> out;
  for (const auto& s : subsets(m.rows(), m.cols())) out.push_back(det(m.submatrix(s, cols)));
  return out;
}

/// Rank conditions of Z and the witness identities; empty string when all hold.
inline std::string z_membership_failure(const ZPoint& p) {
  if (!p.f.is_skew()) return "f is not skew";
  if (!p.g.is_symmetric()) return "g is not symmetric";
  if (rank(p.f) > static_cast<std::size_t>(2 * (p.n - p.r))) return "rank f > 2(n-r)";
  if (rank(p.g) > static_cast<std::size_t>(2 * p.r)) return "rank g > 2r";
  if (p.phi) {
    if (*p.phi * orthogonal_form(p.r) * p.phi->transpose() != p.g) return "g != phi J phi^T";
    if (p.plucker && maximal_minors(*p.phi) != *p.plucker) return "plucker vector is not the minors of phi";
  }
  return {};
}

}  // namespace perisplit
