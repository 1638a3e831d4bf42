#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/detvar/pair.hpp"
#include "perisplit/groebner/buchberger.hpp"

namespace perisplit {

/// Power of u removed from charpoly(fg): 2r - n or n - 2r.
inline int chi_shift(int n, int r) { return std::abs(2 * r - n); }

/// Coefficients (constant first) of chibar = charpoly(fg) / u^shift, checking that the
/// low coefficients vanish and that chibar is even.  is_zero decides vanishing.
template <class T, class Zero>
std::vector<T> chi_bar_checked(const std::vector<T>& chi, int n, int r, Zero is_zero) {
  int s = chi_shift(n, r);
  for (int k = 0; k < s; ++k)
    if (!is_zero(chi[static_cast<std::size_t>(k)]))
      throw InvariantViolation("chibar divisibility",
                               "u^" + std::to_string(s) + " does not divide charpoly(fg); input is off Z");
  std::vector<T> out(chi.begin() + s, chi.end());
  for (std::size_t k = 1; k < out.size(); k += 2)
    if (!is_zero(out[k])) throw InvariantViolation("chibar even", "odd coefficient of u^" + std::to_string(k));
  return out;
}

/// chibar for a numeric point over Rat or DualRat.
template <class T>
std::vector<T> chi_bar_coeffs(const Matrix<T>& f, const Matrix<T>& g, int r) {
  if (!f.square() || f.rows() != g.rows() || !g.square()) throw std::invalid_argument("chi_bar: size mismatch");
  int n = static_cast<int>(f.rows());
  check_nr(n, r);
  return chi_bar_checked(charpoly_coeffs(f * g), n, r, [](const T& x) { return x.is_zero(); });
}

/// (a_2, ..., a_2m) of an even monic chibar(u) = u^2m + a_2 u^(2m-2) + ... + a_2m.
template <class T>
std::vector<T> even_coefficients(const std::vector<T>& chibar) {
  std::size_t m = (chibar.size() - 1) / 2;
  std::vector<T> a;
  for (std::size_t i = 1; i <= m; ++i) a.push_back(chibar[2 * (m - i)]);
  return a;
}

/// chibar as a polynomial in u over Q.
inline MPoly chi_bar(const Matrix<Rat>& f, const Matrix<Rat>& g, int r, const std::string& u = "u") {
  auto c = chi_bar_coeffs(f, g, r);
  RingPtr ring = make_ring({{u, 1}});
  MPoly uu = MPoly::variable(ring, 0), out = MPoly::constant(ring, Rat(0)), up = MPoly::constant(ring, Rat(1));
  for (const auto& x : c) {
    out += up.scaled(x);
    up = up * uu;
  }
  return out;
}

/// chibar of the generic pair: coefficients of charpoly(fg) reduced modulo the ideal of Z.
/// Returns normal forms (constant first); the divisibility and evenness checks are exact.
inline std::vector<MPoly> chi_bar_generic(int n, int r, const GroebnerOptions& opts = {}) {
  GenericPair p = generic_pair(n, r);
  GroebnerBasis gb = groebner_basis(z_ideal(p), MonomialOrder::grevlex(), opts);
  std::vector<MPoly> chi;
  for (const auto& c : charpoly_coeffs(p.f * p.g)) chi.push_back(gb.normal_form(c.ring() ? c : c.lifted(p.ring)));
  return chi_bar_checked(chi, n, r, [](const MPoly& x) { return x.is_zero(); });
}

/// Phi = sum over 2r-subsets S of Pf(f_S) det(phi_S).
template <class T>
T phi_invariant(const Matrix<T>& phi, const Matrix<T>& f) {
  if (!f.square() || f.rows() != phi.rows()) throw std::invalid_argument("phi_invariant: size mismatch");
  if (phi.cols() % 2 || phi.cols() == 0 || phi.cols() > phi.rows())
    throw std::invalid_argument("phi_invariant: phi must be n x 2r with 0 < 2r <= n");
  std::vector<std::size_t> cols(phi.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  T out(0);
  for (const auto& s : subsets(phi.rows(), phi.cols())) {
    T pf = pfaffian(f.principal(s));
    if (pf.is_zero()) continue;
    out = out + pf * det(phi.submatrix(s, cols));
  }
  return out;
}

/// Phi from Plucker coordinates (lex order of subsets) instead of a witness.
template <class T>
T phi_from_plucker(const std::vector<T>& plucker, const Matrix<T>& f, int r) {
  auto ss = subsets(f.rows(), 2 * static_cast<std::size_t>(r));
  if (ss.size() != plucker.size()) throw std::invalid_argument("phi_from_plucker: wrong number of coordinates");
  T out(0);
  for (std::size_t k = 0; k < ss.size(); ++k) out = out + pfaffian(f.principal(ss[k])) * plucker[k];
  return out;
}

struct PhiChiReport {
  bool holds = false;
  int sign = 0;  // Phi^2 = sign * chibar(0)
  Rat phi;
  Rat chibar0;
};

inline PhiChiReport verify_phi_chi(const ZPoint& p) {
  if (2 * p.r > p.n || p.r == 0) throw std::invalid_argument("verify_phi_chi: needs 0 < 2r <= n");
  if (!p.phi && !p.plucker) throw std::invalid_argument("verify_phi_chi: witness missing");
  PhiChiReport rep;
  rep.phi = p.plucker ? phi_from_plucker(*p.plucker, p.f, p.r) : phi_invariant(*p.phi, p.f);
  rep.chibar0 = chi_bar_coeffs(p.f, p.g, p.r).front();
  Rat sq = rep.phi * rep.phi;
  if (sq == rep.chibar0) rep.sign = 1;
  else if (sq == -rep.chibar0) rep.sign = -1;
  rep.holds = rep.sign != 0;
  return rep;
}

}  // namespace perisplit
