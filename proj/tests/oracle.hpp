#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <string>
#include <numeric>
#include <random>
#include <vector>

#include "perisplit/exactcore/matrix.hpp"

namespace oracle {

// Leibniz expansion over all permutations.
template <class T>
T det_leibniz(const perisplit::Matrix<T>& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T out(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, p[i]);
    out = inv % 2 ? out - term : out + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long factorial(long n) {
  long r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Generic skew matrix with entries f12, f13, ... in a fresh ring.
inline perisplit::Matrix<perisplit::MPoly> generic_skew(std::size_t n, perisplit::RingPtr& ring) {
  using namespace perisplit;
  std::vector<Variable> v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) v.push_back({"f" + std::to_string(i + 1) + std::to_string(j + 1), 1});
  ring = make_ring(v);
  Matrix<MPoly> m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = MPoly::variable(ring, k);
      m(j, i) = -MPoly::variable(ring, k);
      ++k;
    }
  return m;
}

// All exponent vectors of weighted degree d.
inline std::vector<perisplit::Exponents> monomials_of_degree(const std::vector<int>& w, int d) {
  std::vector<perisplit::Exponents> out;
  perisplit::Exponents e(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == w.size()) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (int k = 0; k * w[i] <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

// dim (S/I)_d by dense linear algebra on the span of monomial multiples of the generators.
inline std::size_t hilbert_function_linear(const perisplit::RingPtr& ring, const std::vector<perisplit::MPoly>& gens,
                                           int d) {
  using namespace perisplit;
  auto w = ring->weights();
  auto basis = monomials_of_degree(w, d);
  std::map<Exponents, std::size_t> col;
  for (std::size_t k = 0; k < basis.size(); ++k) col[basis[k]] = k;
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : gens) {
    long gd = weighted_degree(g.leading_term().exps, w);
    if (gd > d) continue;
    for (const auto& m : monomials_of_degree(w, static_cast<int>(d - gd))) {
      std::vector<Rat> row(basis.size(), Rat(0));
      for (const auto& t : g.terms()) {
        Exponents e = t.exps;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        row[col.at(e)] += t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  Matrix<Rat> a(rows.size(), basis.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) a(r, c) = rows[r][c];
  return basis.size() - (rows.empty() ? 0 : rank(a));
}

inline perisplit::Rat random_rat(std::mt19937_64& rng, int span = 7) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  return perisplit::Rat(num(rng), den(rng));
}

}  // namespace oracle
