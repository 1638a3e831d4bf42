#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/groebner/buchberger.hpp"

namespace perisplit {

/// Integer polynomial in t, coefficient k at index k, trailing zeros trimmed.
using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline IntPoly poly_add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

/// 1 - t^d
inline IntPoly one_minus(long d) {
  IntPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] += 1;
  p[static_cast<std::size_t>(d)] -= 1;
  trim(p);
  return p;
}

/// Exact division by 1 - t^d; nullopt when it does not divide.
inline std::optional<IntPoly> divide_one_minus(const IntPoly& p, long d) {
  // p = (1 - t^d) q  <=>  q_k = p_k + q_{k-d}
  if (p.empty()) return IntPoly{};
  std::size_t du = static_cast<std::size_t>(d);
  if (p.size() <= du) return std::nullopt;
  IntPoly q(p.size() - du, 0);
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[k] + (k >= du ? q[k - du] : mpz_class(0));
  for (std::size_t k = q.size(); k < p.size(); ++k) {
    mpz_class expect = k >= du && k - du < q.size() ? -q[k - du] : mpz_class(0);
    if (p[k] != expect) return std::nullopt;
  }
  trim(q);
  return q;
}

inline std::string poly_to_string(const IntPoly& p, const std::string& var = "t") {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    mpz_class c = abs(p[k]);
    bool neg = p[k] < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    bool unit = c == 1 && k > 0;
    if (!unit) s += c.get_str();
    if (k > 0) {
      if (!unit) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

/// N(t) / prod (1 - t^w_i) for a graded quotient S/I.
struct HilbertSeries {
  IntPoly numerator;
  std::vector<int> weights;

  /// Coefficients of t^0 .. t^order.
  std::vector<mpz_class> expand(std::size_t order) const {
    std::vector<mpz_class> c(order + 1, 0);
    for (std::size_t k = 0; k < numerator.size() && k <= order; ++k) c[k] = numerator[k];
    for (int w : weights)
      for (std::size_t k = static_cast<std::size_t>(w); k <= order; ++k) c[k] += c[k - static_cast<std::size_t>(w)];
    return c;
  }

  /// The series as a polynomial when the quotient is finite dimensional.
  std::optional<IntPoly> polynomial() const {
    IntPoly p = numerator;
    for (int w : weights) {
      auto q = divide_one_minus(p, w);
      if (!q) return std::nullopt;
      p = std::move(*q);
    }
    return p;
  }

  /// Numerator with the factor prod (1 - t^w) divided back as far as possible.
  std::string to_string() const {
    std::string den;
    std::map<int, int> count;
    for (int w : weights) ++count[w];
    for (auto [w, c] : count) {
      if (!den.empty()) den += "*";
      den += "(1 - t" + (w > 1 ? "^" + std::to_string(w) : std::string()) + ")";
      if (c > 1) den += "^" + std::to_string(c);
    }
    return "(" + poly_to_string(numerator) + ")" + (den.empty() ? "" : " / (" + den + ")");
  }
};

namespace hilbert_detail {

inline void minimalize(std::vector<Exponents>& g) {
  std::sort(g.begin(), g.end(), [](const Exponents& a, const Exponents& b) {
    long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  std::vector<Exponents> out;
  for (auto& e : g) {
    bool red = false;
    for (const auto& o : out)
      if (gb_detail::divides(o, e)) {
        red = true;
        break;
      }
    if (!red) out.push_back(std::move(e));
  }
  g = std::move(out);
}

// Numerator of S/(monomials) by pivoting on a shared variable.
inline IntPoly numerator(std::vector<Exponents> gens, const std::vector<int>& w) {
  minimalize(gens);
  if (gens.empty()) return IntPoly{mpz_class(1)};
  std::size_t n = w.size();
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++count[i];
  std::size_t v = n;
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] >= 2 && (v == n || count[i] > count[v])) v = i;
  if (v == n) {
    IntPoly p{mpz_class(1)};
    for (const auto& g : gens) p = poly_mul(p, one_minus(weighted_degree(g, w)));
    return p;
  }
  int e = 0;
  for (const auto& g : gens)
    if (g[v] && (e == 0 || g[v] < e)) e = g[v];
  Exponents piv(n, 0);
  piv[v] = e;
  std::vector<Exponents> sum = gens, quot;
  sum.push_back(piv);
  for (auto g : gens) {
    g[v] = std::max(0, g[v] - e);
    quot.push_back(std::move(g));
  }
  IntPoly a = numerator(std::move(sum), w);
  IntPoly b = numerator(std::move(quot), w);
  IntPoly shift(static_cast<std::size_t>(e) * static_cast<std::size_t>(w[v]), 0);
  shift.insert(shift.end(), b.begin(), b.end());
  return poly_add(a, shift);
}

}  // namespace hilbert_detail

inline HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  auto w = gb.ring()->weights();
  for (int x : w)
    if (x < 1) throw std::invalid_argument("hilbert_series: weights must be positive");
  if (gb.truncated()) throw std::invalid_argument("hilbert_series: needs a complete basis");
  return {hilbert_detail::numerator(gb.leading_exponents(), w), w};
}

inline HilbertSeries hilbert_series(const IdealPresentation& ideal, const GroebnerOptions& opts = {}) {
  if (!ideal.is_graded()) throw std::invalid_argument("hilbert_series: ideal is not graded");
  return hilbert_series(groebner_basis(ideal, MonomialOrder::grevlex(), opts));
}

}  // namespace perisplit
