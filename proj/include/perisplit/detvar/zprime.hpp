#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/detvar/pair.hpp"
#include "perisplit/groebner/buchberger.hpp"
#include "perisplit/groebner/linalg.hpp"

namespace perisplit {

struct ZPrimeOptions {
  enum class Method { Auto, Eliminate, Linear };
  Method method = Method::Auto;
  // Relations are searched up to this weighted degree by linear algebra.
  int cutoff = 4;
  // Hilbert function is certified through this degree; generators are added beyond cutoff if needed.
  int certify_to = 4;
  // Auto uses elimination when parameters plus targets number at most this many.
  std::size_t eliminate_max_vars = 12;
  GroebnerOptions groebner;
};

/// Ideal of the double cover Z'_1: image of phi -> (phi J phi^T, maximal minors of phi).
/// Ring: g_i_j (weight 1) then Plucker y_S (weight r).
struct ZPrimeIdeal {
  int n = 0;
  int r = 0;
  IdealPresentation ideal;
  std::vector<std::string> g_names;
  std::vector<std::string> plucker_names;
  std::string method;
  // Degree through which the generators are proven complete (dim (S/I)_d equals the true dimension).
  int certified_degree = 0;
  // Per degree: dimension of the coordinate ring of the image.
  std::vector<unsigned long long> hilbert;
};

namespace zprime_detail {

struct Param {
  RingPtr target;
  RingPtr xring;
  std::vector<MPoly> images;                // per target variable, over xring
  std::vector<std::vector<int>> torus;      // GL(V) torus weight per target variable
};

inline Param parametrization(int n, int r) {
  Param p;
  std::vector<Variable> tv;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tv.push_back({index_name("g", {std::size_t(i), std::size_t(j)}), 1});
  auto ss = subsets(static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(r));
  for (const auto& s : ss) tv.push_back({index_name("y", s), r});
  p.target = make_ring(tv);
  std::vector<Variable> xv;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 2 * r; ++a) xv.push_back({index_name("x", {std::size_t(i), std::size_t(a)}), 1});
  p.xring = make_ring(xv);
  Matrix<MPoly> phi(n, 2 * r);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 2 * r; ++a) phi(i, a) = MPoly::variable(p.xring, static_cast<std::size_t>(i * 2 * r + a));
  Matrix<MPoly> jm = orthogonal_form(r).map([](const Rat& x) { return MPoly(x); });
  Matrix<MPoly> g = phi * jm * phi.transpose();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MPoly e = g(i, j);
      p.images.push_back(e.ring() ? e : e.lifted(p.xring));
      std::vector<int> t(n, 0);
      ++t[i];
      ++t[j];
      p.torus.push_back(t);
    }
  for (auto& m : maximal_minors(phi)) p.images.push_back(m.ring() ? m : m.lifted(p.xring));
  for (const auto& s : ss) {
    std::vector<int> t(n, 0);
    for (auto i : s) ++t[i];
    p.torus.push_back(t);
  }
  return p;
}

inline std::vector<Exponents> monomials_of_degree(const std::vector<int>& w, int d) {
  std::vector<Exponents> out;
  Exponents e(w.size(), 0);
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

inline std::vector<int> torus_key(const Param& p, const Exponents& e) {
  std::vector<int> k(p.torus.empty() ? 0 : p.torus[0].size(), 0);
  for (std::size_t v = 0; v < e.size(); ++v)
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += e[v] * p.torus[v][i];
  return k;
}

class ImageCache {
 public:
  explicit ImageCache(const Param& p) : p_(p) {}
  const MPoly& operator()(const Exponents& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    std::size_t v = e.size();
    while (v > 0 && e[v - 1] == 0) --v;
    MPoly out;
    if (v == 0) {
      out = MPoly::constant(p_.xring, Rat(1));
    } else {
      Exponents less = e;
      --less[v - 1];
      out = (*this)(less) * p_.images[v - 1];
    }
    return cache_.emplace(e, std::move(out)).first->second;
  }

 private:
  const Param& p_;
  std::map<Exponents, MPoly> cache_;
};

// Dense rank over GF(2^31 - 1).
inline std::size_t dense_rank_mod_p(std::vector<std::vector<std::uint64_t>> m) {
  using namespace modp;
  std::size_t rk = 0, rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    std::uint64_t inv_p = inv(m[rk][c]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      if (!m[i][c]) continue;
      std::uint64_t f = mul(m[i][c], inv_p);
      for (std::size_t k = c; k < cols; ++k) m[i][k] = (m[i][k] + kPrime - mul(f, m[rk][k])) % kPrime;
    }
    ++rk;
  }
  return rk;
}

// Integer polynomial evaluated mod p.
inline std::uint64_t eval_mod_p(const MPoly& f, const std::vector<std::uint64_t>& x) {
  using namespace modp;
  std::uint64_t out = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t c;
    if (!reduce(t.coeff, c)) throw std::domain_error("eval_mod_p: denominator divisible by p");
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (int k = 0; k < t.exps[i]; ++k) c = mul(c, x[i]);
    out = (out + c) % kPrime;
  }
  return out;
}

// Lower bound on dim of the span of the images of `monos` (rank of an evaluation matrix mod p).
inline std::size_t image_rank_lower_bound(const Param& p, const std::vector<Exponents>& monos, std::mt19937_64& rng,
                                          std::size_t extra = 2) {
  std::size_t k = monos.size();
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t s = 0; s < k + extra; ++s) {
    std::vector<std::uint64_t> x(p.xring->size());
    for (auto& v : x) v = rng() % modp::kPrime;
    std::vector<std::uint64_t> vals;
    for (const auto& im : p.images) vals.push_back(eval_mod_p(im, x));
    std::vector<std::uint64_t> row;
    for (const auto& e : monos) {
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int t = 0; t < e[i]; ++t) v = modp::mul(v, vals[i]);
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return dense_rank_mod_p(std::move(rows));
}

// Minimal new relations of degree d (exact kernels per torus block, modulo lower generators).
inline std::vector<MPoly> relations_in_degree(const Param& p, ImageCache& cache, const std::vector<MPoly>& lower, int d) {
  const auto w = p.target->weights();
  std::map<std::vector<int>, std::vector<Exponents>> blocks;
  for (auto& e : monomials_of_degree(w, d)) blocks[torus_key(p, e)].push_back(std::move(e));
  // multiples of the known generators, bucketed by block
  std::map<std::vector<int>, std::vector<MPoly>> known;
  for (const auto& g : lower) {
    long gd = weighted_degree(g.leading_term().exps, w);
    auto gk = torus_key(p, g.leading_term().exps);
    for (const auto& m : monomials_of_degree(w, static_cast<int>(d - gd))) {
      auto k = torus_key(p, m);
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += gk[i];
      known[k].push_back(g * MPoly::monomial(p.target, m, Rat(1)));
    }
  }
  std::vector<MPoly> out;
  for (const auto& [key, monos] : blocks) {
    std::map<Exponents, std::size_t> rowidx;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> cols;
    for (const auto& e : monos) {
      std::vector<std::pair<std::size_t, Rat>> col;
      for (const auto& t : cache(e).terms()) {
        auto it = rowidx.emplace(t.exps, rowidx.size()).first;
        col.emplace_back(it->second, t.coeff);
      }
      cols.push_back(std::move(col));
    }
    Matrix<Rat> m(rowidx.size(), monos.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : cols[c]) m(r, c) = v;
    auto ker = nullspace(m);
    if (ker.empty()) continue;
    std::map<Exponents, std::size_t> colidx;
    for (std::size_t c = 0; c < monos.size(); ++c) colidx[monos[c]] = c;
    auto to_row = [&](const MPoly& f) {
      SparseRow<Rat> row;
      for (const auto& t : f.terms()) row.emplace_back(colidx.at(t.exps), t.coeff);
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      return row;
    };
    RationalEchelon ech;
    if (auto it = known.find(key); it != known.end())
      for (const auto& f : it->second) ech.insert(to_row(f));
    for (const auto& v : ker) {
      std::vector<Term> terms;
      auto iv = primitive_integer(v);
      for (std::size_t c = 0; c < v.size(); ++c)
        if (iv[c]) terms.push_back({monos[c], Rat(iv[c])});
      MPoly f = MPoly::from_terms(p.target, terms);
      if (ech.insert(to_row(f))) out.push_back(f);
    }
  }
  return out;
}

}  // namespace zprime_detail

/// Exact check that f(phi J phi^T, minors of phi) = 0 for the generic phi.
inline bool vanishes_on_parametrization(int n, int r, const MPoly& f) {
  auto p = zprime_detail::parametrization(n, r);
  return f.rebase(p.target).substitute(p.images).is_zero();
}

inline ZPrimeIdeal z_prime_ideal(int n, int r, const ZPrimeOptions& opts = {}) {
  using namespace zprime_detail;
  check_nr(n, r);
  if (r == 0 || 2 * r > n) throw std::invalid_argument("z_prime_ideal: needs 0 < 2r <= n");
  Param p = parametrization(n, r);
  ZPrimeIdeal out;
  out.n = n;
  out.r = r;
  for (std::size_t i = 0; i < p.target->size(); ++i)
    (p.target->name(i)[0] == 'y' ? out.plucker_names : out.g_names)
        .push_back(p.target->name(i));
  std::size_t nvars = p.target->size() + p.xring->size();
  bool elim = opts.method == ZPrimeOptions::Method::Eliminate ||
              (opts.method == ZPrimeOptions::Method::Auto && nvars <= opts.eliminate_max_vars);
  std::vector<MPoly> gens;
  int have = 0;  // relations known complete through this degree
  if (elim) {
    // x weight 1, g weight 2, y weight 2r keeps every relation homogeneous.
    std::vector<Variable> all = p.xring->vars();
    std::vector<std::string> kill;
    for (const auto& v : all) kill.push_back(v.name);
    for (const auto& v : p.target->vars()) all.push_back({v.name, 2 * v.weight});
    RingPtr big = make_ring(all);
    std::vector<MPoly> rel;
    for (std::size_t i = 0; i < p.target->size(); ++i)
      rel.push_back(MPoly::variable(big, p.target->name(i)) - p.images[i].rebase(big));
    for (const auto& f : eliminate(IdealPresentation(big, rel), kill, opts.groebner).generators)
      gens.push_back(f.rebase(p.target));
    out.method = "elimination";
    have = 1 << 20;
  } else {
    ImageCache cache(p);
    for (int d = 1; d <= opts.cutoff; ++d)
      for (auto& f : relations_in_degree(p, cache, gens, d)) gens.push_back(std::move(f));
    out.method = "linear";
    have = opts.cutoff;
  }

  // Certify: standard monomials of the generated ideal must have independent images.
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(n * 31 + r));
  while (true) {
    GroebnerOptions go = opts.groebner;
    go.max_degree = opts.certify_to;
    GroebnerBasis gb = groebner_basis(IdealPresentation(p.target, gens), MonomialOrder::grevlex(), go);
    auto stdm = standard_monomials_by_degree(gb, opts.certify_to);
    out.hilbert.clear();
    out.certified_degree = 0;
    int failed = -1;
    for (int d = 0; d <= opts.certify_to && failed < 0; ++d) {
      std::map<std::vector<int>, std::vector<Exponents>> blocks;
      for (const auto& e : stdm[static_cast<std::size_t>(d)]) blocks[torus_key(p, e)].push_back(e);
      for (const auto& [key, monos] : blocks)
        if (image_rank_lower_bound(p, monos, rng) != monos.size()) {
          failed = d;
          break;
        }
      if (failed < 0) {
        out.hilbert.push_back(stdm[static_cast<std::size_t>(d)].size());
        out.certified_degree = d;
      }
    }
    if (failed < 0) break;
    if (failed <= have)
      throw InvariantViolation("Z' relations", "generated ideal misses relations in degree " + std::to_string(failed) +
                                                   " although all relations there were computed");
    ImageCache cache(p);
    for (int d = have + 1; d <= failed; ++d)
      for (auto& f : relations_in_degree(p, cache, gens, d)) gens.push_back(std::move(f));
    have = failed;
  }
  out.ideal = IdealPresentation(p.target, gens);
  return out;
}

}  // namespace perisplit
