#pragma once

#include <cstdint>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "perisplit/groebner/betti.hpp"
#include "perisplit/groebner/buchberger.hpp"
#include "perisplit/groebner/linalg.hpp"

namespace perisplit {

struct KoszulOptions {
  unsigned jobs = 1;
  GroebnerOptions groebner;
  // Variables whose Koszul complex is used; empty means all of them.
  // A proper subset computes Tor over the polynomial ring on that subset.
  std::vector<std::string> acting;
};

/// Integer weight vectors making every generator homogeneous, as rows.
inline std::vector<std::vector<long>> fine_grading(const IdealPresentation& ideal) {
  std::size_t n = ideal.ring->size();
  std::vector<std::vector<Rat>> diffs;
  for (const auto& g : ideal.generators) {
    const auto& t = g.terms();
    for (std::size_t k = 1; k < t.size(); ++k) {
      std::vector<Rat> row(n, Rat(0));
      for (std::size_t i = 0; i < n; ++i) row[i] = Rat(t[k].exps[i] - t[0].exps[i]);
      diffs.push_back(std::move(row));
    }
  }
  Matrix<Rat> m(diffs.size(), n);
  for (std::size_t r = 0; r < diffs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = diffs[r][c];
  std::vector<std::vector<long>> out;
  for (const auto& v : nullspace(m)) out.push_back(primitive_integer(v));
  return out;
}

namespace koszul_detail {

using Key = std::vector<long>;

inline Key grade(const std::vector<std::vector<long>>& g, const Exponents& e) {
  Key k(g.size(), 0);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t i = 0; i < e.size(); ++i) k[r] += g[r][i] * e[i];
  return k;
}

struct Subset {
  std::uint64_t mask;
  std::vector<std::size_t> members;  // positions in the acting list
  int weight;
  Key key;
};

struct Elem {
  std::size_t subset;
  std::size_t mono;
};

}  // namespace koszul_detail

/// dim Tor_i(S/I, Q)_j for i <= max_i, j <= max_j via strands of the Koszul complex.
inline BettiTable koszul_tor(const IdealPresentation& ideal, int max_i, int max_j, const KoszulOptions& opts = {}) {
  using namespace koszul_detail;
  if (!ideal.is_graded()) throw std::invalid_argument("koszul_tor: ideal is not graded");
  const RingPtr& ring = ideal.ring;
  const std::size_t n = ring->size();
  const auto w = ring->weights();

  std::vector<std::size_t> acting;
  if (opts.acting.empty()) {
    for (std::size_t i = 0; i < n; ++i) acting.push_back(i);
  } else {
    for (const auto& name : opts.acting) acting.push_back(ring->index(name));
  }
  if (acting.size() > 64) throw std::invalid_argument("koszul_tor: at most 64 acting variables");

  GroebnerOptions go = opts.groebner;
  go.max_degree = max_j;
  GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::grevlex(), go);
  auto stdm = standard_monomials_by_degree(gb, max_j);
  std::vector<std::map<Exponents, std::size_t>> pos(stdm.size());
  for (std::size_t d = 0; d < stdm.size(); ++d)
    for (std::size_t k = 0; k < stdm[d].size(); ++k) pos[d][stdm[d][k]] = k;

  auto grading = fine_grading(ideal);

  // mult[d][a][m]: normal form of x_{acting[a]} * stdm[d][m] in the basis stdm[d + w]
  std::vector<std::vector<std::vector<SparseRow<Rat>>>> mult(stdm.size());
  for (std::size_t d = 0; d < stdm.size(); ++d) {
    mult[d].resize(acting.size());
    for (std::size_t a = 0; a < acting.size(); ++a) {
      std::size_t v = acting[a];
      std::size_t td = d + static_cast<std::size_t>(w[v]);
      if (td >= stdm.size()) continue;
      auto& rows = mult[d][a];
      rows.reserve(stdm[d].size());
      for (const auto& m : stdm[d]) {
        Exponents e = m;
        ++e[v];
        auto nf = gb.normal_form_terms({Term{e, Rat(1)}});
        SparseRow<Rat> row;
        for (auto& t : nf) row.emplace_back(pos[td].at(t.exps), std::move(t.coeff));
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
      }
    }
  }

  // subsets of the acting variables up to size max_i + 1
  std::vector<std::vector<Subset>> subsets_by_size(static_cast<std::size_t>(max_i) + 2);
  subsets_by_size[0].push_back({0, {}, 0, Key(grading.size(), 0)});
  for (std::size_t s = 1; s < subsets_by_size.size(); ++s)
    for (const auto& base : subsets_by_size[s - 1]) {
      std::size_t start = base.members.empty() ? 0 : base.members.back() + 1;
      for (std::size_t a = start; a < acting.size(); ++a) {
        Subset t = base;
        t.mask |= std::uint64_t(1) << a;
        t.members.push_back(a);
        t.weight += w[acting[a]];
        if (t.weight > max_j) continue;
        for (std::size_t r = 0; r < grading.size(); ++r) t.key[r] += grading[r][acting[a]];
        subsets_by_size[s].push_back(std::move(t));
      }
    }

  std::vector<std::vector<Key>> mono_keys(stdm.size());
  for (std::size_t d = 0; d < stdm.size(); ++d)
    for (const auto& m : stdm[d]) mono_keys[d].push_back(grade(grading, m));

  std::vector<std::vector<unsigned long long>> result(static_cast<std::size_t>(max_j) + 1,
                                                      std::vector<unsigned long long>(static_cast<std::size_t>(max_i) + 1, 0));

  auto strand = [&](int j) {
    const std::size_t top = subsets_by_size.size();
    // blocks[i][key] = elements of C_{i,j} in that fine degree
    std::vector<std::map<Key, std::vector<Elem>>> blocks(top);
    std::vector<std::size_t> dims(top, 0);
    for (std::size_t i = 0; i < top; ++i)
      for (std::size_t s = 0; s < subsets_by_size[i].size(); ++s) {
        const Subset& sub = subsets_by_size[i][s];
        if (sub.weight > j) continue;
        std::size_t d = static_cast<std::size_t>(j - sub.weight);
        for (std::size_t m = 0; m < stdm[d].size(); ++m) {
          Key k = sub.key;
          for (std::size_t r = 0; r < k.size(); ++r) k[r] += mono_keys[d][m][r];
          blocks[i][k].push_back({s, m});
          ++dims[i];
        }
      }
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t i = 1; i < top; ++i) {
      for (const auto& [key, rows_el] : blocks[i]) {
        auto tgt = blocks[i - 1].find(key);
        if (tgt == blocks[i - 1].end()) continue;
        std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> col;
        for (std::size_t c = 0; c < tgt->second.size(); ++c) {
          const Elem& e = tgt->second[c];
          col[{subsets_by_size[i - 1][e.subset].mask, e.mono}] = c;
        }
        std::vector<SparseRow<Rat>> rows;
        rows.reserve(rows_el.size());
        for (const Elem& e : rows_el) {
          const Subset& sub = subsets_by_size[i][e.subset];
          std::size_t d = static_cast<std::size_t>(j - sub.weight);
          std::map<std::size_t, Rat> acc;
          for (std::size_t t = 0; t < sub.members.size(); ++t) {
            std::size_t a = sub.members[t];
            std::uint64_t rest = sub.mask & ~(std::uint64_t(1) << a);
            for (const auto& [m2, c] : mult[d][a][e.mono]) {
              std::size_t cidx = col.at({rest, m2});
              Rat v = t % 2 ? -c : c;
              auto [it, fresh] = acc.try_emplace(cidx, v);
              if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) acc.erase(it);
              }
            }
          }
          rows.emplace_back(acc.begin(), acc.end());
        }
        ranks[i] += sparse_rank(std::move(rows), tgt->second.size());
      }
    }
    for (int i = 0; i <= max_i; ++i) {
      std::size_t ui = static_cast<std::size_t>(i);
      result[static_cast<std::size_t>(j)][ui] = dims[ui] - ranks[ui] - ranks[ui + 1];
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    for (int j = 0; j <= max_j; ++j) strand(j);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (int j = max_j - static_cast<int>(t); j >= 0; j -= static_cast<int>(jobs)) strand(j);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BettiTable table(max_i, max_j);
  for (int j = 0; j <= max_j; ++j)
    for (int i = 0; i <= max_i; ++i) table.add(i, j, result[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
  return table;
}

}  // namespace perisplit
