#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "perisplit/exactcore/rational.hpp"

namespace perisplit {

struct Variable {
  std::string name;
  int weight = 1;
};

/// Ordered, immutable table of named variables with integer weights.
class PolyRing {
 public:
  explicit PolyRing(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].weight < 0) throw std::invalid_argument("PolyRing: negative weight for " + vars_[i].name);
      if (!index_.emplace(vars_[i].name, i).second)
        throw std::invalid_argument("PolyRing: duplicate variable " + vars_[i].name);
    }
  }

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& vars() const { return vars_; }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  int weight(std::size_t i) const { return vars_.at(i).weight; }

  std::vector<int> weights() const {
    std::vector<int> w;
    w.reserve(vars_.size());
    for (const auto& v : vars_) w.push_back(v.weight);
    return w;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw std::invalid_argument("PolyRing: unknown variable " + std::string(name));
    return *i;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    if (a.vars_.size() != b.vars_.size()) return false;
    for (std::size_t i = 0; i < a.vars_.size(); ++i)
      if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].weight != b.vars_[i].weight) return false;
    return true;
  }

 private:
  std::vector<Variable> vars_;
  std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;
using Exponents = std::vector<int>;

inline RingPtr make_ring(std::vector<Variable> vars) { return std::make_shared<const PolyRing>(std::move(vars)); }

/// Ring with the variables of `base` followed by `extra`.
inline RingPtr extend_ring(const RingPtr& base, const std::vector<Variable>& extra) {
  std::vector<Variable> v = base ? base->vars() : std::vector<Variable>{};
  v.insert(v.end(), extra.begin(), extra.end());
  return make_ring(std::move(v));
}

inline long weighted_degree(const Exponents& e, const std::vector<int>& w) {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * w[i];
  return d;
}

// Graded lex with weights: compare weighted degree, then the first
// differing exponent (larger exponent on an earlier variable wins).
inline int grlex_compare(const Exponents& a, const Exponents& b, const std::vector<int>& w) {
  long da = weighted_degree(a, w), db = weighted_degree(b, w);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct Term {
  Exponents exps;
  Rat coeff;
};

class MPoly {
 public:
  MPoly() = default;
  MPoly(int c) : MPoly(Rat(c)) {}
  MPoly(long c) : MPoly(Rat(c)) {}
  MPoly(Rat c) {
    if (!c.is_zero()) terms_.push_back({{}, std::move(c)});
  }

  static MPoly constant(RingPtr ring, Rat c) {
    MPoly p;
    p.ring_ = std::move(ring);
    if (!c.is_zero()) p.terms_.push_back({Exponents(p.nvars(), 0), std::move(c)});
    return p;
  }
  static MPoly variable(RingPtr ring, std::size_t i) {
    Exponents e(ring->size(), 0);
    e.at(i) = 1;
    return monomial(std::move(ring), std::move(e), Rat(1));
  }
  static MPoly variable(RingPtr ring, std::string_view name) {
    std::size_t i = ring->index(name);
    return variable(std::move(ring), i);
  }
  static MPoly monomial(RingPtr ring, Exponents e, Rat c) {
    if (e.size() != ring->size()) throw std::invalid_argument("MPoly: exponent length mismatch");
    MPoly p;
    p.ring_ = std::move(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }
  static MPoly from_terms(RingPtr ring, std::vector<Term> terms) {
    MPoly p;
    p.ring_ = std::move(ring);
    std::size_t nv = p.nvars();
    for (auto& t : terms)
      if (t.exps.size() != nv) throw std::invalid_argument("MPoly: exponent length mismatch");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int x : terms_[0].exps)
      if (x) return false;
    return true;
  }
  Rat constant_value() const {
    if (!is_constant()) throw std::logic_error("MPoly: not a constant");
    return terms_.empty() ? Rat(0) : terms_[0].coeff;
  }
  /// Coefficient of the monomial with exponent vector e.
  Rat coefficient(const Exponents& e) const {
    for (const auto& t : terms_)
      if (t.exps == e) return t.coeff;
    return Rat(0);
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("MPoly: leading term of zero");
    return terms_.front();
  }

  long degree() const {
    long d = -1;
    auto w = weights();
    for (const auto& t : terms_) d = std::max(d, weighted_degree(t.exps, w));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exps.at(var));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto w = weights();
    long d = weighted_degree(terms_[0].exps, w);
    for (const auto& t : terms_)
      if (weighted_degree(t.exps, w) != d) return false;
    return true;
  }
  bool involves(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.exps.at(var)) return true;
    return false;
  }

  /// Same polynomial viewed in ring r (only for ring-less constants or an equal ring).
  MPoly lifted(const RingPtr& r) const {
    if (ring_ == r) return *this;
    if (!ring_) {
      MPoly p;
      p.ring_ = r;
      for (const auto& t : terms_) p.terms_.push_back({Exponents(p.nvars(), 0), t.coeff});
      return p;
    }
    if (r && *ring_ == *r) {
      MPoly p = *this;
      p.ring_ = r;
      return p;
    }
    throw std::invalid_argument("MPoly: incompatible rings");
  }

  /// Re-express in ring `target` by matching variable names.
  MPoly rebase(const RingPtr& target) const {
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto j = target->find(ring_->name(i));
      if (!j) {
        if (involves(i)) throw std::invalid_argument("MPoly::rebase: variable " + ring_->name(i) + " missing");
        map[i] = static_cast<std::size_t>(-1);
      } else {
        map[i] = *j;
      }
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e(target->size(), 0);
      for (std::size_t i = 0; i < t.exps.size(); ++i)
        if (t.exps[i]) e[map[i]] = t.exps[i];
      out.push_back({std::move(e), t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  /// Rename variables (old name -> new name) into `target`.
  MPoly renamed(const RingPtr& target, const std::map<std::string, std::string>& names) const {
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = names.find(ring_->name(i));
      map[i] = target->index(it == names.end() ? ring_->name(i) : it->second);
    }
    std::vector<Term> out;
    for (const auto& t : terms_) {
      Exponents e(target->size(), 0);
      for (std::size_t i = 0; i < t.exps.size(); ++i) e[map[i]] += t.exps[i];
      out.push_back({std::move(e), t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  MPoly& operator+=(const MPoly& o) { return *this = add(*this, o, false); }
  MPoly& operator-=(const MPoly& o) { return *this = add(*this, o, true); }
  MPoly& operator*=(const MPoly& o) { return *this = mul(*this, o); }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return add(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return add(a, b, true); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return mul(a, b); }
  MPoly operator-() const {
    MPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }
  MPoly scaled(const Rat& c) const {
    if (c.is_zero()) return MPoly::constant(ring_, Rat(0));
    MPoly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }
  MPoly pow(unsigned e) const {
    MPoly out = MPoly(1).lifted(ring_);
    MPoly b = *this;
    while (e) {
      if (e & 1u) out = out * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return out;
  }
  MPoly derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      int k = t.exps.at(var);
      if (!k) continue;
      Term u = t;
      u.exps[var] -= 1;
      u.coeff *= Rat(k);
      out.push_back(std::move(u));
    }
    return from_terms(ring_, std::move(out));
  }

  /// Substitute images[i] for variable i; all images must share one ring.
  MPoly substitute(const std::vector<MPoly>& images) const {
    if (images.size() != nvars()) throw std::invalid_argument("MPoly::substitute: wrong number of images");
    RingPtr target;
    for (const auto& im : images)
      if (im.ring_) target = im.ring_;
    std::vector<std::vector<MPoly>> powers(nvars());
    MPoly out = MPoly(0).lifted(target);
    for (const auto& t : terms_) {
      MPoly m = MPoly(t.coeff).lifted(target);
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        int k = t.exps[i];
        if (!k) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(MPoly(1).lifted(target));
        while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
        m = m * pw[k];
      }
      out += m;
    }
    return out;
  }

  template <class T>
  T evaluate(const std::vector<T>& values) const {
    if (values.size() != nvars()) throw std::invalid_argument("MPoly::evaluate: wrong number of values");
    T out(0);
    for (const auto& t : terms_) {
      T m = T(t.coeff);
      for (std::size_t i = 0; i < t.exps.size(); ++i)
        for (int k = 0; k < t.exps[i]; ++k) m = m * values[i];
      out = out + m;
    }
    return out;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.terms_.empty()) return true;
    if (a.ring_ != b.ring_) {
      if (a.ring_ && b.ring_ && !(*a.ring_ == *b.ring_)) return false;
      if (!a.ring_ || !b.ring_) {
        if (!a.is_constant() || !b.is_constant()) return false;
        return a.constant_value() == b.constant_value();
      }
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = t.coeff.sign() < 0;
      Rat c = neg ? -t.coeff : t.coeff;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < t.exps.size(); ++i) {
        if (!t.exps[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->name(i);
        if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
      }
      if (mono.empty()) {
        s += c.to_string();
      } else if (c.is_one()) {
        s += mono;
      } else {
        s += c.to_string() + "*" + mono;
      }
    }
    return s;
  }

  /// Inverse of to_string (whitespace tolerant).
  static MPoly parse(const RingPtr& ring, std::string_view text);

 private:
  std::vector<int> weights() const { return ring_ ? ring_->weights() : std::vector<int>{}; }

  void normalize() {
    auto w = weights();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps, w) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exps == t.exps) {
        out.back().coeff += t.coeff;
      } else {
        out.push_back(std::move(t));
      }
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    // merging can leave a zero in the middle only if equal exponents were
    // split, which sorting rules out; drop any that remain
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff.is_zero(); }), out.end());
    terms_ = std::move(out);
  }

  static RingPtr common(const MPoly& a, const MPoly& b) {
    if (!a.ring_) return b.ring_;
    if (!b.ring_ || a.ring_ == b.ring_) return a.ring_;
    if (*a.ring_ == *b.ring_) return a.ring_;
    throw std::invalid_argument("MPoly: operands live in different rings");
  }

  static MPoly add(const MPoly& a0, const MPoly& b0, bool subtract) {
    RingPtr r = common(a0, b0);
    MPoly a = a0.lifted(r), b = b0.lifted(r);
    auto w = a.weights();
    MPoly out;
    out.ring_ = r;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) c = -1;
      else if (j == b.terms_.size()) c = 1;
      else c = grlex_compare(a.terms_[i].exps, b.terms_[j].exps, w);
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        out.terms_.push_back(std::move(t));
      } else {
        Rat s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) out.terms_.push_back({a.terms_[i].exps, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static MPoly mul(const MPoly& a0, const MPoly& b0) {
    RingPtr r = common(a0, b0);
    MPoly a = a0.lifted(r), b = b0.lifted(r);
    MPoly out;
    out.ring_ = r;
    if (a.is_zero() || b.is_zero()) return out;
    auto w = a.weights();
    auto cmp = [&w](const Exponents& x, const Exponents& y) { return grlex_compare(x, y, w) > 0; };
    std::map<Exponents, Rat, decltype(cmp)> acc(cmp);
    Exponents e(a.nvars());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.exps[k] + t.exps[k];
        auto [it, fresh] = acc.try_emplace(e, s.coeff * t.coeff);
        if (!fresh) it->second += s.coeff * t.coeff;
      }
    for (auto& [ex, c] : acc)
      if (!c.is_zero()) out.terms_.push_back({ex, c});
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline MPoly MPoly::parse(const RingPtr& ring, std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("MPoly::parse: " + msg + " at offset " + std::to_string(pos) + " in '" +
                                std::string(text) + "'");
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };
  auto read_name = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
      ++pos;
    if (start == pos) fail("expected a variable name");
    return std::string(text.substr(start, pos - start));
  };

  std::vector<Term> terms;
  std::size_t nv = ring ? ring->size() : 0;
  skip();
  if (text.substr(pos) == "0") return MPoly::constant(ring, Rat(0));
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Rat c(1);
    Exponents e(nv, 0);
    bool need_factor = true;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_uint();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        num += "/" + read_uint();
      }
      c = Rat::parse(num);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      } else {
        need_factor = false;
      }
    }
    while (need_factor) {
      std::string name = read_name();
      if (!ring) fail("variable in a ring-less polynomial");
      std::size_t vi = ring->index(name);
      int k = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        k = std::stoi(read_uint());
        skip();
      }
      e[vi] += k;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      } else {
        need_factor = false;
      }
    }
    terms.push_back({std::move(e), neg ? -c : c});
  }
  return MPoly::from_terms(ring, std::move(terms));
}

/// e_k(values); e_0 = 1.
template <class T>
T elementary_symmetric(std::size_t k, const std::vector<T>& values) {
  if (k > values.size()) throw std::out_of_range("elementary_symmetric: k out of range");
  std::vector<T> e(k + 1, T(0));
  e[0] = T(1);
  for (const auto& v : values)
    for (std::size_t j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * v;
  return e[k];
}

}  // namespace perisplit
