#pragma once

#include <string>
#include <vector>

#include "perisplit/exactcore/mpoly.hpp"

namespace perisplit {

class MonomialOrder {
 public:
  enum class Kind { Lex, Grlex, Grevlex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::Grlex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  /// Weighted degree in the killed block first, grevlex to break ties.
  static MonomialOrder elimination(std::vector<bool> kill) { return MonomialOrder(Kind::Elimination, std::move(kill)); }

  Kind kind() const { return kind_; }
  const std::vector<bool>& killed() const { return kill_; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::Grlex: return "grlex";
      case Kind::Grevlex: return "grevlex";
      case Kind::Elimination: return "elim";
    }
    return "?";
  }

  int compare(const Exponents& a, const Exponents& b, const std::vector<int>& w) const {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
      case Kind::Grlex:
        return grlex_compare(a, b, w);
      case Kind::Elimination: {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (kill_[i]) {
            da += static_cast<long>(a[i]) * w[i];
            db += static_cast<long>(b[i]) * w[i];
          }
        if (da != db) return da < db ? -1 : 1;
        return grevlex(a, b, w);
      }
      case Kind::Grevlex:
        return grevlex(a, b, w);
    }
    return 0;
  }

 private:
  MonomialOrder(Kind k, std::vector<bool> kill) : kind_(k), kill_(std::move(kill)) {}

  static int grevlex(const Exponents& a, const Exponents& b, const std::vector<int>& w) {
    long da = weighted_degree(a, w), db = weighted_degree(b, w);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  Kind kind_;
  std::vector<bool> kill_;
};

}  // namespace perisplit
