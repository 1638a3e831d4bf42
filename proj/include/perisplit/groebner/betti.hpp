#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace perisplit {

/// A Schur functor label: S_lambda V, or S_lambda V* when dual.
struct PartitionRep {
  std::vector<int> parts;
  bool dual = false;
  int multiplicity = 1;

  std::string to_string() const {
    std::string s = "S(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    s += dual ? ")V*" : ")V";
    if (multiplicity != 1) s = std::to_string(multiplicity) + "*" + s;
    return s;
  }
  friend bool operator==(const PartitionRep& a, const PartitionRep& b) {
    return a.parts == b.parts && a.dual == b.dual && a.multiplicity == b.multiplicity;
  }
  friend bool operator<(const PartitionRep& a, const PartitionRep& b) {
    if (a.dual != b.dual) return a.dual < b.dual;
    return a.parts < b.parts;
  }
};

/// Graded Betti numbers dim Tor_i(M, Q)_j inside a box i <= cutoff_i, j <= cutoff_j.
class BettiTable {
 public:
  using Cell = std::pair<int, int>;

  BettiTable(int cutoff_i = 0, int cutoff_j = 0) : cutoff_i_(cutoff_i), cutoff_j_(cutoff_j) {}

  int cutoff_i() const { return cutoff_i_; }
  int cutoff_j() const { return cutoff_j_; }
  const std::map<Cell, unsigned long long>& entries() const { return entries_; }
  const std::map<Cell, std::vector<PartitionRep>>& labels() const { return labels_; }

  /// Adds to a cell; cells outside the box are ignored.
  void add(int i, int j, unsigned long long dim, const std::vector<PartitionRep>& labels = {}) {
    if (i < 0 || j < 0 || i > cutoff_i_ || j > cutoff_j_ || dim == 0) return;
    entries_[{i, j}] += dim;
    auto& l = labels_[{i, j}];
    l.insert(l.end(), labels.begin(), labels.end());
    if (l.empty()) labels_.erase({i, j});
  }
  unsigned long long at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  /// Same box, dimensions only.
  BettiTable without_labels() const {
    BettiTable t(cutoff_i_, cutoff_j_);
    t.entries_ = entries_;
    return t;
  }
  BettiTable restricted(int max_i, int max_j) const {
    BettiTable t(std::min(max_i, cutoff_i_), std::min(max_j, cutoff_j_));
    for (const auto& [c, d] : entries_)
      if (c.first <= t.cutoff_i_ && c.second <= t.cutoff_j_) t.entries_[c] = d;
    for (const auto& [c, l] : labels_)
      if (c.first <= t.cutoff_i_ && c.second <= t.cutoff_j_) t.labels_[c] = l;
    return t;
  }

  /// Sum over i of (-1)^i dim Tor_{i,j}.
  long long euler(int j) const {
    long long s = 0;
    for (const auto& [c, d] : entries_)
      if (c.second == j) s += (c.first % 2 ? -1LL : 1LL) * static_cast<long long>(d);
    return s;
  }

  /// Cells whose dimensions differ, formatted "(i,j): a != b".
  std::vector<std::string> diff(const BettiTable& other) const {
    std::vector<std::string> out;
    std::map<Cell, std::pair<unsigned long long, unsigned long long>> all;
    for (const auto& [c, d] : entries_) all[c].first = d;
    for (const auto& [c, d] : other.entries_) all[c].second = d;
    for (const auto& [c, p] : all)
      if (p.first != p.second)
        out.push_back("(" + std::to_string(c.first) + "," + std::to_string(c.second) + "): " +
                      std::to_string(p.first) + " != " + std::to_string(p.second));
    return out;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries_ == b.entries_; }

  nlohmann::json to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [c, d] : entries_) {
      nlohmann::json cell{{"i", c.first}, {"j", c.second}, {"dim", d}};
      nlohmann::json l = nlohmann::json::array();
      auto it = labels_.find(c);
      if (it != labels_.end())
        for (const auto& p : it->second) l.push_back(p.to_string());
      cell["labels"] = l;
      e.push_back(cell);
    }
    return {{"entries", e}, {"cutoff_i", cutoff_i_}, {"cutoff_j", cutoff_j_}};
  }

  /// Reads dimensions back; labels are kept as opaque strings and dropped.
  static BettiTable from_json(const nlohmann::json& j) {
    BettiTable t(j.at("cutoff_i").get<int>(), j.at("cutoff_j").get<int>());
    for (const auto& cell : j.at("entries"))
      t.entries_[{cell.at("i").get<int>(), cell.at("j").get<int>()}] = cell.at("dim").get<unsigned long long>();
    return t;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "i,j,dim,labels\n";
    for (const auto& [c, d] : entries_) {
      os << c.first << ',' << c.second << ',' << d << ",\"";
      auto it = labels_.find(c);
      if (it != labels_.end())
        for (std::size_t k = 0; k < it->second.size(); ++k) os << (k ? " " : "") << it->second[k].to_string();
      os << "\"\n";
    }
    return os.str();
  }

  /// Rows i, columns j, '.' for zero.
  std::string to_text() const {
    std::ostringstream os;
    os << "i\\j";
    for (int j = 0; j <= cutoff_j_; ++j) os << '\t' << j;
    os << '\n';
    for (int i = 0; i <= cutoff_i_; ++i) {
      os << i;
      for (int j = 0; j <= cutoff_j_; ++j) {
        auto d = at(i, j);
        os << '\t';
        if (d)
          os << d;
        else
          os << '.';
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  int cutoff_i_, cutoff_j_;
  std::map<Cell, unsigned long long> entries_;
  std::map<Cell, std::vector<PartitionRep>> labels_;
};

}  // namespace perisplit
