#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "perisplit/exactcore/mpoly.hpp"

namespace perisplit {

/// A polynomial ring together with generators of an ideal in it.
struct IdealPresentation {
  RingPtr ring;
  std::vector<MPoly> generators;

  IdealPresentation() = default;
  IdealPresentation(RingPtr r, std::vector<MPoly> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      generators.push_back(g.ring() ? g.rebase(ring) : g.lifted(ring));
    }
  }

  bool is_graded() const {
    for (int w : ring->weights())
      if (w < 1) return false;
    for (const auto& g : generators)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  /// Same ideal with extra generators (rebased by name).
  IdealPresentation with(const std::vector<MPoly>& more) const {
    auto gens = generators;
    gens.insert(gens.end(), more.begin(), more.end());
    return IdealPresentation(ring, gens);
  }

  /// Same generators in a larger ring that shares variable names.
  IdealPresentation in_ring(const RingPtr& target) const { return IdealPresentation(target, generators); }

  /// Drop ambient variables that no generator uses.
  IdealPresentation restricted_to_support() const {
    std::vector<Variable> keep;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      bool used = false;
      for (const auto& g : generators)
        if (g.involves(i)) used = true;
      if (used) keep.push_back(ring->var(i));
    }
    return IdealPresentation(make_ring(keep), generators);
  }

  std::vector<std::string> serialized() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.to_string());
    return out;
  }
};

using RingPresentation = IdealPresentation;

}  // namespace perisplit
