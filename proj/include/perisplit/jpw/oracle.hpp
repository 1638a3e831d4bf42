#pragma once

#include <string>
#include <vector>

#include "perisplit/detvar/zprime.hpp"
#include "perisplit/groebner/koszul.hpp"
#include "perisplit/jpw/complex.hpp"

namespace perisplit {

/// The module whose Tor the closed forms describe, as a quotient by an ideal, together
/// with the variables of S acting on it.
struct JpwOracleModule {
  IdealPresentation ideal;
  std::vector<std::string> acting;  // empty: every variable of the ring
  int nvars = 0;                    // number of acting variables, all of degree 1
  std::string description;
};

/// 2r > n: Pfaffians of size 2(n - r) + 2 in the skew variables (g is free and drops out).
/// 2r <= n: O_Z' over the symmetric variables, or for O_Z the (2r + 1)-minors of g.
inline JpwOracleModule jpw_oracle_module(int n, int r, JpwRing ring = JpwRing::ZPrime, const ZPrimeOptions& zopts = {}) {
  check_interior_nr(n, r);
  JpwOracleModule m;
  if (2 * r > n || ring == JpwRing::Z) {
    m.ideal = z_ideal(generic_pair(n, r)).restricted_to_support();
    m.nvars = static_cast<int>(m.ideal.ring->size());
    m.description = 2 * r > n ? "Pfaffians of size " + std::to_string(2 * (n - r) + 2)
                              : "minors of size " + std::to_string(2 * r + 1) + " of symmetric g";
    return m;
  }
  ZPrimeIdeal z = z_prime_ideal(n, r, zopts);
  m.ideal = z.ideal;
  m.acting = z.g_names;
  m.nvars = static_cast<int>(z.g_names.size());
  m.description = "O_Z' over the symmetric variables (" + z.method + ")";
  return m;
}

/// Cells where betti_table_jpw and koszul_tor differ inside the box.
inline std::vector<std::string> jpw_oracle_diff(int n, int r, int max_i, int max_j, JpwRing ring = JpwRing::ZPrime,
                                                const KoszulOptions& kopts = {}) {
  ZPrimeOptions z;
  z.groebner = kopts.groebner;
  JpwOracleModule m = jpw_oracle_module(n, r, ring, z);
  KoszulOptions k = kopts;
  k.acting = m.acting;
  BettiTable oracle = koszul_tor(m.ideal, max_i, max_j, k);
  return betti_table_jpw(n, r, max_i, max_j, ring).diff(oracle);
}

}  // namespace perisplit
