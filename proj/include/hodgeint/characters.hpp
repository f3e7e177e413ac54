#pragma once

#include <vector>

#include "hodgeint/numeric.hpp"
#include "hodgeint/partition.hpp"

namespace hodgeint {

/// Irreducible character chi_nu evaluated on the conjugacy class C_mu,
/// computed by border-strip removal with memoization.  The in-memory memo is
/// optionally persisted per degree under the directory named by the
/// HODGE_CACHE_DIR environment variable.
Integer chi(const Partition& nu, const Partition& mu);

/// Dimension via chi_nu(1^d).
Integer dim_irrep(const Partition& nu);

/// Dimension via the hook length formula; an independent route kept for
/// cross-checking.
Integer dim_hook(const Partition& nu);

/// Central character of the transposition class, f_nu(2) =
/// |C_(2)| chi_nu(C_(2)) / dim R_nu; zero for |nu| < 2 where the class is
/// empty.  Always an integer in value, equal to kappa(nu)/2.
Rational f2(const Partition& nu);

/// Dense character table for S_d: entry (i, j) = chi of the i-th shape on
/// the j-th class, with both indices in the enumerate_partitions(d) order.
struct CharacterTable {
  long d;
  std::vector<Partition> basis;
  std::vector<std::vector<Integer>> values;
};

CharacterTable character_table(long d);

}  // namespace hodgeint
