#pragma once

#include <string>
#include <vector>

#include "hodgeint/partition.hpp"

namespace hodgeint {

/// Outcome of one verification: ok means every tested identity held exactly;
/// residuals lists human-readable descriptions of any mismatches (capped).
struct CheckReport {
  bool ok = true;
  std::vector<std::string> residuals;

  void fail(std::string what) {
    ok = false;
    if (residuals.size() < 40) residuals.push_back(std::move(what));
  }
  void merge(const CheckReport& o) {
    if (o.ok) return;
    ok = false;
    for (const auto& r : o.residuals)
      if (residuals.size() < 40) residuals.push_back(r);
  }
};

/// Row and column orthogonality of the S_d character table, plus the
/// hook-length dimension cross-check, for the single degree d.
CheckReport check_orthogonality(long d);

/// f_nu(2) == kappa(nu)/2 for all |nu| <= dmax.
CheckReport check_f2(long dmax);

/// The d = 2 Burnside matrix against the exact cosh/sinh exponential sums,
/// and Phi(0) = delta/z for all d <= dmax.
CheckReport check_phi_init(long dmax);

/// Sign symmetry under tensoring with the alternating representation and
/// plain index symmetry of Phi, d <= dmax.
CheckReport check_phi_symmetry(long dmax);

/// Sum formula Phi(l)ZPhi(l) = Phi(2l) and inverse Phi(l)ZPhi(-l) = Z^{-1},
/// exactly at the exponential-sum level, for the single degree d.
CheckReport check_sum_formula(long d);

/// Derivative identity dPhi = CJ Phi = Phi CJ^t for degree d, plus
/// character-vector eigenvectors with eigenvalue kappa/2.
CheckReport check_cut_join_phi(long d);

/// Operator-route cut-and-join matrix against the Hurwitz-number route for
/// degree d.
CheckReport check_cut_join_routes(long d);

/// Cross-route W equality (defining route vs skew route) and symmetry for
/// all |mu| <= dplus, |nu| <= dminus.
CheckReport check_key(long dplus, long dminus);

/// Cut-and-join residual of the disconnected family is zero to the order.
CheckReport check_rcj(long dplus, long dminus, long order);

/// tau = -1 initial values: skew-sum form per entry and connected closed
/// forms.
CheckReport check_initial(long dplus, long dminus, long order);

/// k_via_kg == k_via_w and tau-freeness for every pair within caps.
CheckReport check_kg(long dplus, long dminus, long order);

/// Reconstruction of the disconnected family from K matches it entrywise.
CheckReport check_gk(long dplus, long dminus, long order);

/// Frozen extraction values and tau-independence of the one-point
/// coefficients up to genus 3.
CheckReport check_hodge_values();

}  // namespace hodgeint
