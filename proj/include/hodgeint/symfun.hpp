#pragma once

#include "hodgeint/partition.hpp"
#include "hodgeint/ppoly.hpp"
#include "hodgeint/ratfun.hpp"

namespace hodgeint {

/// Complete homogeneous h_k at the geometric alphabet (1, q, q^2, ...):
/// prod_{i=1}^{k} 1/(1 - q^i); h_0 = 1, h_k = 0 for k < 0.
RationalFunction h_principal(long k);

/// Skew Schur s_{nu/rho} at (1, q, q^2, ...), via the determinant
/// det( h_{nu_i - rho_j - i + j} ). Zero when rho is not contained in nu.
/// Results are memoized.
RationalFunction principal_spec(const Partition& nu, const Partition& rho);

/// Skew Schur s_{nu/rho} at x_i = -v^{2i-1}, equal to
/// (-v)^{|nu|-|rho|} * principal_spec(nu, rho).
RationalFunction neg_half_spec(const Partition& nu, const Partition& rho);

/// Closed form for the straight shape: s_nu at x_i = q^i equals
/// q^{n(nu)} / prod_{cells} (1 - q^{hook}).
RationalFunction hook_content_spec(const Partition& nu);

/// Determinant over the fraction field, by Gaussian elimination with pivoting.
RationalFunction ratfun_det(std::vector<std::vector<RationalFunction>> m);

}  // namespace hodgeint
