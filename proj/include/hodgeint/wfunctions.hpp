#pragma once

#include <vector>

#include "hodgeint/partition.hpp"
#include "hodgeint/ratfun.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

/// W_mu = v^{kappa/2} prod_{i<j} [mu_i-mu_j+j-i]/[j-i]
///        prod_{i=1..l} prod_{a=1..mu_i} 1/[a-i+l], with [m] = v^m - v^{-m}.
RationalFunction w_mu(const Partition& mu);

/// Coefficients e_0 = 1, e_1, ..., e_K of t in
/// E_mu(t) = prod_j (1+q^{mu_j-j}t)/(1+q^{-j}t)
///           * (1 + sum_{n>=1} t^n / prod_{i=1..n}(q^i-1)),
/// truncated at t^K; exact rational functions in v (q = v^2).
std::vector<RationalFunction> e_mu_coeffs(const Partition& mu, long kmax);

/// W_{mu,nu} by the defining route: v^{|nu|} W_mu det(e_{nu'_i-i+j}) with the
/// dual Jacobi-Trudi determinant in the E_mu coefficients.
RationalFunction w_munu_def(const Partition& mu, const Partition& nu);

/// W_{mu,nu} by the skew-Schur double sum:
/// (-1)^{|mu|+|nu|} v^{kappa_mu+kappa_nu+|mu|+|nu|}
///   sum_{rho <= mu cap nu} q^{-|rho|} principal_spec(mu,rho) principal_spec(nu,rho).
RationalFunction w_munu_skew(const Partition& mu, const Partition& nu);

/// Memoized W_{mu,nu} (defining route) shared by the series assemblies.
const RationalFunction& w_munu(const Partition& mu, const Partition& nu);

/// Lambda-Laurent expansion of W_{mu,nu}(e^{i lambda}); valuation is at
/// least -(|mu|+|nu|).  Memoized per (mu, nu, order).
const Series<GaussianRational>& w_series(const Partition& mu, const Partition& nu,
                                         long order);

}  // namespace hodgeint
