#pragma once

#include "hodgeint/hurwitz.hpp"
#include "hodgeint/laurent.hpp"
#include "hodgeint/partition.hpp"
#include "hodgeint/pfamily.hpp"
#include "hodgeint/ratfun.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

/// Lambda-series whose coefficients are Laurent polynomials in tau over Q(i).
using TauSeries = Series<TauPoly>;

/// Rational function in tau over Q(i).
using TauRatFun = RationalFunctionT<GaussianRational>;

/// Disconnected two-point-family entry:
/// R_{mu+,mu-} = sum over nu+/nu- of the given sizes of
///   [chi(nu+,mu+)/z_{mu+}] [chi(nu-,mu-)/z_{mu-}]
///   exp(i (kappa(nu+) tau + kappa(nu-) / tau) lambda / 2)
///   W_{nu+,nu-}(e^{i lambda}),
/// truncated at the requested order.  The lambda-valuation is at least
/// -(|mu+| + |mu-|).
TauSeries r_entry(const Partition& mu_plus, const Partition& mu_minus, long order);

/// All entries within caps, each at the declared order.
BigradedFamily<TauSeries> r_family(long dplus, long dminus, long order);

/// Left action of the cut-and-join matrix on the plus index:
/// out(mu+, mu-) = sum_eta CJ_{|mu+|}[mu+][eta] f(eta, mu-); zero on the
/// |mu+| = 0 slice.  `on_plus = false` acts on the minus index instead.
BigradedFamily<TauSeries> apply_cut_join(const BigradedFamily<TauSeries>& f,
                                         bool on_plus);

/// d/dtau R - i lambda CJ+ R + (i lambda / tau^2) CJ- R, entrywise; zero to
/// the declared order exactly when the cut-and-join equation holds.
BigradedFamily<TauSeries> rcj_residual(long dplus, long dminus, long order);

/// Substitutes tau := -1 into every coefficient.
Series<GaussianRational> eval_tau_minus_one(const TauSeries& s);

/// The skew-Schur form of the tau = -1 specialization:
/// sum over nu+/nu- of [chi chi / z z] times the expansion of
/// sum_rho neg_half_spec(nu+, rho) neg_half_spec(nu-, rho).
Series<GaussianRational> initial_skew_entry(const Partition& mu_plus,
                                            const Partition& mu_minus, long order);

/// Closed form of the connected family at tau = -1: expansion of
/// (-1)^{m-1}/(m [m]) on the ((m), {}) and ({}, (m)) slices, the constant
/// 1/m on ((m), (m)), zero elsewhere.
Series<GaussianRational> initial_connected_closed_form(const Partition& mu_plus,
                                                       const Partition& mu_minus,
                                                       long order);

/// Connected family: log of r_family in the bigraded algebra.  Cached per
/// (caps, order).
const BigradedFamily<TauSeries>& g_connected(long dplus, long dminus, long order);

/// Coefficient of lambda^{2g-2+l(mu+)+l(mu-)} in the connected entry, as a
/// Laurent polynomial in tau.
TauPoly hodge_coefficient(long g, const Partition& mu_plus, const Partition& mu_minus);

/// The explicit prefactor multiplying the bracketed integral in the
/// lambda-coefficient formula:
/// -(i)^{l+ + l-} / (z_{mu+} z_{mu-}) [tau(tau+1)]^{l+ + l- - 1}
/// prod_i prod_{a=1}^{mu+_i - 1} (mu+_i tau + a) / mu+_i!
/// prod_j prod_{a=1}^{mu-_j - 1} (mu-_j / tau + a) / mu-_j!.
TauRatFun hodge_prefactor(const Partition& mu_plus, const Partition& mu_minus);

/// hodge_coefficient divided by hodge_prefactor: the bare integral value as
/// an exact rational function in tau.
TauRatFun normalized_integral(long g, const Partition& mu_plus,
                              const Partition& mu_minus);

/// K entry by the character-weighted W sum (manifestly tau-free).
Series<GaussianRational> k_via_w(const Partition& mu_plus, const Partition& mu_minus,
                                 long order);

/// K entry assembled from the R family with the -i tau / -i/tau scalings;
/// must match k_via_w after the tau-dependence cancels.
TauSeries k_via_kg(const Partition& mu_plus, const Partition& mu_minus, long order);

/// Reconstructs the disconnected family from K with the +i tau / +i/tau
/// scalings; must reproduce r_family.
BigradedFamily<TauSeries> gk_reconstruction(long dplus, long dminus, long order);

/// True when no coefficient involves a nonzero power of tau.
bool tau_free(const TauSeries& s);

/// Drops the (verified trivial) tau-dependence; throws DomainError if any
/// coefficient has a nonzero tau power.
Series<GaussianRational> collapse_tau(const TauSeries& s);

}  // namespace hodgeint
