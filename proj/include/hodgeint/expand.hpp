#pragma once

#include "hodgeint/numeric.hpp"
#include "hodgeint/ratfun.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

/// Expands a Laurent polynomial in v at v = e^{i lambda / 2}: every monomial
/// c v^e contributes c * exp(i e lambda / 2).
inline Series<GaussianRational> expand_poly_at_unity(const LaurentPoly<Rational>& p,
                                                     long order) {
  Series<GaussianRational> acc = Series<GaussianRational>::zero(order);
  for (auto& [e, c] : p.terms) {
    GaussianRational freq = GaussianRational::i() * GaussianRational(rational(e, 2));
    acc += series_exp(freq, order).scaled(GaussianRational(c));
  }
  return acc;
}

/// Expands a rational function of v as a lambda-Laurent series at q = e^{i
/// lambda}, i.e. v = e^{i lambda / 2}.  The denominator vanishes at lambda=0
/// to order at most (#nonzero denominator terms - 1), which fixes the extra
/// working precision needed for the division.
inline Series<GaussianRational> expand_at_unity(const RationalFunctionT<Rational>& f,
                                                long order) {
  if (f.is_zero_fn()) return Series<GaussianRational>::zero(order);
  long pad = 2 * (static_cast<long>(f.den.terms.size()) - 1);
  long working = order + pad;
  Series<GaussianRational> n = expand_poly_at_unity(f.num, working);
  Series<GaussianRational> d = expand_poly_at_unity(f.den, working);
  if (d.is_zero_series())
    throw InsufficientPrecision("denominator expansion vanished to working order " +
                                std::to_string(working));
  Series<GaussianRational> q = n / d;
  if (q.order < order)
    throw InsufficientPrecision("expansion carries order " + std::to_string(q.order) +
                                " but order " + std::to_string(order) + " was requested");
  return q.truncated(order);
}

}  // namespace hodgeint
