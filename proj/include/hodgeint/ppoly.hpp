#pragma once

#include <map>

#include "hodgeint/numeric.hpp"
#include "hodgeint/partition.hpp"

namespace hodgeint {

/// Polynomial in the power sums: finite map from partitions to coefficients,
/// p_mu meaning the monomial p_{mu_1} ... p_{mu_l}.
template <class C = Rational>
struct PPoly {
  std::map<Partition, C> terms;

  static PPoly monomial(Partition mu, C c) {
    PPoly p;
    if (!is_zero(c)) p.terms.emplace(std::move(mu), std::move(c));
    return p;
  }

  bool is_zero_poly() const { return terms.empty(); }

  C coeff(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? C{} : it->second;
  }

  void add_term(const Partition& mu, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms.emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }

  PPoly operator+(const PPoly& o) const {
    PPoly r = *this;
    for (auto& [mu, c] : o.terms) r.add_term(mu, c);
    return r;
  }
  PPoly operator-(const PPoly& o) const {
    PPoly r = *this;
    for (auto& [mu, c] : o.terms) r.add_term(mu, -c);
    return r;
  }
  PPoly operator*(const PPoly& o) const {
    PPoly r;
    for (auto& [a, ca] : terms)
      for (auto& [b, cb] : o.terms) r.add_term(union_parts(a, b), ca * cb);
    return r;
  }
  PPoly& operator+=(const PPoly& o) {
    for (auto& [mu, c] : o.terms) add_term(mu, c);
    return *this;
  }

  template <class S>
  PPoly scaled(const S& s) const {
    PPoly r;
    for (auto& [mu, c] : terms) r.add_term(mu, c * s);
    return r;
  }

  bool operator==(const PPoly& o) const { return terms == o.terms; }
};

template <class C>
inline bool is_zero(const PPoly<C>& p) {
  return p.is_zero_poly();
}

using PPolynomial = PPoly<Rational>;

/// s_nu = sum over |mu| = |nu| of chi_nu(C_mu)/z_mu p_mu.
PPolynomial schur_in_p(const Partition& nu);

/// Applies (1/2) sum_{i,j>=1} [(i+j) p_i p_j d/dp_{i+j} + i j p_{i+j}
/// d^2/dp_i dp_j], ordered pairs; preserves total degree.
PPolynomial cut_join_apply(const PPolynomial& e);

}  // namespace hodgeint
