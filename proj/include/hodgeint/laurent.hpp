#pragma once

#include <map>
#include <utility>

#include "hodgeint/numeric.hpp"

namespace hodgeint {

/// Laurent polynomial in one variable over R: finite exponent -> coefficient
/// map with no stored zeros.  The same template serves polynomials in tau
/// (exponents of either sign) and in v = q^{1/2}.
template <class R>
struct LaurentPoly {
  std::map<long, R> terms;

  LaurentPoly() = default;

  /// Constant polynomial; doubles as the canonical embedding of Q.
  LaurentPoly(const Rational& c) {
    if (!is_zero(c)) terms.emplace(0, R(c));
  }

  static LaurentPoly monomial(long e, R c) {
    LaurentPoly p;
    if (!is_zero(c)) p.terms.emplace(e, std::move(c));
    return p;
  }
  static LaurentPoly constant(R c) { return monomial(0, std::move(c)); }

  bool is_zero_poly() const { return terms.empty(); }

  long val() const {
    if (terms.empty()) throw DomainError("valuation of zero polynomial");
    return terms.begin()->first;
  }
  long deg() const {
    if (terms.empty()) throw DomainError("degree of zero polynomial");
    return terms.rbegin()->first;
  }

  R coeff(long e) const {
    auto it = terms.find(e);
    return it == terms.end() ? R{} : it->second;
  }

  void add_term(long e, const R& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms)
      for (auto& [e2, c2] : o.terms) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }

  /// Multiplication by x^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (auto& [e, c] : terms) r.terms.emplace(e + k, c);
    return r;
  }

  template <class S>
  LaurentPoly scaled(const S& s) const {
    LaurentPoly r;
    for (auto& [e, c] : terms) r.add_term(e, c * s);
    return r;
  }

  /// d/dx, with x^e -> e x^{e-1} for every integer e.
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (auto& [e, c] : terms) {
      if (e == 0) continue;
      r.add_term(e - 1, c * R(rational(e)));
    }
    return r;
  }

  /// Substitutes x := s where s is a unit with given inverse (handles
  /// negative exponents); used for tau := -1.
  R eval_unit(const R& s, const R& s_inv) const {
    R acc{};
    for (auto& [e, c] : terms) {
      R p(rational(1));
      long n = e < 0 ? -e : e;
      const R& base = e < 0 ? s_inv : s;
      for (long k = 0; k < n; ++k) p *= base;
      acc += c * p;
    }
    return acc;
  }
};

template <class R>
inline bool is_zero(const LaurentPoly<R>& p) {
  return p.is_zero_poly();
}

template <class R>
inline LaurentPoly<R> operator*(const LaurentPoly<R>& p, const Rational& s) {
  return p.scaled(s);
}

template <class R>
inline LaurentPoly<R> operator*(const Rational& s, const LaurentPoly<R>& p) {
  return p.scaled(s);
}

using TauPoly = LaurentPoly<GaussianRational>;

inline TauPoly tau_constant(GaussianRational c) {
  return TauPoly::constant(std::move(c));
}

}  // namespace hodgeint
