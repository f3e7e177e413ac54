#pragma once

#include <utility>
#include <vector>

#include "hodgeint/laurent.hpp"
#include "hodgeint/numeric.hpp"

namespace hodgeint {
namespace polydetail {

// Dense univariate polynomials, coefficient of x^k at index k, no trailing
// zeros.  Only what rational-function canonicalization needs lives here.

template <class F>
void trim(std::vector<F>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class F>
std::vector<F> mul(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<F> r(a.size() + b.size() - 1, F{});
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Field division with remainder: a = q*b + r, deg r < deg b.
template <class F>
std::pair<std::vector<F>, std::vector<F>> divmod(std::vector<F> a,
                                                 const std::vector<F>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  std::vector<F> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, F{});
  while (a.size() >= b.size()) {
    F c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

template <class F>
std::vector<F> exact_div(const std::vector<F>& a, const std::vector<F>& b) {
  auto [q, r] = divmod<F>(a, b);
  if (!r.empty()) throw DomainError("polynomial division was not exact");
  return q;
}

inline Integer content(const std::vector<Integer>& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_by(std::vector<Integer>& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

inline std::vector<Integer> primitive(std::vector<Integer> p) {
  trim(p);
  if (p.empty()) return p;
  Integer g = content(p);
  if (sgn(p.back()) < 0) g = -g;
  if (g != 1) divide_by(p, g);
  return p;
}

/// lc(b)^k * a mod b computed over Z (k = number of reduction steps).
inline std::vector<Integer> pseudo_rem(std::vector<Integer> a,
                                       const std::vector<Integer>& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    Integer la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

/// Primitive polynomial remainder sequence; keeps integer coefficients small
/// enough for the large v-polynomials behind the W-function identities.
inline std::vector<Integer> gcd_int(std::vector<Integer> a, std::vector<Integer> b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Integer> r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::vector<Integer> to_int_primitive(const std::vector<Rational>& p) {
  Integer l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(Integer(c.get_num() * (l / c.get_den())));
  return primitive(std::move(r));
}

inline std::vector<Rational> gcd_poly(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
  std::vector<Integer> g = gcd_int(to_int_primitive(a), to_int_primitive(b));
  std::vector<Rational> r;
  r.reserve(g.size());
  for (const auto& c : g) r.push_back(Rational(c));
  return r;
}

/// Monic Euclid; fine for the small tau-degree polynomials over Q(i).
inline std::vector<GaussianRational> gcd_poly(std::vector<GaussianRational> a,
                                              std::vector<GaussianRational> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto r = divmod<GaussianRational>(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    GaussianRational inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

template <class F>
std::vector<F> from_laurent(const LaurentPoly<F>& p, long base) {
  std::vector<F> r;
  if (p.is_zero_poly()) return r;
  r.assign(static_cast<size_t>(p.deg() - base + 1), F{});
  for (auto& [e, c] : p.terms) r[static_cast<size_t>(e - base)] = c;
  return r;
}

template <class F>
LaurentPoly<F> to_laurent(const std::vector<F>& p, long base) {
  LaurentPoly<F> r;
  for (size_t k = 0; k < p.size(); ++k)
    if (!is_zero(p[k])) r.terms.emplace(base + static_cast<long>(k), p[k]);
  return r;
}

}  // namespace polydetail

/// Rational function in one variable over the field F, canonical form:
/// numerator/denominator coprime, denominator an ordinary polynomial with
/// nonzero constant term and leading coefficient 1.  The numerator may carry
/// a (possibly negative) power of the variable.
template <class F>
struct RationalFunctionT {
  LaurentPoly<F> num;
  LaurentPoly<F> den = LaurentPoly<F>(rational(1));

  RationalFunctionT() = default;
  RationalFunctionT(const Rational& c) : num(LaurentPoly<F>(c)) {}
  RationalFunctionT(LaurentPoly<F> n) : num(std::move(n)) {}
  RationalFunctionT(LaurentPoly<F> n, LaurentPoly<F> d)
      : num(std::move(n)), den(std::move(d)) {
    canonicalize();
  }

  static RationalFunctionT monomial(long e, F c) {
    return RationalFunctionT(LaurentPoly<F>::monomial(e, std::move(c)));
  }

  bool is_zero_fn() const { return num.is_zero_poly(); }

  void canonicalize() {
    if (den.is_zero_poly()) throw DomainError("rational function with zero denominator");
    if (num.is_zero_poly()) {
      den = LaurentPoly<F>(rational(1));
      return;
    }
    long a = num.val(), b = den.val();
    auto n = polydetail::from_laurent(num, a);
    auto d = polydetail::from_laurent(den, b);
    auto g = polydetail::gcd_poly(n, d);
    if (g.size() > 1) {
      n = polydetail::exact_div<F>(n, g);
      d = polydetail::exact_div<F>(d, g);
    }
    F inv = F(rational(1)) / d.back();
    for (auto& c : n) c *= inv;
    for (auto& c : d) c *= inv;
    num = polydetail::to_laurent(n, a - b);
    den = polydetail::to_laurent(d, 0);
  }

  RationalFunctionT operator-() const {
    RationalFunctionT r;
    r.num = -num;
    r.den = den;
    return r;
  }
  RationalFunctionT operator+(const RationalFunctionT& o) const {
    return RationalFunctionT(num * o.den + o.num * den, den * o.den);
  }
  RationalFunctionT operator-(const RationalFunctionT& o) const {
    return RationalFunctionT(num * o.den - o.num * den, den * o.den);
  }
  RationalFunctionT operator*(const RationalFunctionT& o) const {
    return RationalFunctionT(num * o.num, den * o.den);
  }
  RationalFunctionT operator/(const RationalFunctionT& o) const {
    if (o.is_zero_fn()) throw DomainError("rational function division by zero");
    return RationalFunctionT(num * o.den, den * o.num);
  }
  RationalFunctionT& operator+=(const RationalFunctionT& o) { return *this = *this + o; }
  RationalFunctionT& operator-=(const RationalFunctionT& o) { return *this = *this - o; }
  RationalFunctionT& operator*=(const RationalFunctionT& o) { return *this = *this * o; }
  RationalFunctionT& operator/=(const RationalFunctionT& o) { return *this = *this / o; }

  RationalFunctionT pow(long e) const {
    RationalFunctionT base = *this;
    if (e < 0) {
      base = RationalFunctionT(Rational(rational(1))) / base;
      e = -e;
    }
    RationalFunctionT r{Rational(rational(1))};
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const RationalFunctionT& o) const {
    return num == o.num && den == o.den;
  }
};

template <class F>
inline bool is_zero(const RationalFunctionT<F>& f) {
  return f.is_zero_fn();
}

/// Rational functions in v (q = v*v) over Q: the home of the W invariants
/// and principal specializations.
using RationalFunction = RationalFunctionT<Rational>;

/// v^e as a rational function.
inline RationalFunction v_power(long e) {
  return RationalFunction::monomial(e, rational(1));
}

/// q^e = v^{2e}.
inline RationalFunction q_power(long e) { return v_power(2 * e); }

/// The quantum bracket [m] = v^m - v^{-m}.
inline RationalFunction quantum_bracket(long m) {
  LaurentPoly<Rational> p;
  p.add_term(m, rational(1));
  p.add_term(-m, rational(-1));
  return RationalFunction(std::move(p));
}

}  // namespace hodgeint
