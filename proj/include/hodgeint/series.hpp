#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hodgeint/laurent.hpp"
#include "hodgeint/numeric.hpp"

namespace hodgeint {

/// Laurent series in lambda truncated at an explicit order: coefficients are
/// exact for every exponent <= order and unknown beyond it.  The exact zero
/// series is encoded as val = order + 1 with no coefficients.
template <class R>
struct Series {
  long val = 1;
  long order = 0;
  std::vector<R> c;  // c[k] is the coefficient of lambda^{val+k}

  Series() = default;

  static Series zero(long ord) {
    Series s;
    s.val = ord + 1;
    s.order = ord;
    return s;
  }

  static Series monomial(long e, R x, long ord) {
    Series s = zero(ord);
    if (e <= ord && !is_zero(x)) {
      s.val = e;
      s.c.assign(static_cast<size_t>(ord - e + 1), R{});
      s.c[0] = std::move(x);
    }
    return s;
  }

  static Series constant(R x, long ord) { return monomial(0, std::move(x), ord); }

  bool is_zero_series() const { return val > order; }

  /// Valuation used in order bookkeeping: order + 1 for the zero series.
  long val_effective() const { return is_zero_series() ? order + 1 : val; }

  void normalize() {
    size_t lead = 0;
    while (lead < c.size() && is_zero(c[lead])) ++lead;
    if (lead == c.size()) {
      c.clear();
      val = order + 1;
      return;
    }
    if (lead > 0) {
      c.erase(c.begin(), c.begin() + static_cast<long>(lead));
      val += static_cast<long>(lead);
    }
  }

  const R& coeff(long e) const {
    static const R zero_r{};
    if (e > order)
      throw InsufficientPrecision("coefficient of lambda^" + std::to_string(e) +
                                  " requested beyond declared order " +
                                  std::to_string(order));
    if (e < val || is_zero_series()) return zero_r;
    return c[static_cast<size_t>(e - val)];
  }

  Series truncated(long new_order) const {
    if (new_order > order)
      throw InsufficientPrecision("truncation to order " + std::to_string(new_order) +
                                  " exceeds declared order " + std::to_string(order));
    Series s;
    s.order = new_order;
    if (is_zero_series() || val > new_order) {
      s.val = new_order + 1;
      return s;
    }
    s.val = val;
    s.c.assign(c.begin(), c.begin() + static_cast<long>(new_order - val + 1));
    s.normalize();
    return s;
  }

  /// Multiplication by lambda^k.
  Series shifted(long k) const {
    Series s = *this;
    s.val += k;
    s.order += k;
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& x : s.c) x = -x;
    return s;
  }

  Series operator+(const Series& o) const {
    Series s;
    s.order = std::min(order, other_order(o));
    long lo = std::min(val_effective(), o.val_effective());
    if (lo > s.order) {
      s.val = s.order + 1;
      return s;
    }
    s.val = lo;
    s.c.assign(static_cast<size_t>(s.order - lo + 1), R{});
    accumulate(s, *this);
    accumulate(s, o);
    s.normalize();
    return s;
  }

  Series operator-(const Series& o) const { return *this + (-o); }

  Series operator*(const Series& o) const {
    Series s;
    s.order = std::min(order + o.val_effective(), o.order + val_effective());
    if (is_zero_series() || o.is_zero_series()) {
      s.val = s.order + 1;
      return s;
    }
    long lo = val + o.val;
    if (lo > s.order) {
      s.val = s.order + 1;
      return s;
    }
    s.val = lo;
    s.c.assign(static_cast<size_t>(s.order - lo + 1), R{});
    for (size_t a = 0; a < c.size(); ++a) {
      if (is_zero(c[a])) continue;
      long ea = val + static_cast<long>(a);
      if (ea + o.val > s.order) break;
      for (size_t b = 0; b < o.c.size(); ++b) {
        long e = ea + o.val + static_cast<long>(b);
        if (e > s.order) break;
        s.c[static_cast<size_t>(e - lo)] += c[a] * o.c[b];
      }
    }
    s.normalize();
    return s;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  template <class S>
  Series scaled(const S& s) const {
    Series r;
    r.val = val;
    r.order = order;
    r.c.reserve(c.size());
    for (auto& x : c) r.c.push_back(x * s);
    r.normalize();
    return r;
  }

  /// Applies f to every coefficient, producing a series over f's value type.
  template <class F>
  auto map_coeffs(F&& f) const {
    using R2 = decltype(f(std::declval<const R&>()));
    Series<R2> r;
    r.val = val;
    r.order = order;
    r.c.reserve(c.size());
    for (auto& x : c) r.c.push_back(f(x));
    r.normalize();
    return r;
  }

  /// Exact division; R must be a field and the divisor nonzero.
  Series operator/(const Series& o) const {
    if (o.is_zero_series())
      throw InsufficientPrecision("series division by a divisor that is zero to order " +
                                  std::to_string(o.order));
    long known_f = order - val_effective();
    long known_g = o.order - o.val;
    long nterms = std::min(known_f, known_g) + 1;  // quotient coefficients we can know
    Series q;
    q.order = val_effective() - o.val + std::min(known_f, known_g);
    if (is_zero_series()) {
      q.val = q.order + 1;
      return q;
    }
    q.val = val - o.val;
    if (nterms <= 0) {
      q.val = q.order + 1;
      return q;
    }
    q.c.assign(static_cast<size_t>(nterms), R{});
    const R& lead = o.c[0];
    for (long n = 0; n < nterms; ++n) {
      R acc = n < static_cast<long>(c.size()) ? c[static_cast<size_t>(n)] : R{};
      for (long k = 0; k < n; ++k) {
        long j = n - k;
        if (j < static_cast<long>(o.c.size())) acc -= q.c[static_cast<size_t>(k)] * o.c[static_cast<size_t>(j)];
      }
      q.c[static_cast<size_t>(n)] = acc / lead;
    }
    q.normalize();
    return q;
  }

  bool operator==(const Series& o) const {
    return val == o.val && order == o.order && c == o.c;
  }

 private:
  static long other_order(const Series& o) { return o.order; }
  static void accumulate(Series& s, const Series& from) {
    if (from.is_zero_series()) return;
    for (size_t k = 0; k < from.c.size(); ++k) {
      long e = from.val + static_cast<long>(k);
      if (e > s.order) break;
      s.c[static_cast<size_t>(e - s.val)] += from.c[k];
    }
  }
};

template <class R>
inline bool is_zero(const Series<R>& s) {
  return s.is_zero_series();
}

/// True when the two series agree on every exponent <= ord; requires both to
/// actually carry that much precision.
template <class R>
inline bool equal_to_order(const Series<R>& a, const Series<R>& b, long ord) {
  if (a.order < ord || b.order < ord)
    throw InsufficientPrecision("series comparison to order " + std::to_string(ord) +
                                " given orders " + std::to_string(a.order) + ", " +
                                std::to_string(b.order));
  Series<R> d = a.truncated(ord) - b.truncated(ord);
  return d.is_zero_series();
}

/// exp(c lambda) = sum_{k<=order} c^k lambda^k / k!.
template <class R>
inline Series<R> series_exp(const R& coeff, long order) {
  if (order < 0) throw DomainError("series_exp requires order >= 0");
  Series<R> s;
  s.val = 0;
  s.order = order;
  s.c.assign(static_cast<size_t>(order + 1), R{});
  R term(rational(1));
  s.c[0] = term;
  for (long k = 1; k <= order; ++k) {
    term *= coeff;
    term = term * rational(1, k);
    s.c[static_cast<size_t>(k)] = term;
  }
  s.normalize();
  return s;
}

/// exp of a series with positive valuation (no constant term).
template <class R>
inline Series<R> series_exp_of(const Series<R>& x) {
  if (!x.is_zero_series() && x.val < 1)
    throw DomainError("series_exp_of requires valuation >= 1");
  Series<R> acc = Series<R>::constant(R(rational(1)), x.order);
  Series<R> pw = acc;
  for (long k = 1; k <= x.order; ++k) {
    pw = (pw * x).truncated(x.order);
    if (pw.is_zero_series()) break;
    acc += pw.scaled(Rational(rational(1, 1) / factorial(k)));
  }
  return acc;
}

/// log of a series with constant term 1 (valuation 0).
template <class R>
inline Series<R> series_log(const Series<R>& s) {
  if (s.is_zero_series() || s.val != 0 || !(s.c[0] == R(rational(1))))
    throw DomainError("series_log requires constant term 1");
  Series<R> x = s - Series<R>::constant(R(rational(1)), s.order);
  Series<R> acc = Series<R>::zero(s.order);
  Series<R> pw = Series<R>::constant(R(rational(1)), s.order);
  for (long k = 1; k <= s.order; ++k) {
    pw = (pw * x).truncated(s.order);
    if (pw.is_zero_series()) break;
    Rational sign = rational(k % 2 == 1 ? 1 : -1, k);
    acc += pw.scaled(sign);
  }
  return acc;
}

}  // namespace hodgeint
