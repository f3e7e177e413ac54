#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hodgeint {

using Integer = mpz_class;
using Rational = mpq_class;

struct InsufficientPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" with optional sign; q must be nonzero.
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw DomainError("invalid rational literal: " + s);
  if (sgn(r.get_den()) == 0)
    throw DomainError("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Element of Q(i); i*i = -1 exactly.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(long r) : re(rational(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {rational(0), rational(1)}; }

  bool operator==(const GaussianRational& o) const {
    return re == o.re && im == o.im;
  }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational inverse() const {
    Rational n = norm();
    if (is_zero(n)) throw DomainError("division by zero in Q(i)");
    return {re / n, -im / n};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    return *this * o.inverse();
  }
};

inline bool is_zero(const GaussianRational& x) {
  return is_zero(x.re) && is_zero(x.im);
}

inline GaussianRational operator*(const Rational& a, const GaussianRational& b) {
  return {a * b.re, a * b.im};
}

/// "a", "bi", or "a+bi" / "a-bi"; purely for diagnostics and test output.
inline std::string to_string(const GaussianRational& x) {
  if (is_zero(x.im)) return to_string(x.re);
  std::string im = to_string(x.im) + "i";
  if (is_zero(x.re)) return im;
  return to_string(x.re) + (sgn(x.im) < 0 ? "" : "+") + im;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Integer pow_integer(const Integer& b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace hodgeint
