#pragma once

#include <map>
#include <vector>

#include "hodgeint/numeric.hpp"
#include "hodgeint/partition.hpp"
#include "hodgeint/series.hpp"

namespace hodgeint {

/// Finite linear combination sum_f a_f e^{f lambda} with integer frequencies
/// and rational amplitudes; exact, no truncation.
struct ExpSum {
  std::map<long, Rational> terms;  // frequency -> amplitude, no stored zeros

  ExpSum() = default;
  explicit ExpSum(Rational constant) { add_term(0, constant); }

  static ExpSum exponential(long freq, Rational amp) {
    ExpSum e;
    e.add_term(freq, std::move(amp));
    return e;
  }

  bool is_zero_sum() const { return terms.empty(); }

  void add_term(long f, const Rational& a) {
    if (is_zero(a)) return;
    auto [it, inserted] = terms.emplace(f, a);
    if (!inserted) {
      it->second += a;
      if (is_zero(it->second)) terms.erase(it);
    }
  }

  Rational amplitude(long f) const {
    auto it = terms.find(f);
    return it == terms.end() ? Rational(0) : it->second;
  }

  ExpSum operator-() const {
    ExpSum r;
    for (auto& [f, a] : terms) r.terms.emplace(f, -a);
    return r;
  }
  ExpSum operator+(const ExpSum& o) const {
    ExpSum r = *this;
    for (auto& [f, a] : o.terms) r.add_term(f, a);
    return r;
  }
  ExpSum operator-(const ExpSum& o) const {
    ExpSum r = *this;
    for (auto& [f, a] : o.terms) r.add_term(f, -a);
    return r;
  }
  ExpSum operator*(const ExpSum& o) const {
    ExpSum r;
    for (auto& [f, a] : terms)
      for (auto& [g, b] : o.terms) r.add_term(f + g, a * b);
    return r;
  }
  ExpSum& operator+=(const ExpSum& o) {
    for (auto& [f, a] : o.terms) add_term(f, a);
    return *this;
  }

  ExpSum scaled(const Rational& s) const {
    ExpSum r;
    for (auto& [f, a] : terms) r.add_term(f, a * s);
    return r;
  }

  /// d/dlambda: multiplies each amplitude by its frequency.
  ExpSum derivative() const {
    ExpSum r;
    for (auto& [f, a] : terms) r.add_term(f, a * Rational(f));
    return r;
  }

  /// lambda := c lambda with integer c (frequency scaling); exact.
  ExpSum freq_scaled(long c) const {
    ExpSum r;
    for (auto& [f, a] : terms) r.add_term(f * c, a);
    return r;
  }

  /// Value at lambda = 0, i.e. the sum of amplitudes.
  Rational value_at_zero() const {
    Rational s(0);
    for (auto& [f, a] : terms) s += a;
    return s;
  }

  /// sum_f a_f f^r (equals r! times the lambda^r coefficient); r >= 0.
  Rational moment(long r) const;

  bool operator==(const ExpSum& o) const { return terms == o.terms; }
};

inline bool is_zero(const ExpSum& e) { return e.is_zero_sum(); }

/// Burnside sum Phi_{mu+,mu-}(lambda) = sum_{|nu|=d} [chi_nu(mu+)/z_{mu+}]
/// [chi_nu(mu-)/z_{mu-}] e^{f_nu(2) lambda}.  Defined for d = 0 as the
/// constant 1 (the empty cover).
ExpSum phi_expsum(const Partition& mu_plus, const Partition& mu_minus);

/// Disconnected double Hurwitz number with r = 2g - 2 + l(mu+) + l(mu-)
/// simple branch points; 0 when r < 0.
Rational hurwitz_number(long g, const Partition& mu_plus, const Partition& mu_minus);

/// Lambda-expansion of Phi_{mu+,mu-}(c lambda) over the coefficient ring R.
template <class R>
Series<R> phi_series(const Partition& mu_plus, const Partition& mu_minus,
                     const R& scale, long order) {
  ExpSum e = phi_expsum(mu_plus, mu_minus);
  Series<R> acc = Series<R>::zero(order);
  for (auto& [f, a] : e.terms) {
    R freq = scale * rational(f);
    acc += series_exp(freq, order).scaled(a);
  }
  return acc;
}

/// Matrix realizing d/dlambda Phi_d = CJ_d Phi_d = Phi_d CJ_d^t, with both
/// indices in the enumerate_partitions(d) order.
struct CJMatrix {
  long d = 0;
  std::vector<Partition> basis;
  std::vector<std::vector<Rational>> entries;
};

/// Operator route: entry (mu, eta) is the coefficient of p_mu in the
/// cut-and-join image of p_eta.
CJMatrix cj_matrix(long d);

/// Gluing route for a single entry: z_nu times the Hurwitz number with
/// l(mu)+l(nu)-1 simple branch points.
Rational cj_entry_hurwitz(const Partition& mu, const Partition& nu);

/// Full matrix of Burnside sums for degree d, entry (mu, nu) = Phi_{mu,nu}.
std::vector<std::vector<ExpSum>> phi_matrix(long d);

}  // namespace hodgeint
