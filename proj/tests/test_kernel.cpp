#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeint/expand.hpp"
#include "hodgeint/laurent.hpp"
#include "hodgeint/numeric.hpp"
#include "hodgeint/ratfun.hpp"
#include "hodgeint/series.hpp"

using namespace hodgeint;

namespace {

GaussianRational gr(long n, long d = 1) { return GaussianRational(rational(n, d)); }
GaussianRational gi(long n, long d = 1) {
  return GaussianRational(rational(0), rational(n, d));
}

RationalFunction rf(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly<Rational> p;
  for (auto& [e, c] : terms) p.add_term(e, rational(c));
  return RationalFunction(std::move(p));
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational_from_string("-3/6") == rational(-1, 2));
  CHECK(rational_from_string("7") == rational(7));
  CHECK_THROWS_AS(rational_from_string("x"), DomainError);
  CHECK(to_string(rational(-1, 3)) == "-1/3");
  CHECK(to_string(rational(5)) == "5");
  CHECK(factorial(6) == 720);
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow_integer(Integer(3), 4) == 81);
}

TEST_CASE("gaussian rationals form a field") {
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == gr(-1));
  GaussianRational x(rational(2), rational(-3));
  CHECK(x * x.inverse() == gr(1));
  CHECK((x / x) == gr(1));
  CHECK(x.conj() * x == GaussianRational(x.norm()));
  CHECK(rational(2) * i == gi(2));
  CHECK(to_string(GaussianRational(rational(1), rational(-1, 2))) == "1-1/2i");
  CHECK_THROWS_AS(GaussianRational().inverse(), DomainError);
}

TEST_CASE("laurent polynomials") {
  LaurentPoly<Rational> p;
  p.add_term(-1, rational(1));
  p.add_term(2, rational(3));
  CHECK(p.val() == -1);
  CHECK(p.deg() == 2);
  CHECK(p.coeff(0) == rational(0));

  LaurentPoly<Rational> q = p * p;
  CHECK(q.coeff(-2) == rational(1));
  CHECK(q.coeff(1) == rational(6));
  CHECK(q.coeff(4) == rational(9));

  CHECK((p - p).is_zero_poly());
  CHECK(p.shifted(3).val() == 2);
  CHECK(p.derivative().coeff(-2) == rational(-1));
  CHECK(p.derivative().coeff(1) == rational(6));

  // cancellation removes stored zeros
  LaurentPoly<Rational> a = LaurentPoly<Rational>::monomial(5, rational(2));
  a.add_term(5, rational(-2));
  CHECK(a.is_zero_poly());

  TauPoly t = TauPoly::monomial(-2, GaussianRational::i());
  CHECK(t.eval_unit(gr(-1), gr(-1)) == gi(1));
  TauPoly u = TauPoly::monomial(3, gr(1));
  CHECK(u.eval_unit(gr(-1), gr(-1)) == gr(-1));
}

TEST_CASE("series bookkeeping") {
  using S = Series<Rational>;
  S z = S::zero(4);
  CHECK(z.is_zero_series());
  CHECK(z.val_effective() == 5);
  CHECK(z.coeff(4) == rational(0));
  CHECK_THROWS_AS(z.coeff(5), InsufficientPrecision);

  S m = S::monomial(-1, rational(1), 2);
  CHECK(m.val == -1);
  CHECK(m.coeff(-1) == rational(1));
  CHECK(m.coeff(0) == rational(0));

  SUBCASE("addition order is the min of the orders") {
    S a = S::monomial(0, rational(1), 5);
    S b = S::monomial(1, rational(2), 3);
    S s = a + b;
    CHECK(s.order == 3);
    CHECK(s.coeff(1) == rational(2));
    CHECK_THROWS_AS(s.coeff(4), InsufficientPrecision);
  }

  SUBCASE("multiplication respects valuations in the order bound") {
    // both factors are lambda^{-1} + O(lambda^3)
    S a = S::monomial(-1, rational(1), 2);
    S b = S::monomial(-1, rational(3), 2);
    S p = a * b;
    CHECK(p.order == 1);  // 2 + (-1)
    CHECK(p.val == -2);
    CHECK(p.coeff(-2) == rational(3));
    CHECK(p.coeff(0) == rational(0));
  }

  SUBCASE("multiplying by an exact zero keeps the combined order") {
    // O(lambda^4) times (lambda^{-2} + ... + O(lambda^4)) is only known
    // through lambda^1: the unknown tail meets the lambda^{-2} head.
    S a = S::monomial(-2, rational(1), 3);
    S p = a * S::zero(3);
    CHECK(p.is_zero_series());
    CHECK(p.order == 1);
  }

  SUBCASE("truncation and normalization") {
    S a = S::monomial(1, rational(1), 6) + S::monomial(4, rational(5), 6);
    S t = a.truncated(3);
    CHECK(t.order == 3);
    CHECK(t.coeff(1) == rational(1));
    CHECK_THROWS_AS(t.coeff(4), InsufficientPrecision);
    CHECK_THROWS_AS(a.truncated(7), InsufficientPrecision);
  }

  SUBCASE("division reproduces a known quotient") {
    // sin(lambda)/lambda = 1 - lambda^2/6 + lambda^4/120 - ...
    S sinl = S::zero(7);
    sinl += S::monomial(1, rational(1), 7);
    sinl += S::monomial(3, rational(-1, 6), 7);
    sinl += S::monomial(5, rational(1, 120), 7);
    sinl += S::monomial(7, rational(-1, 5040), 7);
    S lam = S::monomial(1, rational(1), 7);
    S q = sinl / lam;
    CHECK(q.coeff(0) == rational(1));
    CHECK(q.coeff(2) == rational(-1, 6));
    CHECK(q.coeff(4) == rational(1, 120));
    CHECK(q.coeff(6) == rational(-1, 5040));
    // dividing back recovers the numerator to the carried order
    CHECK(equal_to_order(q * lam, sinl, q.order + 1));
  }

  SUBCASE("scaled and map_coeffs") {
    S a = S::monomial(2, rational(3), 4);
    CHECK(a.scaled(rational(1, 3)).coeff(2) == rational(1));
    auto g = a.map_coeffs([](const Rational& c) { return GaussianRational(c); });
    CHECK(g.coeff(2) == gr(3));
  }
}

TEST_CASE("series exp and log invert each other") {
  using S = Series<Rational>;
  S x = S::monomial(1, rational(2), 6) + S::monomial(3, rational(-1, 3), 6);
  S e = series_exp_of(x);
  CHECK(e.coeff(0) == rational(1));
  CHECK(e.coeff(1) == rational(2));
  CHECK(equal_to_order(series_log(e), x, 6));

  S g = series_exp(rational(1, 2), 4);
  CHECK(g.coeff(2) == rational(1, 8));
  CHECK(g.coeff(4) == rational(1, 384));
  CHECK_THROWS_AS(series_log(S::monomial(1, rational(1), 3)), DomainError);
}

TEST_CASE("rational function canonical form") {
  // (v^2-1)(v^2+1)/(v^2-1) reduces to v^2+1
  RationalFunction f(rf({{2, 1}, {0, -1}}).num * rf({{2, 1}, {0, 1}}).num,
                     rf({{2, 1}, {0, -1}}).num);
  CHECK(f == rf({{2, 1}, {0, 1}}));

  // denominators are monic ordinary polynomials with nonzero constant term
  RationalFunction g = RationalFunction(rational(1)) / (RationalFunction(rational(1)) - q_power(1));
  CHECK(g.den.coeff(0) != rational(0));
  CHECK(g.den.val() == 0);
  CHECK(g.den.coeff(g.den.deg()) == rational(1));
  CHECK(g * (RationalFunction(rational(1)) - q_power(1)) == RationalFunction(rational(1)));

  // numerators may carry negative powers of the variable
  RationalFunction h = v_power(-3);
  CHECK(h.num.val() == -3);
  CHECK(h.den == LaurentPoly<Rational>(rational(1)));

  CHECK(quantum_bracket(2) == quantum_bracket(1) * rf({{1, 1}, {-1, 1}}));
  RationalFunction w = v_power(1) / (quantum_bracket(1) * quantum_bracket(2));
  CHECK(w.num == LaurentPoly<Rational>::monomial(4, rational(1)));
  CHECK(w.den.coeff(6) == rational(1));
  CHECK(w.den.coeff(4) == rational(-1));
  CHECK(w.den.coeff(2) == rational(-1));
  CHECK(w.den.coeff(0) == rational(1));

  CHECK(w.pow(2) * w.pow(-2) == RationalFunction(rational(1)));
  CHECK_THROWS_AS(w / RationalFunction(), DomainError);
  CHECK(is_zero(RationalFunction()));
}

TEST_CASE("expansion at the unit circle") {
  // v - 1/v = 2i sin(lambda/2)
  LaurentPoly<Rational> bracket;
  bracket.add_term(1, rational(1));
  bracket.add_term(-1, rational(-1));
  auto s = expand_poly_at_unity(bracket, 5);
  CHECK(s.val == 1);
  CHECK(s.coeff(1) == gi(1));
  CHECK(s.coeff(2) == gr(0));
  CHECK(s.coeff(3) == gi(-1, 24));
  CHECK(s.coeff(5) == gi(1, 1920));

  // 1/(v - 1/v): the basic cosecant expansion
  auto c = expand_at_unity(RationalFunction(rational(1)) / quantum_bracket(1), 7);
  CHECK(c.val == -1);
  CHECK(c.coeff(-1) == gi(-1));
  CHECK(c.coeff(0) == gr(0));
  CHECK(c.coeff(1) == gi(-1, 24));
  CHECK(c.coeff(3) == gi(-7, 5760));
  CHECK(c.coeff(5) == gi(-31, 967680));
  CHECK(c.coeff(7) == gi(-127, 154828800));

  // expanding an exact polynomial matches the direct route
  auto direct = expand_poly_at_unity(bracket, 6);
  auto via_fn = expand_at_unity(RationalFunction(bracket), 6);
  CHECK(equal_to_order(direct, via_fn, 6));

  CHECK(expand_at_unity(RationalFunction(), 3).is_zero_series());
}
