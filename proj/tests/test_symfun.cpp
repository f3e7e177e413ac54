#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeint/characters.hpp"
#include "hodgeint/partition.hpp"
#include "hodgeint/ppoly.hpp"
#include "hodgeint/symfun.hpp"

using namespace hodgeint;

namespace {

RationalFunction one() { return RationalFunction(rational(1)); }

RationalFunction rf(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly<Rational> p;
  for (auto& [e, c] : terms) p.add_term(e, rational(c));
  return RationalFunction(std::move(p));
}

}  // namespace

TEST_CASE("power sum polynomial algebra") {
  PPolynomial a = PPolynomial::monomial(Partition{2}, rational(1, 2));
  PPolynomial b = PPolynomial::monomial(Partition{1}, rational(3));
  PPolynomial p = a * b;
  CHECK(p.coeff(Partition{2, 1}) == rational(3, 2));
  CHECK((a - a).is_zero_poly());
  CHECK(a.scaled(rational(2)).coeff(Partition{2}) == rational(1));
}

TEST_CASE("schur expansion in power sums") {
  PPolynomial s2 = schur_in_p(Partition{2});
  CHECK(s2.coeff(Partition{2}) == rational(1, 2));
  CHECK(s2.coeff(Partition{1, 1}) == rational(1, 2));

  PPolynomial s11 = schur_in_p(Partition{1, 1});
  CHECK(s11.coeff(Partition{2}) == rational(-1, 2));
  CHECK(s11.coeff(Partition{1, 1}) == rational(1, 2));

  PPolynomial s21 = schur_in_p(Partition{2, 1});
  CHECK(s21.coeff(Partition{3}) == rational(-1, 3));
  CHECK(s21.coeff(Partition{2, 1}) == rational(0));
  CHECK(s21.coeff(Partition{1, 1, 1}) == rational(1, 3));

  CHECK(schur_in_p(Partition()) == PPolynomial::monomial(Partition(), rational(1)));

  // s_(2) s_(1,1) has the p_(1,1) coefficients multiplying out to degree 4
  PPolynomial prod = s2 * s11;
  CHECK(prod.coeff(Partition{2, 2}) == rational(-1, 4));
}

TEST_CASE("cut and join on power sum monomials") {
  PPolynomial p2 = PPolynomial::monomial(Partition{2}, rational(1));
  PPolynomial p11 = PPolynomial::monomial(Partition{1, 1}, rational(1));
  CHECK(cut_join_apply(p2) == p11);
  CHECK(cut_join_apply(p11) == p2);

  PPolynomial p3 = PPolynomial::monomial(Partition{3}, rational(1));
  CHECK(cut_join_apply(p3) == PPolynomial::monomial(Partition{2, 1}, rational(3)));

  PPolynomial p21 = PPolynomial::monomial(Partition{2, 1}, rational(1));
  PPolynomial img = cut_join_apply(p21);
  CHECK(img.coeff(Partition{3}) == rational(2));
  CHECK(img.coeff(Partition{1, 1, 1}) == rational(1));

  CHECK(cut_join_apply(PPolynomial::monomial(Partition{1, 1, 1}, rational(1))) ==
        PPolynomial::monomial(Partition{2, 1}, rational(3)));

  CHECK(cut_join_apply(PPolynomial()).is_zero_poly());
  CHECK(cut_join_apply(PPolynomial::monomial(Partition{1}, rational(1))).is_zero_poly());
}

TEST_CASE("schur functions are cut-and-join eigenvectors") {
  for (long d = 0; d <= 6; ++d)
    for (auto& nu : enumerate_partitions(d)) {
      PPolynomial s = schur_in_p(nu);
      CHECK(cut_join_apply(s) == s.scaled(f2(nu)));
    }
}

TEST_CASE("complete homogeneous specializations") {
  CHECK(h_principal(0) == one());
  CHECK(h_principal(-2).is_zero_fn());
  CHECK(h_principal(1) == one() / (one() - q_power(1)));
  CHECK(h_principal(2) == one() / ((one() - q_power(1)) * (one() - q_power(2))));
}

TEST_CASE("principal specialization values") {
  CHECK(principal_spec(Partition(), Partition()) == one());
  CHECK(principal_spec(Partition{1}, Partition()) == one() / (one() - q_power(1)));
  CHECK(principal_spec(Partition{2}, Partition()) == h_principal(2));
  // s_(1,1) at (1, q, q^2, ...) = q / ((1-q)(1-q^2))
  CHECK(principal_spec(Partition{1, 1}, Partition()) ==
        q_power(1) / ((one() - q_power(1)) * (one() - q_power(2))));

  // skew shapes: s_{(2,1)/(1)} = s_(2) + s_(1,1)
  CHECK(principal_spec(Partition{2, 1}, Partition{1}) ==
        principal_spec(Partition{2}, Partition()) +
            principal_spec(Partition{1, 1}, Partition()));

  // s_{nu/nu} = 1, and non-contained shapes give zero
  CHECK(principal_spec(Partition{2, 1}, Partition{2, 1}) == one());
  CHECK(principal_spec(Partition{1}, Partition{2}).is_zero_fn());
}

TEST_CASE("hook content closed form matches the determinant") {
  for (long d = 0; d <= 6; ++d)
    for (auto& nu : enumerate_partitions(d))
      CHECK(hook_content_spec(nu) == principal_spec(nu, Partition()));
}

TEST_CASE("specialization at the negative odd alphabet") {
  // x_i = -v^{2i-1} rescales by (-v)^{|nu|-|rho|}
  CHECK(neg_half_spec(Partition{1}, Partition()) ==
        -(v_power(1) / (one() - q_power(1))));
  CHECK(neg_half_spec(Partition{2}, Partition()) ==
        q_power(1) * principal_spec(Partition{2}, Partition()));
  CHECK(neg_half_spec(Partition{2, 1}, Partition{2, 1}) == one());
}

TEST_CASE("determinants over the fraction field") {
  CHECK(ratfun_det({}) == one());
  CHECK(ratfun_det({{rf({{2, 1}})}}) == rf({{2, 1}}));

  // det [[1, q], [q, 1]] = 1 - q^2
  CHECK(ratfun_det({{one(), q_power(1)}, {q_power(1), one()}}) == one() - q_power(2));

  // a permutation matrix needs a pivot swap and flips the sign
  CHECK(ratfun_det({{RationalFunction(), one(), RationalFunction()},
                    {one(), RationalFunction(), RationalFunction()},
                    {RationalFunction(), RationalFunction(), one()}}) == -one());

  // singular matrix
  CHECK(ratfun_det({{one(), one()}, {one(), one()}}).is_zero_fn());
}
