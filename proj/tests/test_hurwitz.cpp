#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeint/checks.hpp"
#include "hodgeint/hurwitz.hpp"
#include "hodgeint/laurent.hpp"
#include "hodgeint/partition.hpp"

using namespace hodgeint;

namespace {

ExpSum es(std::initializer_list<std::pair<long, Rational>> terms) {
  ExpSum e;
  for (auto& [f, a] : terms) e.add_term(f, a);
  return e;
}

}  // namespace

TEST_CASE("exponential sums") {
  ExpSum a = es({{1, rational(1, 2)}, {-1, rational(1, 2)}});
  ExpSum b = es({{1, rational(1, 2)}, {-1, rational(-1, 2)}});
  CHECK(a + b == es({{1, rational(1)}}));
  CHECK(a * a - b * b == ExpSum(rational(1)));  // cosh^2 - sinh^2 = 1
  CHECK(a.derivative() == b);
  CHECK(a.value_at_zero() == rational(1));
  CHECK(a.moment(0) == rational(1));
  CHECK(a.moment(1) == rational(0));
  CHECK(a.moment(2) == rational(1));
  CHECK(b.moment(3) == rational(1));
  CHECK(a.freq_scaled(2) == es({{2, rational(1, 2)}, {-2, rational(1, 2)}}));
  CHECK(a.freq_scaled(-1) == a);
  CHECK(a.scaled(rational(2)).amplitude(1) == rational(1));
  CHECK((a - a).is_zero_sum());
}

TEST_CASE("burnside sums") {
  CHECK(phi_expsum(Partition(), Partition()) == ExpSum(rational(1)));
  CHECK(phi_expsum(Partition{1}, Partition{1}) == ExpSum(rational(1)));
  CHECK_THROWS_AS(phi_expsum(Partition{2}, Partition{1}), SizeMismatch);

  // d = 2: [[cosh, sinh], [sinh, cosh]] scaled to amplitude 1/4
  ExpSum cosh2 = es({{1, rational(1, 4)}, {-1, rational(1, 4)}});
  ExpSum sinh2 = es({{1, rational(1, 4)}, {-1, rational(-1, 4)}});
  CHECK(phi_expsum(Partition{2}, Partition{2}) == cosh2);
  CHECK(phi_expsum(Partition{2}, Partition{1, 1}) == sinh2);
  CHECK(phi_expsum(Partition{1, 1}, Partition{2}) == sinh2);
  CHECK(phi_expsum(Partition{1, 1}, Partition{1, 1}) == cosh2);

  auto m = phi_matrix(2);
  CHECK(m[0][0] == cosh2);
  CHECK(m[0][1] == sinh2);
  CHECK(m[1][0] == sinh2);
  CHECK(m[1][1] == cosh2);

  // degree 3 from the frozen S3 table
  CHECK(phi_expsum(Partition{3}, Partition{3}) ==
        es({{3, rational(1, 9)}, {0, rational(1, 9)}, {-3, rational(1, 9)}}));
}

TEST_CASE("double Hurwitz numbers") {
  CHECK(hurwitz_number(0, Partition{1}, Partition{1}) == rational(1));
  CHECK(hurwitz_number(0, Partition{2}, Partition{2}) == rational(1, 2));
  for (long g = 0; g <= 3; ++g)
    CHECK(hurwitz_number(g, Partition{2}, Partition{1, 1}) == rational(1, 2));
  CHECK(hurwitz_number(0, Partition{3}, Partition{3}) == rational(1, 3));
  CHECK(hurwitz_number(1, Partition{1}, Partition{1}) == rational(0));
  CHECK(hurwitz_number(0, Partition(), Partition()) == rational(0));  // r < 0
  CHECK_THROWS_AS(hurwitz_number(-1, Partition{1}, Partition{1}), DomainError);
  CHECK_THROWS_AS(hurwitz_number(0, Partition{2}, Partition{1}), SizeMismatch);
}

TEST_CASE("series form of the burnside sum") {
  auto s = phi_series(Partition{2}, Partition{2}, rational(1), 4);
  CHECK(s.coeff(0) == rational(1, 2));
  CHECK(s.coeff(1) == rational(0));
  CHECK(s.coeff(2) == rational(1, 4));
  CHECK(s.coeff(3) == rational(0));
  CHECK(s.coeff(4) == rational(1, 48));

  // with lambda scaled by -i tau the even coefficients pick up tau powers
  TauPoly scale = TauPoly::monomial(1, -GaussianRational::i());
  auto t = phi_series(Partition{2}, Partition{2}, scale, 2);
  CHECK(t.coeff(0) == TauPoly(rational(1, 2)));
  CHECK(t.coeff(1) == TauPoly());
  CHECK(t.coeff(2) == TauPoly::monomial(2, GaussianRational(rational(-1, 4))));
}

TEST_CASE("cut-and-join matrices") {
  CJMatrix m1 = cj_matrix(1);
  CHECK(m1.entries == std::vector<std::vector<Rational>>{{rational(0)}});

  CJMatrix m2 = cj_matrix(2);
  CHECK(m2.entries ==
        std::vector<std::vector<Rational>>{{rational(0), rational(1)},
                                           {rational(1), rational(0)}});

  CJMatrix m3 = cj_matrix(3);
  CHECK(m3.entries ==
        std::vector<std::vector<Rational>>{
            {rational(0), rational(2), rational(0)},
            {rational(3), rational(0), rational(3)},
            {rational(0), rational(1), rational(0)}});

  // gluing route reproduces every entry
  for (long d = 1; d <= 4; ++d) {
    CJMatrix m = cj_matrix(d);
    for (size_t i = 0; i < m.basis.size(); ++i)
      for (size_t j = 0; j < m.basis.size(); ++j)
        CHECK(m.entries[i][j] == cj_entry_hurwitz(m.basis[i], m.basis[j]));
  }
}

TEST_CASE("identity suites for small degrees") {
  CHECK(check_phi_init(4).ok);
  CHECK(check_phi_symmetry(4).ok);
  for (long d = 1; d <= 4; ++d) {
    CHECK(check_sum_formula(d).ok);
    CHECK(check_cut_join_phi(d).ok);
    CHECK(check_cut_join_routes(d).ok);
  }
}
