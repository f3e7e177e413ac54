#include "hodgeint/checks.hpp"

#include <utility>

#include "hodgeint/characters.hpp"
#include "hodgeint/expand.hpp"
#include "hodgeint/hodge.hpp"
#include "hodgeint/hurwitz.hpp"
#include "hodgeint/wfunctions.hpp"

namespace hodgeint {

namespace {

std::string pair_label(const Partition& a, const Partition& b) {
  return a.to_string() + "," + b.to_string();
}

}  // namespace

CheckReport check_orthogonality(long d) {
  CheckReport rep;
  CharacterTable t = character_table(d);
  const size_t n = t.basis.size();
  // Row orthogonality: sum_mu chi_a(mu) chi_b(mu) / z_mu = delta_{ab}.
  std::vector<Integer> zs;
  zs.reserve(n);
  for (const Partition& mu : t.basis) zs.push_back(z(mu));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) {
      Rational s(0);
      for (size_t m = 0; m < n; ++m)
        s += Rational(t.values[a][m] * t.values[b][m]) / Rational(zs[m]);
      if (s != Rational(a == b ? 1 : 0))
        rep.fail("row orthogonality failed at " +
                 pair_label(t.basis[a], t.basis[b]) + " giving " + to_string(s));
    }
  // Column orthogonality: sum_nu chi_nu(mu) chi_nu(eta) = delta z_mu.
  for (size_t m = 0; m < n; ++m)
    for (size_t e = m; e < n; ++e) {
      Integer s(0);
      for (size_t a = 0; a < n; ++a) s += t.values[a][m] * t.values[a][e];
      Integer want = (m == e) ? zs[m] : Integer(0);
      if (s != want)
        rep.fail("column orthogonality failed at " +
                 pair_label(t.basis[m], t.basis[e]) + " giving " + to_string(s));
    }
  for (const Partition& nu : t.basis)
    if (dim_irrep(nu) != dim_hook(nu))
      rep.fail("dimension routes disagree at " + nu.to_string());
  return rep;
}

CheckReport check_f2(long dmax) {
  CheckReport rep;
  for (long d = 0; d <= dmax; ++d)
    for (const Partition& nu : enumerate_partitions(d))
      if (f2(nu) != rational(kappa(nu), 2))
        rep.fail("f2 != kappa/2 at " + nu.to_string());
  return rep;
}

CheckReport check_phi_init(long dmax) {
  CheckReport rep;
  {
    ExpSum cosh_half, sinh_half;
    cosh_half.add_term(1, rational(1, 4));
    cosh_half.add_term(-1, rational(1, 4));
    sinh_half.add_term(1, rational(1, 4));
    sinh_half.add_term(-1, rational(-1, 4));
    auto m = phi_matrix(2);
    if (!(m[0][0] == cosh_half && m[1][1] == cosh_half && m[0][1] == sinh_half &&
          m[1][0] == sinh_half))
      rep.fail("d=2 matrix does not match the cosh/sinh exponential sums");
  }
  for (long d = 1; d <= dmax; ++d) {
    auto basis = enumerate_partitions(d);
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        Rational want = i == j ? Rational(1) / Rational(z(basis[i])) : Rational(0);
        if (phi_expsum(basis[i], basis[j]).value_at_zero() != want)
          rep.fail("Phi(0) != delta/z at " + pair_label(basis[i], basis[j]));
      }
  }
  return rep;
}

CheckReport check_phi_symmetry(long dmax) {
  CheckReport rep;
  for (long d = 1; d <= dmax; ++d) {
    auto basis = enumerate_partitions(d);
    for (const Partition& mu : basis)
      for (const Partition& nu : basis) {
        ExpSum a = phi_expsum(mu, nu);
        if (!(a == phi_expsum(nu, mu)))
          rep.fail("Phi symmetry failed at " + pair_label(mu, nu));
        // Tensoring with the sign representation flips the frequencies and
        // scales by the parity of the permutations.
        long sign_exp = (d - mu.length()) + (d - nu.length());
        ExpSum flipped = a.freq_scaled(-1);
        if (sign_exp % 2 == 1) flipped = flipped.scaled(Rational(-1));
        if (!(a == flipped))
          rep.fail("sign symmetry failed at " + pair_label(mu, nu));
      }
  }
  return rep;
}

namespace {

using ExpMatrix = std::vector<std::vector<ExpSum>>;

ExpMatrix mul_with_z(const ExpMatrix& a, const std::vector<Integer>& zs,
                     const ExpMatrix& b) {
  const size_t n = a.size();
  ExpMatrix r(n, std::vector<ExpSum>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        r[i][j] += (a[i][k] * b[k][j]).scaled(Rational(zs[k]));
  return r;
}

ExpMatrix freq_scale_matrix(const ExpMatrix& a, long c) {
  ExpMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = e.freq_scaled(c);
  return r;
}

}  // namespace

CheckReport check_sum_formula(long d) {
  CheckReport rep;
  auto basis = enumerate_partitions(d);
  std::vector<Integer> zs;
  for (const Partition& mu : basis) zs.push_back(z(mu));
  ExpMatrix phi = phi_matrix(d);
  ExpMatrix doubled = mul_with_z(phi, zs, phi);
  ExpMatrix want = freq_scale_matrix(phi, 2);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (!(doubled[i][j] == want[i][j]))
        rep.fail("sum formula failed at " + pair_label(basis[i], basis[j]));
  ExpMatrix inv = mul_with_z(phi, zs, freq_scale_matrix(phi, -1));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      ExpSum want_inv;
      if (i == j) want_inv.add_term(0, Rational(1) / Rational(zs[i]));
      if (!(inv[i][j] == want_inv))
        rep.fail("inverse identity failed at " + pair_label(basis[i], basis[j]));
    }
  return rep;
}

CheckReport check_cut_join_phi(long d) {
  CheckReport rep;
  auto basis = enumerate_partitions(d);
  const size_t n = basis.size();
  ExpMatrix phi = phi_matrix(d);
  CJMatrix cj = cj_matrix(d);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      ExpSum want = phi[i][j].derivative();
      ExpSum left, right;
      for (size_t k = 0; k < n; ++k) {
        left += phi[k][j].scaled(cj.entries[i][k]);
        right += phi[i][k].scaled(cj.entries[j][k]);
      }
      if (!(left == want))
        rep.fail("dPhi != CJ Phi at " + pair_label(basis[i], basis[j]));
      if (!(right == want))
        rep.fail("dPhi != Phi CJ^t at " + pair_label(basis[i], basis[j]));
    }
  for (const Partition& nu : enumerate_partitions(d)) {
    Rational eig = rational(kappa(nu), 2);
    std::vector<Rational> u;
    for (const Partition& mu : basis)
      u.push_back(Rational(chi(nu, mu)) / Rational(z(mu)));
    for (size_t i = 0; i < n; ++i) {
      Rational s(0);
      for (size_t k = 0; k < n; ++k) s += cj.entries[i][k] * u[k];
      if (s != eig * u[i])
        rep.fail("character eigenvector failed for " + nu.to_string());
    }
  }
  return rep;
}

CheckReport check_cut_join_routes(long d) {
  CheckReport rep;
  auto basis = enumerate_partitions(d);
  CJMatrix cj = cj_matrix(d);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (cj.entries[i][j] != cj_entry_hurwitz(basis[i], basis[j]))
        rep.fail("cut-and-join routes disagree at " +
                 pair_label(basis[i], basis[j]));
  return rep;
}

CheckReport check_key(long dplus, long dminus) {
  CheckReport rep;
  std::vector<Partition> mus, nus;
  for (long a = 0; a <= dplus; ++a)
    for (const Partition& p : enumerate_partitions(a)) mus.push_back(p);
  for (long b = 0; b <= dminus; ++b)
    for (const Partition& p : enumerate_partitions(b)) nus.push_back(p);
  // The skew route is manifestly symmetric, so it is evaluated once per
  // unordered pair; the defining route is checked against it on both orders,
  // which also certifies the symmetry of w_munu_def.
  std::map<std::pair<Partition, Partition>, RationalFunction> skew;
  for (const Partition& mu : mus)
    for (const Partition& nu : nus) {
      std::pair<Partition, Partition> key =
          nu < mu ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
      if (!skew.count(key)) skew.emplace(key, w_munu_skew(key.first, key.second));
      if (!(w_munu_def(mu, nu) == skew.at(key)))
        rep.fail("W routes disagree at " + pair_label(mu, nu));
    }
  return rep;
}

CheckReport check_rcj(long dplus, long dminus, long order) {
  CheckReport rep;
  BigradedFamily<TauSeries> res = rcj_residual(dplus, dminus, order);
  for (auto& [key, value] : res.entries)
    if (!value.is_zero_series())
      rep.fail("cut-and-join residual nonzero at " +
               pair_label(key.first, key.second) + " from lambda^" +
               std::to_string(value.val));
  return rep;
}

CheckReport check_initial(long dplus, long dminus, long order) {
  CheckReport rep;
  BigradedFamily<TauSeries> r = r_family(dplus, dminus, order);
  for (auto& [key, value] : r.entries) {
    Series<GaussianRational> lhs = eval_tau_minus_one(value);
    Series<GaussianRational> rhs = initial_skew_entry(key.first, key.second, order);
    if (!equal_to_order(lhs, rhs, order))
      rep.fail("skew-sum initial value failed at " +
               pair_label(key.first, key.second));
  }
  const auto& g = g_connected(dplus, dminus, order);
  for (auto& [key, value] : g.entries) {
    if (key.first.empty() && key.second.empty()) continue;
    Series<GaussianRational> lhs = eval_tau_minus_one(value);
    Series<GaussianRational> rhs =
        initial_connected_closed_form(key.first, key.second, order);
    if (!equal_to_order(lhs, rhs, order))
      rep.fail("connected closed form failed at " +
               pair_label(key.first, key.second));
  }
  return rep;
}

CheckReport check_kg(long dplus, long dminus, long order) {
  CheckReport rep;
  for (long a = 0; a <= dplus; ++a)
    for (const Partition& mu : enumerate_partitions(a))
      for (long b = 0; b <= dminus; ++b)
        for (const Partition& nu : enumerate_partitions(b)) {
          TauSeries kg = k_via_kg(mu, nu, order);
          if (!tau_free(kg)) {
            rep.fail("k_via_kg carries tau dependence at " + pair_label(mu, nu));
            continue;
          }
          if (!equal_to_order(collapse_tau(kg), k_via_w(mu, nu, order), order))
            rep.fail("K routes disagree at " + pair_label(mu, nu));
        }
  return rep;
}

CheckReport check_gk(long dplus, long dminus, long order) {
  CheckReport rep;
  BigradedFamily<TauSeries> rec = gk_reconstruction(dplus, dminus, order);
  BigradedFamily<TauSeries> r = r_family(dplus, dminus, order);
  for (auto& [key, value] : rec.entries)
    if (!equal_to_order(value, r.at(key.first, key.second), order))
      rep.fail("reconstruction mismatch at " + pair_label(key.first, key.second));
  return rep;
}

CheckReport check_hodge_values() {
  CheckReport rep;
  const Partition one{1};
  const Partition empty{};
  const GaussianRational mi(rational(0), rational(-1));  // -i
  // Frozen values: the cosecant expansion -i(1/lambda + lambda/24 +
  // 7 lambda^3/5760 + 31 lambda^5/967680 + ...), extracted per genus.
  const Rational cosec[4] = {rational(1), rational(1, 24), rational(7, 5760),
                             rational(31, 967680)};
  for (long g = 0; g <= 3; ++g) {
    TauPoly c = hodge_coefficient(g, one, empty);
    for (auto& [e, coef] : c.terms)
      if (e != 0) rep.fail("one-point coefficient has tau power at genus " +
                           std::to_string(g));
    GaussianRational want = cosec[g] * mi;
    if (!(c.coeff(0) == want))
      rep.fail("one-point coefficient wrong at genus " + std::to_string(g));
  }
  {
    TauRatFun n0 = normalized_integral(0, one, empty);
    if (!(n0 == TauRatFun(Rational(1)))) rep.fail("normalized g=0 one-point != 1");
    TauRatFun n1 = normalized_integral(1, one, empty);
    if (!(n1 == TauRatFun(rational(1, 24)))) rep.fail("normalized g=1 one-point != 1/24");
  }
  {
    // Two-point genus-0 convention value 1/(tau(tau+1)).
    TauPoly den;
    den.add_term(2, GaussianRational(rational(1)));
    den.add_term(1, GaussianRational(rational(1)));
    TauRatFun want(TauPoly(rational(1)), den);
    if (!(normalized_integral(0, one, one) == want))
      rep.fail("normalized g=0 two-point != 1/(tau(tau+1))");
  }
  return rep;
}

}  // namespace hodgeint
