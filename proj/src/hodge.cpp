#include "hodgeint/hodge.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "hodgeint/characters.hpp"
#include "hodgeint/expand.hpp"
#include "hodgeint/symfun.hpp"
#include "hodgeint/wfunctions.hpp"

namespace hodgeint {

namespace {

Rational char_weight(const Partition& nu, const Partition& mu, const Rational& zmu) {
  Rational w(chi(nu, mu));
  return w / zmu;
}

TauSeries lift_to_tau(const Series<GaussianRational>& s) {
  return s.map_coeffs([](const GaussianRational& c) { return tau_constant(c); });
}

const GaussianRational kI = GaussianRational::i();

}  // namespace

TauSeries r_entry(const Partition& mu_plus, const Partition& mu_minus, long order) {
  const long dp = mu_plus.size(), dm = mu_minus.size();
  const long working = order + dp + dm;
  const Rational zp(z(mu_plus)), zm(z(mu_minus));
  TauSeries acc = TauSeries::zero(working);
  for (const Partition& nup : enumerate_partitions(dp)) {
    Rational wp = char_weight(nup, mu_plus, zp);
    if (is_zero(wp)) continue;
    for (const Partition& num : enumerate_partitions(dm)) {
      Rational wm = char_weight(num, mu_minus, zm);
      if (is_zero(wm)) continue;
      TauPoly freq;
      freq.add_term(1, kI * GaussianRational(rational(kappa(nup), 2)));
      freq.add_term(-1, kI * GaussianRational(rational(kappa(num), 2)));
      TauSeries term = series_exp(freq, working) * lift_to_tau(w_series(nup, num, working));
      acc += term.scaled(Rational(wp * wm));
    }
  }
  return acc.truncated(order);
}

BigradedFamily<TauSeries> r_family(long dplus, long dminus, long order) {
  BigradedFamily<TauSeries> fam(dplus, dminus, TauSeries::zero(order));
  for (auto& [key, value] : fam.entries)
    value = r_entry(key.first, key.second, order);
  return fam;
}

BigradedFamily<TauSeries> apply_cut_join(const BigradedFamily<TauSeries>& f,
                                         bool on_plus) {
  const long dmax = on_plus ? f.dplus : f.dminus;
  std::vector<CJMatrix> cj(static_cast<size_t>(dmax) + 1);
  for (long d = 1; d <= dmax; ++d) cj[static_cast<size_t>(d)] = cj_matrix(d);
  std::vector<std::map<Partition, size_t>> index(static_cast<size_t>(dmax) + 1);
  for (long d = 1; d <= dmax; ++d)
    for (size_t i = 0; i < cj[static_cast<size_t>(d)].basis.size(); ++i)
      index[static_cast<size_t>(d)].emplace(cj[static_cast<size_t>(d)].basis[i], i);

  BigradedFamily<TauSeries> out(f.dplus, f.dminus, f.zero);
  for (auto& [key, value] : out.entries) {
    const Partition& acting = on_plus ? key.first : key.second;
    long d = acting.size();
    if (d == 0) continue;
    const CJMatrix& m = cj[static_cast<size_t>(d)];
    size_t row = index[static_cast<size_t>(d)].at(acting);
    for (size_t col = 0; col < m.basis.size(); ++col) {
      const Rational& c = m.entries[row][col];
      if (is_zero(c)) continue;
      const TauSeries& src = on_plus ? f.at(m.basis[col], key.second)
                                     : f.at(key.first, m.basis[col]);
      value += src.scaled(c);
    }
  }
  return out;
}

BigradedFamily<TauSeries> rcj_residual(long dplus, long dminus, long order) {
  BigradedFamily<TauSeries> r = r_family(dplus, dminus, order);
  BigradedFamily<TauSeries> plus = apply_cut_join(r, true);
  BigradedFamily<TauSeries> minus = apply_cut_join(r, false);
  const TauPoly i_const = tau_constant(kI);
  const TauPoly i_over_tau2 = TauPoly::monomial(-2, kI);
  BigradedFamily<TauSeries> out(dplus, dminus, TauSeries::zero(order));
  for (auto& [key, value] : out.entries) {
    TauSeries dtau = r.at(key.first, key.second)
                         .map_coeffs([](const TauPoly& p) { return p.derivative(); });
    value = dtau - plus.at(key.first, key.second).shifted(1).scaled(i_const) +
            minus.at(key.first, key.second).shifted(1).scaled(i_over_tau2);
  }
  return out;
}

Series<GaussianRational> eval_tau_minus_one(const TauSeries& s) {
  const GaussianRational m1(rational(-1));
  return s.map_coeffs(
      [&](const TauPoly& p) { return p.eval_unit(m1, m1); });
}

Series<GaussianRational> initial_skew_entry(const Partition& mu_plus,
                                            const Partition& mu_minus, long order) {
  const long dp = mu_plus.size(), dm = mu_minus.size();
  const long working = order + dp + dm;
  const Rational zp(z(mu_plus)), zm(z(mu_minus));
  Series<GaussianRational> acc = Series<GaussianRational>::zero(working);
  for (const Partition& nup : enumerate_partitions(dp)) {
    Rational wp = char_weight(nup, mu_plus, zp);
    if (is_zero(wp)) continue;
    for (const Partition& num : enumerate_partitions(dm)) {
      Rational wm = char_weight(num, mu_minus, zm);
      if (is_zero(wm)) continue;
      RationalFunction sum;
      for (const Partition& rho : subdiagrams(intersect(nup, num)))
        sum += neg_half_spec(nup, rho) * neg_half_spec(num, rho);
      acc += expand_at_unity(sum, working).scaled(GaussianRational(wp * wm));
    }
  }
  return acc.truncated(order);
}

Series<GaussianRational> initial_connected_closed_form(const Partition& mu_plus,
                                                       const Partition& mu_minus,
                                                       long order) {
  const long lp = mu_plus.length(), lm = mu_minus.length();
  if (lp + lm == 1) {
    long m = lp == 1 ? mu_plus.part(0) : mu_minus.part(0);
    Rational c = rational(m % 2 == 1 ? 1 : -1, m);
    return expand_at_unity(RationalFunction(c) / quantum_bracket(m), order);
  }
  if (lp == 1 && lm == 1 && mu_plus.part(0) == mu_minus.part(0))
    return Series<GaussianRational>::constant(
        GaussianRational(rational(1, mu_plus.part(0))), order);
  return Series<GaussianRational>::zero(order);
}

const BigradedFamily<TauSeries>& g_connected(long dplus, long dminus, long order) {
  static std::mutex lock;
  static std::map<std::tuple<long, long, long>, BigradedFamily<TauSeries>> memo;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_tuple(dplus, dminus, order);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // Products of entries with negative lambda-valuation lose up to
  // dplus + dminus known orders, so the log runs on a padded family.
  const long working = order + dplus + dminus;
  BigradedFamily<TauSeries> r = r_family(dplus, dminus, working);
  TauSeries one = TauSeries::constant(TauPoly(rational(1)), working);
  BigradedFamily<TauSeries> g = family_log(r, one);
  BigradedFamily<TauSeries> out(dplus, dminus, TauSeries::zero(order));
  for (auto& [k, v] : out.entries) v = g.at(k.first, k.second).truncated(order);
  return memo.emplace(key, std::move(out)).first->second;
}

TauPoly hodge_coefficient(long g, const Partition& mu_plus, const Partition& mu_minus) {
  if (g < 0) throw DomainError("hodge_coefficient requires g >= 0");
  if (mu_plus.empty() && mu_minus.empty())
    throw DomainError("hodge_coefficient requires a nonempty partition pair");
  long n = 2 * g - 2 + mu_plus.length() + mu_minus.length();
  long order = n > 0 ? n : 0;
  const auto& fam = g_connected(mu_plus.size(), mu_minus.size(), order);
  return fam.at(mu_plus, mu_minus).coeff(n);
}

TauRatFun hodge_prefactor(const Partition& mu_plus, const Partition& mu_minus) {
  const long l = mu_plus.length() + mu_minus.length();
  if (l == 0) throw DomainError("prefactor needs a nonempty partition pair");
  GaussianRational unit(rational(-1));
  for (long k = 0; k < l; ++k) unit *= kI;
  Rational zz = Rational(1) / (Rational(z(mu_plus)) * Rational(z(mu_minus)));
  TauRatFun pref(TauPoly::constant(unit * GaussianRational(zz)));
  TauPoly tau_tau1;
  tau_tau1.add_term(2, GaussianRational(rational(1)));
  tau_tau1.add_term(1, GaussianRational(rational(1)));
  pref *= TauRatFun(tau_tau1).pow(l - 1);
  for (long m : mu_plus.parts) {
    for (long a = 1; a < m; ++a) {
      TauPoly lin;
      lin.add_term(1, GaussianRational(rational(m)));
      lin.add_term(0, GaussianRational(rational(a)));
      pref *= TauRatFun(lin);
    }
    pref *= TauRatFun(Rational(Rational(1) / Rational(factorial(m))));
  }
  for (long m : mu_minus.parts) {
    for (long a = 1; a < m; ++a) {
      TauPoly lin;
      lin.add_term(-1, GaussianRational(rational(m)));
      lin.add_term(0, GaussianRational(rational(a)));
      pref *= TauRatFun(lin);
    }
    pref *= TauRatFun(Rational(Rational(1) / Rational(factorial(m))));
  }
  return pref;
}

TauRatFun normalized_integral(long g, const Partition& mu_plus,
                              const Partition& mu_minus) {
  TauRatFun pref = hodge_prefactor(mu_plus, mu_minus);
  if (pref.is_zero_fn()) throw DomainError("vanishing prefactor");
  return TauRatFun(hodge_coefficient(g, mu_plus, mu_minus)) / pref;
}

Series<GaussianRational> k_via_w(const Partition& mu_plus, const Partition& mu_minus,
                                 long order) {
  const long dp = mu_plus.size(), dm = mu_minus.size();
  const long working = order + dp + dm;
  const Rational zp(z(mu_plus)), zm(z(mu_minus));
  Series<GaussianRational> acc = Series<GaussianRational>::zero(working);
  for (const Partition& etap : enumerate_partitions(dp)) {
    Rational wp = char_weight(etap, mu_plus, zp);
    if (is_zero(wp)) continue;
    for (const Partition& etam : enumerate_partitions(dm)) {
      Rational wm = char_weight(etam, mu_minus, zm);
      if (is_zero(wm)) continue;
      acc += w_series(etap, etam, working).scaled(GaussianRational(wp * wm));
    }
  }
  return acc.truncated(order);
}

namespace {

TauSeries kg_style_sum(const Partition& mu_plus, const Partition& mu_minus,
                       long order, const TauPoly& scale_plus,
                       const TauPoly& scale_minus, bool k_from_r) {
  const long dp = mu_plus.size(), dm = mu_minus.size();
  const long working = order + dp + dm;
  TauSeries acc = TauSeries::zero(working);
  for (const Partition& nup : enumerate_partitions(dp)) {
    TauSeries left = phi_series(mu_plus, nup, scale_plus, working);
    if (left.is_zero_series()) continue;
    left = left.scaled(TauPoly(Rational(z(nup))));
    for (const Partition& num : enumerate_partitions(dm)) {
      TauSeries right = phi_series(num, mu_minus, scale_minus, working);
      if (right.is_zero_series()) continue;
      TauSeries core = k_from_r ? r_entry(nup, num, working)
                                : lift_to_tau(k_via_w(nup, num, working));
      core = core.scaled(TauPoly(Rational(z(num))));
      acc += left * core * right;
    }
  }
  return acc.truncated(order);
}

}  // namespace

TauSeries k_via_kg(const Partition& mu_plus, const Partition& mu_minus, long order) {
  TauPoly sp = TauPoly::monomial(1, -kI);
  TauPoly sm = TauPoly::monomial(-1, -kI);
  return kg_style_sum(mu_plus, mu_minus, order, sp, sm, true);
}

BigradedFamily<TauSeries> gk_reconstruction(long dplus, long dminus, long order) {
  TauPoly sp = TauPoly::monomial(1, kI);
  TauPoly sm = TauPoly::monomial(-1, kI);
  BigradedFamily<TauSeries> out(dplus, dminus, TauSeries::zero(order));
  for (auto& [key, value] : out.entries)
    value = kg_style_sum(key.first, key.second, order, sp, sm, false);
  return out;
}

bool tau_free(const TauSeries& s) {
  for (const TauPoly& p : s.c)
    for (auto& [e, c] : p.terms)
      if (e != 0) return false;
  return true;
}

Series<GaussianRational> collapse_tau(const TauSeries& s) {
  if (!tau_free(s)) throw DomainError("series carries residual tau dependence");
  return s.map_coeffs([](const TauPoly& p) { return p.coeff(0); });
}

}  // namespace hodgeint
