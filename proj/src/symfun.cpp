#include "hodgeint/symfun.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "hodgeint/characters.hpp"

namespace hodgeint {

PPolynomial schur_in_p(const Partition& nu) {
  PPolynomial out;
  long d = nu.size();
  for (const Partition& mu : enumerate_partitions(d)) {
    Rational c(chi(nu, mu), z(mu));
    c.canonicalize();
    out.add_term(mu, c);
  }
  return out;
}

namespace {

Partition with_parts(std::vector<long> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<long>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

// Removes one occurrence of each requested value; the caller guarantees they
// are present.
std::vector<long> erase_values(const Partition& mu, std::vector<long> vals) {
  std::vector<long> out = mu.parts;
  for (long v : vals) {
    auto it = std::find(out.begin(), out.end(), v);
    out.erase(it);
  }
  return out;
}

}  // namespace

PPolynomial cut_join_apply(const PPolynomial& e) {
  PPolynomial out;
  const Rational half(1, 2);
  for (const auto& [mu, c] : e.terms) {
    auto mults = multiplicities(mu);
    // Cut: (i+j) p_i p_j d/dp_{i+j}, summed over ordered (i, j) with i+j = s.
    for (const auto& [s, m] : mults) {
      if (s < 2) continue;
      std::vector<long> base = erase_values(mu, {s});
      for (long i = 1; i < s; ++i) {
        std::vector<long> parts = base;
        parts.push_back(i);
        parts.push_back(s - i);
        out.add_term(with_parts(std::move(parts)), half * Rational(s * m) * c);
      }
    }
    // Join: i j p_{i+j} d^2/dp_i dp_j, over ordered pairs of occurrences.
    for (const auto& [i, mi] : mults) {
      for (const auto& [j, mj] : mults) {
        long pairs = (i == j) ? mi * (mi - 1) : mi * mj;
        if (pairs == 0) continue;
        std::vector<long> parts = erase_values(mu, {i, j});
        parts.push_back(i + j);
        out.add_term(with_parts(std::move(parts)),
                     half * Rational(i * j * pairs) * c);
      }
    }
  }
  return out;
}

RationalFunction h_principal(long k) {
  if (k < 0) return RationalFunction();
  static std::mutex mu;
  static std::vector<RationalFunction> cache{RationalFunction(Rational(1))};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= k) {
    long i = static_cast<long>(cache.size());
    LaurentPoly<Rational> den = LaurentPoly<Rational>::constant(Rational(1)) -
                                LaurentPoly<Rational>::monomial(2 * i, Rational(1));
    cache.push_back(cache.back() * RationalFunction(
                                       LaurentPoly<Rational>::constant(Rational(1)), den));
  }
  return cache[k];
}

RationalFunction ratfun_det(std::vector<std::vector<RationalFunction>> m) {
  const std::size_t n = m.size();
  if (n == 0) return RationalFunction(Rational(1));
  RationalFunction det(Rational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero_fn()) ++piv;
    if (piv == n) return RationalFunction();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = det * RationalFunction(Rational(-1));
    }
    det = det * m[col][col];
    RationalFunction inv = RationalFunction(Rational(1)) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero_fn()) continue;
      RationalFunction factor = m[row][col] * inv;
      for (std::size_t j = col; j < n; ++j)
        m[row][j] = m[row][j] - factor * m[col][j];
    }
  }
  return det;
}

RationalFunction principal_spec(const Partition& nu, const Partition& rho) {
  if (!contains(nu, rho)) return RationalFunction();
  if (nu.empty()) return RationalFunction(Rational(1));
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, RationalFunction> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({nu, rho});
    if (it != memo.end()) return it->second;
  }
  const long n = nu.length();
  std::vector<std::vector<RationalFunction>> m(
      n, std::vector<RationalFunction>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      m[i - 1][j - 1] =
          h_principal(nu.part(i - 1) - rho.part(j - 1) - i + j);
  RationalFunction det = ratfun_det(std::move(m));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(nu, rho), det);
  return det;
}

RationalFunction neg_half_spec(const Partition& nu, const Partition& rho) {
  long w = nu.size() - rho.size();
  RationalFunction ps = principal_spec(nu, rho);
  if (ps.is_zero_fn()) return ps;
  Rational sign = (w % 2 == 0) ? Rational(1) : Rational(-1);
  return ps * RationalFunction::monomial(w, sign);
}

RationalFunction hook_content_spec(const Partition& nu) {
  RationalFunction num = RationalFunction::monomial(2 * n_statistic(nu), Rational(1));
  RationalFunction den(Rational(1));
  for (long h : hooks(nu)) {
    LaurentPoly<Rational> f = LaurentPoly<Rational>::constant(Rational(1)) -
                              LaurentPoly<Rational>::monomial(2 * h, Rational(1));
    den = den * RationalFunction(f);
  }
  return num / den;
}

}  // namespace hodgeint
