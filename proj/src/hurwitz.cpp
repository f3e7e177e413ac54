#include "hodgeint/hurwitz.hpp"

#include "hodgeint/characters.hpp"
#include "hodgeint/ppoly.hpp"

namespace hodgeint {

Rational ExpSum::moment(long r) const {
  if (r < 0) throw DomainError("moment requires r >= 0");
  Rational s(0);
  for (auto& [f, a] : terms) {
    Integer p = pow_integer(Integer(f < 0 ? -f : f), r);
    if (f < 0 && r % 2 == 1) p = -p;
    s += a * Rational(p);
  }
  return s;
}

ExpSum phi_expsum(const Partition& mu_plus, const Partition& mu_minus) {
  long d = mu_plus.size();
  if (d != mu_minus.size())
    throw SizeMismatch("phi_expsum requires |mu+| = |mu-|, got " +
                       std::to_string(d) + " and " + std::to_string(mu_minus.size()));
  Rational zz(z(mu_plus) * z(mu_minus));
  ExpSum e;
  for (const Partition& nu : enumerate_partitions(d)) {
    Integer cc = chi(nu, mu_plus) * chi(nu, mu_minus);
    if (is_zero(cc)) continue;
    Rational amp(cc);
    amp /= zz;
    e.add_term(kappa(nu) / 2, amp);
  }
  return e;
}

Rational hurwitz_number(long g, const Partition& mu_plus, const Partition& mu_minus) {
  if (g < 0) throw DomainError("hurwitz_number requires g >= 0");
  long r = 2 * g - 2 + mu_plus.length() + mu_minus.length();
  if (r < 0) return Rational(0);
  return phi_expsum(mu_plus, mu_minus).moment(r);
}

CJMatrix cj_matrix(long d) {
  if (d < 1) throw DomainError("cj_matrix requires d >= 1");
  CJMatrix m;
  m.d = d;
  m.basis = enumerate_partitions(d);
  const size_t n = m.basis.size();
  std::map<Partition, size_t> index;
  for (size_t i = 0; i < n; ++i) index.emplace(m.basis[i], i);
  m.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (size_t col = 0; col < n; ++col) {
    PPolynomial image = cut_join_apply(PPolynomial::monomial(m.basis[col], Rational(1)));
    for (auto& [mu, c] : image.terms) m.entries[index.at(mu)][col] = c;
  }
  return m;
}

Rational cj_entry_hurwitz(const Partition& mu, const Partition& nu) {
  return phi_expsum(mu, nu).moment(1) * Rational(z(nu));
}

std::vector<std::vector<ExpSum>> phi_matrix(long d) {
  auto basis = enumerate_partitions(d);
  const size_t n = basis.size();
  std::vector<std::vector<ExpSum>> m(n, std::vector<ExpSum>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      m[i][j] = phi_expsum(basis[i], basis[j]);
      if (j != i) m[j][i] = m[i][j];
    }
  return m;
}

}  // namespace hodgeint
