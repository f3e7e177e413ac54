#include "hodgeint/wfunctions.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "hodgeint/expand.hpp"
#include "hodgeint/symfun.hpp"

namespace hodgeint {

RationalFunction w_mu(const Partition& mu) {
  const long l = mu.length();
  RationalFunction w = v_power(kappa(mu) / 2);
  for (long i = 1; i <= l; ++i)
    for (long j = i + 1; j <= l; ++j)
      w *= quantum_bracket(mu.part(i - 1) - mu.part(j - 1) + j - i) /
           quantum_bracket(j - i);
  for (long i = 1; i <= l; ++i)
    for (long a = 1; a <= mu.part(i - 1); ++a)
      w /= quantum_bracket(a - i + l);
  return w;
}

std::vector<RationalFunction> e_mu_coeffs(const Partition& mu, long kmax) {
  if (kmax < 0) throw DomainError("e_mu_coeffs requires K >= 0");
  std::vector<RationalFunction> e(static_cast<size_t>(kmax) + 1);
  e[0] = RationalFunction(Rational(1));
  const long l = mu.length();
  for (long j = 1; j <= l; ++j) {
    RationalFunction a = q_power(mu.part(j - 1) - j);
    for (long k = kmax; k >= 1; --k) e[k] += a * e[k - 1];
  }
  for (long j = 1; j <= l; ++j) {
    RationalFunction a = q_power(-j);
    for (long k = 1; k <= kmax; ++k) e[k] -= a * e[k - 1];
  }
  // Tail factor 1 + sum_n t^n / prod_{i<=n} (q^i - 1), truncated at t^kmax.
  std::vector<RationalFunction> tail(static_cast<size_t>(kmax) + 1);
  tail[0] = RationalFunction(Rational(1));
  for (long n = 1; n <= kmax; ++n)
    tail[n] = tail[n - 1] / (q_power(n) - RationalFunction(Rational(1)));
  std::vector<RationalFunction> out(static_cast<size_t>(kmax) + 1);
  for (long k = 0; k <= kmax; ++k)
    for (long m = 0; m <= k; ++m) out[k] += e[m] * tail[k - m];
  return out;
}

RationalFunction w_munu_def(const Partition& mu, const Partition& nu) {
  if (nu.empty()) return w_mu(mu);
  Partition nuc = conjugate(nu);
  const long n = nu.part(0);
  auto e = e_mu_coeffs(mu, nu.size());
  std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      long k = nuc.part(i - 1) - i + j;
      if (k >= 0 && k <= nu.size()) m[i - 1][j - 1] = e[static_cast<size_t>(k)];
    }
  return v_power(nu.size()) * w_mu(mu) * ratfun_det(std::move(m));
}

RationalFunction w_munu_skew(const Partition& mu, const Partition& nu) {
  std::vector<RationalFunction> parts;
  for (const Partition& rho : subdiagrams(intersect(mu, nu)))
    parts.push_back(q_power(-rho.size()) * principal_spec(mu, rho) *
                    principal_spec(nu, rho));
  // Balanced reduction keeps the intermediate gcd calls on smaller operands.
  while (parts.size() > 1) {
    std::vector<RationalFunction> next;
    for (size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  RationalFunction sum = parts.empty() ? RationalFunction() : parts[0];
  long w = mu.size() + nu.size();
  Rational sign = (w % 2 == 0) ? Rational(1) : Rational(-1);
  return RationalFunction::monomial(kappa(mu) + kappa(nu) + w, sign) * sum;
}

const RationalFunction& w_munu(const Partition& mu, const Partition& nu) {
  static std::mutex lock;
  static std::map<std::pair<Partition, Partition>, RationalFunction> memo;
  std::lock_guard<std::mutex> guard(lock);
  auto it = memo.find({mu, nu});
  if (it != memo.end()) return it->second;
  RationalFunction w = w_munu_def(mu, nu);
  return memo.emplace(std::make_pair(mu, nu), std::move(w)).first->second;
}

const Series<GaussianRational>& w_series(const Partition& mu, const Partition& nu,
                                         long order) {
  static std::mutex lock;
  static std::map<std::tuple<Partition, Partition, long>, Series<GaussianRational>> memo;
  RationalFunction w = w_munu(mu, nu);
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_tuple(mu, nu, order);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  return memo.emplace(key, expand_at_unity(w, order)).first->second;
}

}  // namespace hodgeint
