#pragma once

#include <map>
#include <utility>

#include "hodgeint/numeric.hpp"
#include "hodgeint/partition.hpp"

namespace hodgeint {

/// Bigraded collection indexed by pairs of partitions within caps
/// (|mu+| <= dplus, |mu-| <= dminus), dense: every index pair in range has a
/// stored coefficient.  Multiplication is the monomial product
/// (F G)_{mu} = sum over splittings mu = alpha u beta of F_alpha G_beta,
/// with unions taken independently on the two sides and terms beyond the
/// caps discarded.
template <class Coef>
struct BigradedFamily {
  using Key = std::pair<Partition, Partition>;

  long dplus = 0, dminus = 0;
  Coef zero;  // prototype zero (fixes the declared series order)
  std::map<Key, Coef> entries;

  BigradedFamily() = default;
  BigradedFamily(long dp, long dm, Coef z)
      : dplus(dp), dminus(dm), zero(std::move(z)) {
    for (long a = 0; a <= dplus; ++a)
      for (const Partition& p : enumerate_partitions(a))
        for (long b = 0; b <= dminus; ++b)
          for (const Partition& q : enumerate_partitions(b))
            entries.emplace(Key{p, q}, zero);
  }

  Coef& at(const Partition& p, const Partition& q) {
    auto it = entries.find({p, q});
    if (it == entries.end()) throw DomainError("family index out of caps");
    return it->second;
  }
  const Coef& at(const Partition& p, const Partition& q) const {
    auto it = entries.find({p, q});
    if (it == entries.end()) throw DomainError("family index out of caps");
    return it->second;
  }

  BigradedFamily operator+(const BigradedFamily& o) const {
    BigradedFamily r = *this;
    for (auto& [k, c] : o.entries) r.entries.at(k) += c;
    return r;
  }
  BigradedFamily operator-(const BigradedFamily& o) const {
    BigradedFamily r = *this;
    for (auto& [k, c] : o.entries) r.entries.at(k) = r.entries.at(k) - c;
    return r;
  }

  template <class S>
  BigradedFamily scaled(const S& s) const {
    BigradedFamily r = *this;
    for (auto& [k, c] : r.entries) c = c.scaled(s);
    return r;
  }

  BigradedFamily operator*(const BigradedFamily& o) const {
    BigradedFamily r(dplus, dminus, zero);
    for (auto& [ka, ca] : entries) {
      if (is_zero(ca)) continue;
      for (auto& [kb, cb] : o.entries) {
        if (is_zero(cb)) continue;
        if (ka.first.size() + kb.first.size() > dplus) continue;
        if (ka.second.size() + kb.second.size() > dminus) continue;
        Key k{union_parts(ka.first, kb.first), union_parts(ka.second, kb.second)};
        r.entries.at(k) += ca * cb;
      }
    }
    return r;
  }

  bool all_zero() const {
    for (auto& [k, c] : entries)
      if (!is_zero(c)) return false;
    return true;
  }
};

/// log F in the bigraded algebra; F must have (emptyset, emptyset) entry
/// equal to `one`.  Exact: the expansion terminates at power dplus + dminus.
template <class Coef>
BigradedFamily<Coef> family_log(const BigradedFamily<Coef>& f, const Coef& one) {
  static const Partition kEmpty{};
  if (!is_zero(f.at(kEmpty, kEmpty) - one))
    throw DomainError("family_log requires constant entry 1");
  BigradedFamily<Coef> n = f;
  n.at(kEmpty, kEmpty) = n.zero;
  BigradedFamily<Coef> acc(f.dplus, f.dminus, f.zero);
  BigradedFamily<Coef> pw = n;
  for (long k = 1; k <= f.dplus + f.dminus; ++k) {
    if (pw.all_zero()) break;
    acc = acc + pw.scaled(rational(k % 2 == 1 ? 1 : -1, k));
    pw = pw * n;
  }
  return acc;
}

/// exp F; F must have zero (emptyset, emptyset) entry.  Returns 1 + F + ...
/// with `one` placed at the constant slot.
template <class Coef>
BigradedFamily<Coef> family_exp(const BigradedFamily<Coef>& f, const Coef& one) {
  static const Partition kEmpty{};
  if (!is_zero(f.at(kEmpty, kEmpty)))
    throw DomainError("family_exp requires zero constant entry");
  BigradedFamily<Coef> acc = f;
  acc.at(kEmpty, kEmpty) = acc.at(kEmpty, kEmpty) + one;
  BigradedFamily<Coef> pw = f;
  Rational kfact(1);
  for (long k = 2; k <= f.dplus + f.dminus; ++k) {
    pw = pw * f;
    if (pw.all_zero()) break;
    kfact *= Rational(k);
    acc = acc + pw.scaled(Rational(1) / kfact);
  }
  return acc;
}

}  // namespace hodgeint
