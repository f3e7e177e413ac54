#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hodgeint/numeric.hpp"

namespace hodgeint {

/// Weakly decreasing sequence of positive integers; the empty partition is
/// allowed and has size, length and kappa all zero.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  Partition(std::initializer_list<long> p) : parts(p) { validate(); }
  explicit Partition(std::vector<long> p) : parts(std::move(p)) { validate(); }

  void validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts[i] > parts[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
  }

  long size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }
  long length() const { return static_cast<long>(parts.size()); }
  bool empty() const { return parts.empty(); }

  long part(size_t i) const { return i < parts.size() ? parts[i] : 0; }

  bool operator==(const Partition& o) const { return parts == o.parts; }

  /// Canonical basis order: by size, then reverse-lexicographic within a
  /// size, so enumerate(d) starts at (d) and ends at (1^d).
  bool operator<(const Partition& o) const {
    long s = size(), t = o.size();
    if (s != t) return s < t;
    return parts > o.parts;  // lexicographically larger vector comes first
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + "]";
  }
};

/// kappa(mu) = sum mu_i (mu_i - 2i + 1); always even.
long kappa(const Partition& mu);

/// Centralizer order z_mu = prod_j m_j! j^{m_j}.
Integer z(const Partition& mu);

/// Multiplicity map j -> m_j(mu).
std::map<long, long> multiplicities(const Partition& mu);

/// All partitions of d in the canonical order.
std::vector<Partition> enumerate_partitions(long d);

Partition conjugate(const Partition& mu);

/// Hook lengths of all cells, row by row.
std::vector<long> hooks(const Partition& mu);

/// Contents j - i of all cells (0-based), row by row.
std::vector<long> contents(const Partition& mu);

/// Multiset union of parts, re-sorted.
Partition union_parts(const Partition& a, const Partition& b);

/// Componentwise containment of Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

/// Componentwise minimum shape.
Partition intersect(const Partition& a, const Partition& b);

/// All partitions contained in the given shape (including the empty one),
/// in the canonical order.
std::vector<Partition> subdiagrams(const Partition& shape);

/// All distinct sub-multisets of the parts (for monomial algebra splits),
/// each paired with its complement.
std::vector<std::pair<Partition, Partition>> submultiset_splits(const Partition& mu);

/// n(mu) = sum (i-1) mu_i, the exponent in the hook-content formula.
long n_statistic(const Partition& mu);

Partition partition_from_string(const std::string& s);

}  // namespace hodgeint
