#include "hodgeint/partition.hpp"

#include <algorithm>
#include <functional>

namespace hodgeint {

long kappa(const Partition& mu) {
  long k = 0;
  for (size_t i = 0; i < mu.parts.size(); ++i)
    k += mu.parts[i] * (mu.parts[i] - 2 * static_cast<long>(i + 1) + 1);
  return k;
}

std::map<long, long> multiplicities(const Partition& mu) {
  std::map<long, long> m;
  for (long p : mu.parts) ++m[p];
  return m;
}

Integer z(const Partition& mu) {
  Integer r = 1;
  for (auto& [j, m] : multiplicities(mu)) r *= factorial(m) * pow_integer(Integer(j), m);
  return r;
}

std::vector<Partition> enumerate_partitions(long d) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rest, long maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (d < 0) throw DomainError("cannot enumerate partitions of a negative integer");
  rec(d, d);
  return out;
}

Partition conjugate(const Partition& mu) {
  std::vector<long> c;
  if (!mu.parts.empty()) {
    c.resize(static_cast<size_t>(mu.parts[0]));
    for (long j = 0; j < mu.parts[0]; ++j)
      c[static_cast<size_t>(j)] =
          static_cast<long>(std::count_if(mu.parts.begin(), mu.parts.end(),
                                          [j](long p) { return p > j; }));
  }
  return Partition(std::move(c));
}

std::vector<long> hooks(const Partition& mu) {
  Partition nuc = conjugate(mu);
  std::vector<long> h;
  for (size_t i = 0; i < mu.parts.size(); ++i)
    for (long j = 0; j < mu.parts[i]; ++j)
      h.push_back(mu.parts[i] - static_cast<long>(j) +
                  nuc.parts[static_cast<size_t>(j)] - static_cast<long>(i) - 1);
  return h;
}

std::vector<long> contents(const Partition& mu) {
  std::vector<long> c;
  for (size_t i = 0; i < mu.parts.size(); ++i)
    for (long j = 0; j < mu.parts[i]; ++j) c.push_back(j - static_cast<long>(i));
  return c;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<long> p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  std::sort(p.begin(), p.end(), std::greater<long>());
  return Partition(std::move(p));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.parts.size() > outer.parts.size()) return false;
  for (size_t i = 0; i < inner.parts.size(); ++i)
    if (inner.parts[i] > outer.parts[i]) return false;
  return true;
}

Partition intersect(const Partition& a, const Partition& b) {
  std::vector<long> p;
  size_t n = std::min(a.parts.size(), b.parts.size());
  for (size_t i = 0; i < n; ++i) p.push_back(std::min(a.parts[i], b.parts[i]));
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

std::vector<Partition> subdiagrams(const Partition& shape) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(size_t, long)> rec = [&](size_t row, long prev) {
    out.push_back(Partition(cur));
    if (row >= shape.parts.size()) return;
    long cap = std::min(prev, shape.parts[row]);
    for (long p = cap; p >= 1; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, shape.parts.empty() ? 0 : shape.parts[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Partition, Partition>> submultiset_splits(const Partition& mu) {
  auto mult = multiplicities(mu);
  std::vector<std::pair<long, long>> vals(mult.begin(), mult.end());
  std::vector<std::pair<Partition, Partition>> out;
  std::vector<long> take(vals.size(), 0);
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == vals.size()) {
      std::vector<long> a, b;
      for (size_t k = 0; k < vals.size(); ++k) {
        for (long t = 0; t < take[k]; ++t) a.push_back(vals[k].first);
        for (long t = take[k]; t < vals[k].second; ++t) b.push_back(vals[k].first);
      }
      std::sort(a.begin(), a.end(), std::greater<long>());
      std::sort(b.begin(), b.end(), std::greater<long>());
      out.emplace_back(Partition(std::move(a)), Partition(std::move(b)));
      return;
    }
    for (long t = 0; t <= vals[idx].second; ++t) {
      take[idx] = t;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

long n_statistic(const Partition& mu) {
  long n = 0;
  for (size_t i = 0; i < mu.parts.size(); ++i)
    n += static_cast<long>(i) * mu.parts[i];
  return n;
}

Partition partition_from_string(const std::string& s) {
  std::vector<long> parts;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= s.size() || s[i] != '[') throw DomainError("partition must look like [3,1]");
  ++i;
  skip_ws();
  if (i < s.size() && s[i] == ']') return Partition();
  while (true) {
    skip_ws();
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw DomainError("invalid partition literal: " + s);
    parts.push_back(std::stol(s.substr(start, i - start)));
    skip_ws();
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    }
    throw DomainError("invalid partition literal: " + s);
  }
  skip_ws();
  if (i != s.size()) throw DomainError("trailing characters in partition literal: " + s);
  return Partition(std::move(parts));
}

}  // namespace hodgeint
