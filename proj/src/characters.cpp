#include "hodgeint/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>

#include <json.hpp>

namespace hodgeint {
namespace {

using Key = std::pair<Partition, Partition>;

struct CharCache {
  std::mutex mu;
  std::map<Key, Integer> memo;
  std::set<long> loaded;  // degrees whose disk cache was already read

  static CharCache& instance() {
    static CharCache c;
    return c;
  }
};

std::filesystem::path cache_file(long d) {
  const char* dir = std::getenv("HODGE_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::filesystem::path(dir) / ("chars-d" + std::to_string(d) + ".jsonl");
}

Partition partition_from_json(const nlohmann::json& j) {
  std::vector<long> p;
  for (auto& x : j) p.push_back(x.get<long>());
  return Partition(std::move(p));
}

void load_disk_cache(CharCache& cache, long d) {
  if (!cache.loaded.insert(d).second) return;
  auto path = cache_file(d);
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  try {
    auto header = nlohmann::json::parse(line);
    if (header.value("format", 0) != 1 || header.value("d", -1L) != d) return;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto rec = nlohmann::json::parse(line);
      Key k{partition_from_json(rec.at("nu")), partition_from_json(rec.at("mu"))};
      Integer v(rec.at("chi").get<std::string>());
      cache.memo.emplace(std::move(k), std::move(v));
    }
  } catch (...) {
    // A malformed cache is treated as absent.
  }
}

void append_disk_cache(long d, const Key& k, const Integer& v) {
  auto path = cache_file(d);
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) return;
  if (fresh) {
    nlohmann::ordered_json header;
    header["format"] = 1;
    header["d"] = d;
    out << header.dump() << "\n";
  }
  nlohmann::ordered_json rec;
  rec["nu"] = k.first.parts;
  rec["mu"] = k.second.parts;
  rec["chi"] = v.get_str();
  out << rec.dump() << "\n";
}

/// Border strips of length t are removed through the beta-set (first-column
/// hook lengths) picture: beta_j = nu_j + l - 1 - j; removing a strip moves
/// one beta value down by t, and the sign counts occupied slots jumped over.
Integer chi_rec(const Partition& nu, std::vector<long> cycles, CharCache& cache);

Integer chi_memo(const Partition& nu, const std::vector<long>& cycles, CharCache& cache) {
  load_disk_cache(cache, nu.size());
  Key key{nu, Partition(cycles)};
  auto it = cache.memo.find(key);
  if (it != cache.memo.end()) return it->second;
  Integer v = chi_rec(nu, cycles, cache);
  cache.memo.emplace(key, v);
  append_disk_cache(nu.size(), key, v);
  return v;
}

Integer chi_rec(const Partition& nu, std::vector<long> cycles, CharCache& cache) {
  if (cycles.empty()) return 1;  // nu is empty too, by the size invariant
  long t = cycles.front();       // largest cycle first
  cycles.erase(cycles.begin());

  long l = nu.length();
  std::vector<long> beta(nu.parts.size());
  for (size_t j = 0; j < nu.parts.size(); ++j)
    beta[j] = nu.parts[j] + l - 1 - static_cast<long>(j);

  Integer total = 0;
  for (size_t j = 0; j < beta.size(); ++j) {
    long target = beta[j] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    long jumped = static_cast<long>(
        std::count_if(beta.begin(), beta.end(),
                      [&](long b) { return b > target && b < beta[j]; }));
    std::vector<long> nb = beta;
    nb[j] = target;
    std::sort(nb.begin(), nb.end(), std::greater<long>());
    std::vector<long> parts(nb.size());
    for (size_t r = 0; r < nb.size(); ++r)
      parts[r] = nb[r] - (l - 1 - static_cast<long>(r));
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    Integer sub = chi_memo(Partition(std::move(parts)), cycles, cache);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

Integer chi(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size())
    throw SizeMismatch("chi requires |nu| = |mu|, got " + std::to_string(nu.size()) +
                       " and " + std::to_string(mu.size()));
  auto& cache = CharCache::instance();
  std::lock_guard<std::mutex> lock(cache.mu);
  load_disk_cache(cache, nu.size());
  return chi_memo(nu, mu.parts, cache);
}

Integer dim_irrep(const Partition& nu) {
  std::vector<long> ones(static_cast<size_t>(nu.size()), 1);
  return chi(nu, Partition(std::move(ones)));
}

Integer dim_hook(const Partition& nu) {
  Integer h = 1;
  for (long x : hooks(nu)) h *= x;
  return factorial(nu.size()) / h;
}

Rational f2(const Partition& nu) {
  long d = nu.size();
  if (d < 2) return rational(0);
  std::vector<long> cls{2};
  for (long k = 0; k < d - 2; ++k) cls.push_back(1);
  Integer num = binomial(d, 2) * chi(nu, Partition(std::move(cls)));
  Rational r(num, dim_irrep(nu));
  r.canonicalize();
  return r;
}

CharacterTable character_table(long d) {
  CharacterTable t;
  t.d = d;
  t.basis = enumerate_partitions(d);
  t.values.resize(t.basis.size());
  for (size_t i = 0; i < t.basis.size(); ++i) {
    t.values[i].reserve(t.basis.size());
    for (size_t j = 0; j < t.basis.size(); ++j)
      t.values[i].push_back(chi(t.basis[i], t.basis[j]));
  }
  return t;
}

}  // namespace hodgeint
