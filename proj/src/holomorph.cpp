#include "hgk/holomorph.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hgk/groupid.hpp"

namespace hgk {

namespace {

// multiplication table of N over the canonical element order
std::vector<std::uint32_t> group_table(const PermGroup& N) {
  const auto& elems = N.elements();
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = *N.element_index(elems[i] * elems[j]);
  return table;
}

// all automorphisms as permutations of element indices, by backtracking over
// images of a minimal generating sequence with order-preserving pruning
std::vector<Perm> all_automorphisms(const PermGroup& N) {
  const auto& elems = N.elements();
  const std::size_t n = elems.size();
  std::vector<Perm> gens = minimal_generating_sequence(N);
  std::vector<unsigned> gen_idx;
  for (const Perm& g : gens) gen_idx.push_back(*N.element_index(g));

  std::vector<std::uint32_t> table = group_table(N);
  std::vector<unsigned> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = elems[i].order();

  std::vector<Perm> result;
  // partial map over element indices; UINT32_MAX = unset
  std::vector<std::uint32_t> map0(n, UINT32_MAX);
  map0[0] = 0;

  auto close_map = [&](std::vector<std::uint32_t>& map, std::vector<std::uint32_t> domain) -> bool {
    std::vector<bool> image_used(n, false);
    for (std::size_t i = 0; i < n; ++i)
      if (map[i] != UINT32_MAX) {
        if (image_used[map[i]]) return false;
        image_used[map[i]] = true;
      }
    std::vector<std::uint32_t> mults = domain;
    for (std::size_t pos = 0; pos < domain.size(); ++pos) {
      std::uint32_t x = domain[pos];
      for (std::uint32_t g : mults) {
        std::uint32_t xg = table[x * n + g];
        std::uint32_t fxg = table[map[x] * n + map[g]];
        if (map[xg] != UINT32_MAX) {
          if (map[xg] != fxg) return false;
        } else {
          if (image_used[fxg]) return false;
          image_used[fxg] = true;
          map[xg] = fxg;
          domain.push_back(xg);
        }
      }
    }
    return true;
  };

  std::vector<std::uint32_t> initial_domain{0};

  std::function<void(std::vector<std::uint32_t>&, std::vector<std::uint32_t>&, std::size_t)> rec =
      [&](std::vector<std::uint32_t>& map, std::vector<std::uint32_t>& domain, std::size_t pos) {
        if (pos == gen_idx.size()) {
          // map is total iff domain covers everything
          std::size_t covered = 0;
          for (auto v : map) covered += (v != UINT32_MAX) ? 1 : 0;
          if (covered == n) {
            std::vector<std::uint8_t> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(map[i]);
            result.push_back(Perm(std::move(img)));
          }
          return;
        }
        std::uint32_t g = gen_idx[pos];
        for (std::uint32_t cand = 0; cand < n; ++cand) {
          if (orders[cand] != orders[g]) continue;
          auto map2 = map;
          auto dom2 = domain;
          if (map2[g] != UINT32_MAX) {
            if (map2[g] != cand) continue;
          } else {
            map2[g] = cand;
            dom2.push_back(g);
          }
          if (!close_map(map2, dom2)) continue;
          // recompute covered domain after closure
          std::vector<std::uint32_t> dom3;
          for (std::uint32_t i = 0; i < n; ++i)
            if (map2[i] != UINT32_MAX) dom3.push_back(i);
          rec(map2, dom3, pos + 1);
        }
      };

  rec(map0, initial_domain, 0);
  std::sort(result.begin(), result.end());
  return result;
}

std::uint64_t table_hash(const std::vector<std::uint32_t>& table) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : table) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

struct HolCache {
  std::mutex mu;
  std::map<std::pair<std::size_t, std::uint64_t>, std::unique_ptr<HolomorphGroup>> entries;
};

HolCache& hol_cache() {
  static HolCache cache;
  return cache;
}

// optional on-disk layer for the automorphism search, keyed by the
// multiplication table hash; controlled by HGKIT_CACHE_DIR
std::string disk_cache_path(std::size_t order, std::uint64_t hash) {
  const char* dir = std::getenv("HGKIT_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream out;
  out << dir << "/aut_" << order << "_" << std::hex << hash << ".txt";
  return out.str();
}

bool is_table_automorphism(const PermGroup& N, const std::vector<std::uint32_t>& table,
                           const Perm& a) {
  const std::size_t n = N.order();
  if (a(0) != 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(table[i * n + j]) != table[a(static_cast<unsigned>(i)) * n + a(static_cast<unsigned>(j))])
        return false;
  return true;
}

struct AutCacheFile {
  std::size_t aut_order = 0;
  std::vector<Perm> gens;
};

AutCacheFile load_aut_gens(const std::string& path, unsigned degree) {
  AutCacheFile out;
  std::ifstream in(path);
  if (!in) return out;
  if (!(in >> out.aut_order)) return out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.gens.push_back(Perm::parse(line, degree));
    } catch (const Error&) {
      out.aut_order = 0;
      out.gens.clear();
      return out;
    }
  }
  return out;
}

void store_aut_gens(const std::string& path, const PermGroup& aut) {
  std::ofstream out(path);
  if (!out) return;
  out << aut.order() << "\n";
  for (const Perm& g : aut.generators()) out << g.cycle_string() << "\n";
}

}  // namespace

PermGroup automorphism_group(const PermGroup& N, std::size_t bound) {
  if (N.order() > bound)
    throw BoundError("automorphism_group: order " + std::to_string(N.order()) +
                     " exceeds bound " + std::to_string(bound));
  std::vector<Perm> autos = all_automorphisms(N);
  std::vector<Perm> gens;
  for (const Perm& a : autos)
    if (!a.is_identity()) gens.push_back(a);
  PermGroup full = PermGroup::from_elements(static_cast<unsigned>(N.order()), gens, autos);
  // keep a small generating set for downstream work
  std::vector<Perm> small = minimal_generating_sequence(full);
  return PermGroup::from_elements(static_cast<unsigned>(N.order()), small, full.elements());
}

const HolomorphGroup& holomorph(const PermGroup& N, std::size_t bound) {
  if (N.order() > bound)
    throw BoundError("holomorph: order " + std::to_string(N.order()) + " exceeds bound " +
                     std::to_string(bound));
  std::vector<std::uint32_t> table = group_table(N);
  auto key = std::make_pair(N.order(), table_hash(table));
  HolCache& cache = hol_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return *it->second;
  }
  auto hol = std::make_unique<HolomorphGroup>();
  hol->left_regular = left_regular_rep(N);
  const std::string disk = disk_cache_path(N.order(), key.second);
  bool from_disk = false;
  if (!disk.empty()) {
    AutCacheFile cached = load_aut_gens(disk, static_cast<unsigned>(N.order()));
    if (cached.aut_order > 0 && !cached.gens.empty()) {
      bool ok = true;
      for (const Perm& g : cached.gens) ok = ok && is_table_automorphism(N, table, g);
      if (ok) {
        PermGroup aut = PermGroup::generate(static_cast<unsigned>(N.order()), cached.gens);
        if (aut.order() == cached.aut_order) {
          hol->automorphism_part = std::move(aut);
          from_disk = true;
        }
      }
    }
  }
  if (!from_disk) {
    hol->automorphism_part = automorphism_group(N, bound);
    if (!disk.empty()) store_aut_gens(disk, hol->automorphism_part);
  }
  std::vector<Perm> gens = hol->left_regular.generators();
  for (const Perm& a : hol->automorphism_part.generators()) gens.push_back(a);
  hol->ambient = PermGroup::generate(static_cast<unsigned>(N.order()), gens);
  hol->element_labels = N.elements();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.entries.emplace(key, std::move(hol));
  return *it->second;
}

long long euler_phi(long long n) {
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long long holomorph_order_cyclic(long long n) {
  if (n < 1) throw ValidationError("holomorph_order_cyclic: n must be positive");
  return n * euler_phi(n);
}

long long holomorph_order_dihedral(long long n) {
  if (n < 3) throw ValidationError("holomorph_order_dihedral: n must be at least 3");
  return 2 * n * n * euler_phi(n);
}

}  // namespace hgk
