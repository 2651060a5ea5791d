#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgk/permgroup.hpp"

namespace hgk {

namespace detail {
struct RawCatalogEntry {
  const char* name;
  int degree;
  long long order;
  const char* generators;  // semicolon-separated cycle strings; "" for order-only rows
};
extern const RawCatalogEntry kSmallGroups[];
extern const std::size_t kSmallGroupCount;
extern const RawCatalogEntry kTransitiveGroups[];
extern const std::size_t kTransitiveGroupCount;
}  // namespace detail

// isomorphism-invariant signature; equality is necessary but not sufficient
struct GroupFingerprint {
  std::size_t order = 0;
  std::map<unsigned, std::size_t> element_order_histogram;
  bool is_abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_subgroup_order = 0;

  bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const PermGroup& G);

// greedy minimal generating sequence over the canonical element order
std::vector<Perm> minimal_generating_sequence(const PermGroup& G);

struct IsoWitness {
  bool isomorphic = false;
  // aligned element lists: witness_from[i] -> witness_to[i]
  std::vector<Perm> from;
  std::vector<Perm> to;
};

IsoWitness are_isomorphic(const PermGroup& G, const PermGroup& H, std::size_t bound = 120);

struct CatalogEntry {
  std::string name;
  unsigned degree = 1;
  long long order = 1;
  std::vector<std::string> generators;  // empty for order-only rows

  bool has_generators() const { return !generators.empty(); }
  PermGroup group() const;
};

const std::vector<long long>& catalog_orders();
std::vector<CatalogEntry> groups_of_order(long long m);
const std::vector<unsigned>& catalog_degrees();
std::vector<CatalogEntry> transitive_groups(unsigned degree);

// catalog name of the isomorphism class (permutation-equivalence for
// transitive groups of catalog degree), or "unknown(order=m)"
std::string identify(const PermGroup& G);

}  // namespace hgk
