#include "hgk/groupid.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hgk {

GroupFingerprint fingerprint(const PermGroup& G) {
  GroupFingerprint fp;
  fp.order = G.order();
  const auto& elems = G.elements();
  for (const Perm& x : elems) ++fp.element_order_histogram[x.order()];
  fp.is_abelian = true;
  std::size_t center = 0;
  for (const Perm& x : elems) {
    bool central = true;
    for (const Perm& y : elems)
      if (x * y != y * x) {
        central = false;
        break;
      }
    if (central) ++center;
  }
  fp.center_order = center;
  fp.is_abelian = (center == elems.size());
  std::vector<Perm> comms;
  for (const Perm& x : G.generators())
    for (const Perm& y : G.generators())
      comms.push_back(x.inverse() * y.inverse() * x * y);
  // derived subgroup = normal closure of the generator commutators
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> todo;
  Perm id(G.degree());
  seen.insert(id);
  auto push = [&](const Perm& p) {
    if (seen.insert(p).second) todo.push_back(p);
  };
  for (const Perm& c : comms) push(c);
  for (std::size_t i = 0; i < todo.size(); ++i) {
    for (const Perm& g : G.generators()) push(todo[i].conjugated_by(g));
    for (const Perm& h : comms) push(todo[i] * h);
  }
  // close under multiplication
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(seen.begin(), seen.end());
    for (const Perm& a : cur)
      for (const Perm& b : cur)
        if (seen.insert(a * b).second) grew = true;
  }
  fp.derived_subgroup_order = seen.size();
  return fp;
}

std::vector<Perm> minimal_generating_sequence(const PermGroup& G) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span;
  span.insert(Perm(G.degree()));
  for (const Perm& x : G.elements()) {
    if (span.count(x)) continue;
    gens.push_back(x);
    // re-close
    std::vector<Perm> todo(span.begin(), span.end());
    span.clear();
    span.insert(Perm(G.degree()));
    std::vector<Perm> frontier{Perm(G.degree())};
    while (!frontier.empty()) {
      Perm cur = frontier.back();
      frontier.pop_back();
      for (const Perm& g : gens) {
        Perm nxt = g * cur;
        if (span.insert(nxt).second) frontier.push_back(nxt);
      }
    }
    if (span.size() == G.order()) break;
  }
  return gens;
}

namespace {

// Close a partial homomorphism under multiplication; the map stays restricted
// to the subgroup generated by its current domain. Returns false exactly on a
// conflict (ill-defined product or, when required, an injectivity failure).
bool close_partial_map(std::unordered_map<Perm, Perm, PermHash>& known, bool require_injective) {
  std::vector<Perm> frontier;
  frontier.reserve(known.size());
  for (const auto& kv : known) frontier.push_back(kv.first);
  std::vector<std::pair<Perm, Perm>> mults(known.begin(), known.end());
  std::unordered_set<Perm, PermHash> image_seen;
  for (const auto& kv : known) image_seen.insert(kv.second);
  if (require_injective && image_seen.size() != known.size()) return false;
  while (!frontier.empty()) {
    Perm x = std::move(frontier.back());
    frontier.pop_back();
    Perm fx = known.at(x);
    for (const auto& [g, fg] : mults) {
      Perm xg = x * g;
      Perm fxg = fx * fg;
      auto it = known.find(xg);
      if (it != known.end()) {
        if (it->second != fxg) return false;
      } else {
        if (require_injective && !image_seen.insert(fxg).second) return false;
        known.emplace(xg, fxg);
        frontier.push_back(xg);
      }
    }
  }
  return true;
}

bool iso_search(const PermGroup& G, const PermGroup& H, const std::vector<Perm>& gens,
                std::size_t pos, const std::unordered_map<Perm, Perm, PermHash>& partial,
                std::unordered_map<Perm, Perm, PermHash>& result) {
  if (partial.size() == G.order()) {
    result = partial;
    return true;
  }
  if (pos == gens.size()) return false;
  const Perm& g = gens[pos];
  const unsigned want = g.order();
  for (const Perm& h : H.elements()) {
    if (h.order() != want) continue;
    auto trial = partial;
    trial.emplace(g, h);
    if (!close_partial_map(trial, true)) continue;
    if (iso_search(G, H, gens, pos + 1, trial, result)) return true;
  }
  return false;
}

}  // namespace

IsoWitness are_isomorphic(const PermGroup& G, const PermGroup& H, std::size_t bound) {
  IsoWitness w;
  if (G.order() != H.order()) return w;
  if (G.order() > bound)
    throw BoundError("are_isomorphic: order " + std::to_string(G.order()) + " exceeds bound");
  if (fingerprint(G) != fingerprint(H)) return w;
  std::vector<Perm> gens = minimal_generating_sequence(G);
  std::unordered_map<Perm, Perm, PermHash> partial, result;
  partial.emplace(Perm(G.degree()), Perm(H.degree()));
  if (!iso_search(G, H, gens, 0, partial, result)) return w;
  w.isomorphic = true;
  for (const Perm& x : G.elements()) {
    w.from.push_back(x);
    w.to.push_back(result.at(x));
  }
  return w;
}

// ---------------------------------------------------------------------------
// catalogs

namespace {

std::vector<std::string> split_gens(const char* text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = text; *p; ++p) {
    if (*p == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(*p);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

CatalogEntry to_entry(const detail::RawCatalogEntry& raw) {
  CatalogEntry e;
  e.name = raw.name;
  e.degree = static_cast<unsigned>(raw.degree);
  e.order = raw.order;
  e.generators = split_gens(raw.generators);
  return e;
}

}  // namespace

PermGroup CatalogEntry::group() const {
  if (!has_generators())
    throw ValidationError("catalog entry '" + name + "' carries no generators");
  std::vector<Perm> gens;
  gens.reserve(generators.size());
  for (const auto& s : generators) gens.push_back(Perm::parse(s, degree));
  PermGroup G = PermGroup::generate(degree, std::move(gens));
  if (static_cast<long long>(G.order()) != order)
    throw ValidationError("catalog entry '" + name + "' fails its order check");
  return G;
}

const std::vector<long long>& catalog_orders() {
  static const std::vector<long long> orders = [] {
    std::vector<long long> out;
    for (std::size_t i = 0; i < detail::kSmallGroupCount; ++i) {
      long long m = detail::kSmallGroups[i].order;
      if (out.empty() || out.back() != m) out.push_back(m);
    }
    return out;
  }();
  return orders;
}

std::vector<CatalogEntry> groups_of_order(long long m) {
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < detail::kSmallGroupCount; ++i)
    if (detail::kSmallGroups[i].order == m) out.push_back(to_entry(detail::kSmallGroups[i]));
  if (out.empty())
    throw BoundError("groups_of_order: order " + std::to_string(m) + " not in the embedded catalog");
  return out;
}

const std::vector<unsigned>& catalog_degrees() {
  static const std::vector<unsigned> degrees = [] {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < detail::kTransitiveGroupCount; ++i) {
      unsigned d = static_cast<unsigned>(detail::kTransitiveGroups[i].degree);
      if (out.empty() || out.back() != d) out.push_back(d);
    }
    return out;
  }();
  return degrees;
}

std::vector<CatalogEntry> transitive_groups(unsigned degree) {
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < detail::kTransitiveGroupCount; ++i)
    if (detail::kTransitiveGroups[i].degree == static_cast<int>(degree))
      out.push_back(to_entry(detail::kTransitiveGroups[i]));
  if (out.empty())
    throw BoundError("transitive_groups: degree " + std::to_string(degree) + " not in the catalog");
  return out;
}

namespace {

// conjugacy of subgroups of S_n by exhaustive search over S_n; n <= 7
bool perm_conjugate(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree() || A.order() != B.order()) return false;
  const unsigned n = A.degree();
  if (n > 7) return false;
  std::vector<std::uint8_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  do {
    Perm sigma{std::vector<std::uint8_t>(img)};
    bool ok = true;
    for (const Perm& g : A.generators())
      if (!B.contains(g.conjugated_by(sigma))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

}  // namespace

std::string identify(const PermGroup& G) {
  const long long m = static_cast<long long>(G.order());
  // transitive catalog first: distinguishes permutation-inequivalent copies
  const auto& degs = catalog_degrees();
  if (std::find(degs.begin(), degs.end(), G.degree()) != degs.end() && G.is_transitive()) {
    std::vector<CatalogEntry> cand;
    for (const auto& e : transitive_groups(G.degree()))
      if (e.order == m && e.has_generators()) cand.push_back(e);
    if (G.degree() <= 7) {
      for (const auto& e : cand)
        if (perm_conjugate(G, e.group())) return e.name;
    } else if (cand.size() == 1) {
      if (fingerprint(G) == fingerprint(cand[0].group())) return cand[0].name;
    }
  }
  const auto& orders = catalog_orders();
  if (std::find(orders.begin(), orders.end(), m) != orders.end() && m <= 120) {
    GroupFingerprint fp = fingerprint(G);
    for (const auto& e : groups_of_order(m)) {
      PermGroup H = e.group();
      if (fingerprint(H) != fp) continue;
      if (are_isomorphic(G, H).isomorphic) return e.name;
    }
  }
  return "unknown(order=" + std::to_string(m) + ")";
}

}  // namespace hgk
