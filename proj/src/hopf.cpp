#include "hgk/hopf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hgk {

ExtensionDatum make_extension(const PermGroup& G, const PermGroup& Gp) {
  if (!Gp.is_subgroup_of(G)) throw ValidationError("extension datum: Gp is not a subgroup of G");
  if (core(G, Gp).order() != 1)
    throw ValidationError("extension datum: core of Gp in G is not trivial");
  CosetAction action = left_coset_action(G, Gp);
  unsigned n = static_cast<unsigned>(action.space().coset_reps.size());
  return ExtensionDatum{G, Gp, n, std::move(action)};
}

ExtensionDatum make_subquotient_extension(const PermGroup& G, const PermGroup& Gpp) {
  CosetAction action = left_coset_action(G, Gpp);
  PermGroup image = action.image();
  PermGroup stab = image.stabilizer(0);
  return make_extension(image, stab);
}

std::vector<PermGroup> normal_complement(const PermGroup& G, const PermGroup& Gp) {
  if (!Gp.is_subgroup_of(G)) throw ValidationError("normal_complement: not a subgroup");
  const std::size_t target = G.order() / Gp.order();
  std::vector<PermGroup> out;
  for (const PermGroup& N : normal_subgroups(G)) {
    if (N.order() != target) continue;
    // trivial intersection
    const auto& a = N.elements();
    const auto& b = Gp.elements();
    std::vector<Perm> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() == 1) out.push_back(N);
  }
  // cyclic-most complements first, matching the usual table conventions
  auto max_order = [](const PermGroup& N) {
    unsigned m = 1;
    for (const Perm& p : N.elements()) m = std::max(m, p.order());
    return m;
  };
  std::stable_sort(out.begin(), out.end(), [&](const PermGroup& x, const PermGroup& y) {
    unsigned mx = max_order(x), my = max_order(y);
    if (mx != my) return mx > my;
    return x.elements() < y.elements();
  });
  return out;
}

AcgResult is_almost_classically_galois(const ExtensionDatum& E) {
  AcgResult r;
  r.complements = normal_complement(E.G, E.Gp);
  r.almost_classically_galois = !r.complements.empty();
  return r;
}

// ---------------------------------------------------------------------------
// direct search for regular subgroups

namespace {

// candidate elements of a regular subgroup: all cycles the same length
bool semiregular(const Perm& p) {
  const unsigned n = p.degree();
  std::vector<bool> seen(n, false);
  unsigned len0 = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p(j);
      ++len;
    }
    if (len0 == 0)
      len0 = len;
    else if (len != len0)
      return false;
  }
  return true;
}

void enumerate_perms(unsigned n, const std::function<void(const Perm&)>& sink) {
  std::vector<std::uint8_t> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  do {
    sink(Perm{std::vector<std::uint8_t>(img)});
  } while (std::next_permutation(img.begin(), img.end()));
}

struct RegularSearch {
  unsigned n;
  std::vector<std::vector<Perm>> cands;  // by image of point 0
  std::vector<PermGroup> found;

  // state: closed element set with at most one element per image of 0
  void run() {
    std::vector<Perm> state{Perm(n)};
    recurse(state);
  }

  // returns false if the closure violates regularity
  bool close(std::vector<Perm>& set, const Perm& added) {
    std::vector<Perm> queue{added};
    std::set<Perm> have(set.begin(), set.end());
    if (!have.insert(added).second) return true;
    set.push_back(added);
    while (!queue.empty()) {
      Perm x = std::move(queue.back());
      queue.pop_back();
      std::size_t count = set.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (const Perm* prod : {&x, &set[i]}) {
          Perm y = (prod == &x) ? x * set[i] : set[i] * x;
          if (have.count(y)) continue;
          if (!y.is_identity() && y.fixed_point_count() > 0) return false;
          have.insert(y);
          set.push_back(y);
          queue.push_back(y);
          if (set.size() > n) return false;
        }
      }
    }
    // at most one element per image of the base point
    std::vector<bool> hit(n, false);
    for (const Perm& p : set) {
      if (hit[p(0)]) return false;
      hit[p(0)] = true;
    }
    return true;
  }

  void recurse(const std::vector<Perm>& state) {
    if (state.size() == n) {
      std::vector<Perm> elems = state;
      std::sort(elems.begin(), elems.end());
      std::vector<Perm> gens;
      for (const Perm& p : elems)
        if (!p.is_identity()) gens.push_back(p);
      found.push_back(PermGroup::from_elements(n, gens, elems));
      return;
    }
    std::vector<bool> covered(n, false);
    for (const Perm& p : state) covered[p(0)] = true;
    unsigned j = 0;
    while (j < n && covered[j]) ++j;
    for (const Perm& cand : cands[j]) {
      std::vector<Perm> next = state;
      if (close(next, cand)) recurse(next);
    }
  }
};

}  // namespace

const std::vector<PermGroup>& regular_subgroups_of_sym(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<PermGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > 8) throw BoundError("regular subgroup search limited to degree 8");
  RegularSearch search;
  search.n = n;
  search.cands.resize(n);
  enumerate_perms(n, [&](const Perm& p) {
    if (!p.is_identity() && p.fixed_point_count() == 0 && semiregular(p))
      search.cands[p(0)].push_back(p);
  });
  search.run();
  std::sort(search.found.begin(), search.found.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.elements() < b.elements(); });
  auto [pos, inserted] = cache.emplace(n, std::move(search.found));
  return pos->second;
}

std::vector<PermGroup> gp_regular_subgroups(const ExtensionDatum& E) {
  if (E.n > 8) throw BoundError("gp_regular_subgroups: degree too large for direct search");
  std::vector<PermGroup> out;
  for (const PermGroup& N : regular_subgroups_of_sym(E.n))
    if (is_normalized_by(N, E.lambda())) out.push_back(N);
  return out;
}

// ---------------------------------------------------------------------------
// Byott translation

namespace {

// Generating sequence tuned for homomorphism searches: start from an element
// of maximal order and grow the generated subgroup as fast as possible. This
// keeps the sequence short and the candidate buckets small (high-order
// elements are rare in a holomorph).
std::vector<Perm> embedding_generating_sequence(const PermGroup& G) {
  const auto& elems = G.elements();
  const std::size_t n = elems.size();
  const auto& table = G.mult_table();
  auto closure_of = [&](std::vector<std::uint32_t> seed) {
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> out;
    auto push = [&](std::uint32_t v) {
      if (!in[v]) {
        in[v] = true;
        out.push_back(v);
      }
    };
    push(0);
    for (auto v : seed) push(v);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        push(table[out[i] * n + out[j]]);
        push(table[out[j] * n + out[i]]);
      }
    return out;
  };

  std::vector<std::uint32_t> chosen;
  std::uint32_t best = 0;
  unsigned best_order = 0;
  for (std::uint32_t i = 1; i < n; ++i)
    if (elems[i].order() > best_order) {
      best_order = elems[i].order();
      best = i;
    }
  if (n == 1) return {};
  chosen.push_back(best);
  std::vector<std::uint32_t> span = closure_of(chosen);
  while (span.size() < n) {
    std::vector<bool> in_span(n, false);
    for (auto v : span) in_span[v] = true;
    std::uint32_t pick = 0;
    std::size_t pick_size = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
      if (in_span[i]) continue;
      auto seed = chosen;
      seed.push_back(i);
      std::size_t size = closure_of(seed).size();
      if (size > pick_size) {
        pick_size = size;
        pick = i;
      }
      if (size == n) break;
    }
    chosen.push_back(pick);
    auto seed = chosen;
    span = closure_of(seed);
  }
  std::vector<Perm> out;
  for (auto i : chosen) out.push_back(elems[i]);
  return out;
}

struct HomSearch {
  const ExtensionDatum* E;
  const HolomorphGroup* hol;
  const PermGroup* ambient;

  std::vector<Perm> gen_seq;             // generating sequence of G
  std::vector<std::uint32_t> gen_idx;    // indices into G.elements()
  std::vector<std::vector<std::uint32_t>> cand_idx;  // ambient element indices per generator
  std::vector<unsigned> pair_order;      // order of gen_seq[0] * gen_seq[pos] in G

  const std::vector<std::uint32_t>* gtable = nullptr;
  std::size_t gsize = 0;
  std::vector<bool> gp_mask;             // Gp membership by G element index

  std::vector<EmbeddingClass> raw_embeddings;
  std::vector<std::vector<std::uint32_t>> raw_gen_images;

  void run() {
    std::vector<std::uint32_t> map(gsize, UINT32_MAX);
    map[0] = 0;  // identity -> identity
    std::vector<bool> used(ambient->order(), false);
    used[0] = true;
    choose(0, map, used);
  }

  // grow the partial map by right-multiplication closure; false on conflict
  bool close(std::vector<std::uint32_t>& map, std::vector<bool>& used,
             std::vector<std::uint32_t> domain, std::size_t gens_known) {
    const auto& elems = ambient->elements();
    for (std::size_t pos = 0; pos < domain.size(); ++pos) {
      std::uint32_t x = domain[pos];
      for (std::size_t k = 0; k < gens_known; ++k) {
        std::uint32_t g = gen_idx[k];
        if (map[g] == UINT32_MAX) continue;
        std::uint32_t xg = (*gtable)[x * gsize + g];
        Perm image = elems[map[x]] * elems[map[g]];
        auto idx = ambient->element_index(image);
        std::uint32_t fxg = *idx;
        if (map[xg] != UINT32_MAX) {
          if (map[xg] != fxg) return false;
        } else {
          if (used[fxg]) return false;  // injectivity
          used[fxg] = true;
          map[xg] = fxg;
          domain.push_back(xg);
        }
      }
    }
    return true;
  }

  void choose(std::size_t pos, const std::vector<std::uint32_t>& map, const std::vector<bool>& used) {
    if (pos == gen_seq.size()) {
      finish(map);
      return;
    }
    const auto& elems = ambient->elements();
    const std::uint32_t g = gen_idx[pos];
    for (std::uint32_t cand : cand_idx[pos]) {
      if (map[g] != UINT32_MAX) {
        if (map[g] != cand) continue;
        choose(pos + 1, map, used);
        continue;
      }
      if (used[cand]) continue;
      if (pos > 0 && map[gen_idx[0]] != UINT32_MAX) {
        Perm w = elems[map[gen_idx[0]]] * elems[cand];
        if (w.order() != pair_order[pos]) continue;
      }
      auto map2 = map;
      auto used2 = used;
      map2[g] = cand;
      used2[cand] = true;
      std::vector<std::uint32_t> domain;
      for (std::uint32_t i = 0; i < gsize; ++i)
        if (map2[i] != UINT32_MAX) domain.push_back(i);
      if (!close(map2, used2, std::move(domain), pos + 1)) continue;
      choose(pos + 1, map2, used2);
    }
  }

  void finish(const std::vector<std::uint32_t>& map) {
    for (std::uint32_t i = 0; i < gsize; ++i)
      if (map[i] == UINT32_MAX) return;  // not a full homomorphism (should not happen)
    // stabilizer condition: beta(Gp) = beta(G) ∩ Stab(point 1), as sets
    const auto& elems = ambient->elements();
    for (std::uint32_t i = 0; i < gsize; ++i) {
      bool fixes_base = elems[map[i]](0) == 0;
      if (fixes_base != gp_mask[i]) return;
    }
    EmbeddingClass cls;
    std::vector<std::uint32_t> gen_images;
    for (std::size_t k = 0; k < gen_seq.size(); ++k) {
      cls.generator_images.push_back(elems[map[gen_idx[k]]]);
      gen_images.push_back(map[gen_idx[k]]);
    }
    cls.beta_of_element.reserve(gsize);
    for (std::uint32_t i = 0; i < gsize; ++i) cls.beta_of_element.push_back(elems[map[i]]);
    raw_embeddings.push_back(std::move(cls));
    raw_gen_images.push_back(std::move(gen_images));
  }
};

}  // namespace

namespace {

using ByottKey = std::tuple<std::vector<Perm>, std::vector<Perm>, std::vector<Perm>>;

std::map<ByottKey, ByottClasses>& byott_cache() {
  static std::map<ByottKey, ByottClasses> cache;
  return cache;
}
std::mutex& byott_cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

ByottClasses byott_embedding_classes(const ExtensionDatum& E, const PermGroup& N) {
  ByottClasses out;
  if (N.order() != E.n)
    throw ValidationError("byott_embedding_classes: |N| must equal the extension degree");
  ByottKey key{E.G.elements(), E.Gp.elements(), N.elements()};
  {
    std::lock_guard<std::mutex> lock(byott_cache_mutex());
    auto it = byott_cache().find(key);
    if (it != byott_cache().end()) return it->second;
  }
  const HolomorphGroup& hol = holomorph(N);
  const PermGroup& ambient = hol.ambient;
  if (ambient.order() % E.G.order() != 0) return out;  // order pre-check

  HomSearch search;
  search.E = &E;
  search.hol = &hol;
  search.ambient = &ambient;
  search.gen_seq = embedding_generating_sequence(E.G);
  out.generating_sequence = search.gen_seq;
  search.gsize = E.G.order();
  search.gtable = &E.G.mult_table();
  search.gp_mask.assign(search.gsize, false);
  for (const Perm& p : E.Gp.elements()) search.gp_mask[*E.G.element_index(p)] = true;

  // candidate buckets by element order
  const auto& elems = ambient.elements();
  std::map<unsigned, std::vector<std::uint32_t>> by_order;
  for (std::uint32_t i = 0; i < elems.size(); ++i) by_order[elems[i].order()].push_back(i);
  for (const Perm& g : search.gen_seq) {
    auto it = by_order.find(g.order());
    if (it == by_order.end()) return out;  // no elements of the right order
    search.cand_idx.push_back(it->second);
    search.gen_idx.push_back(*E.G.element_index(g));
  }
  // most constrained generator first
  std::vector<std::size_t> perm_order(search.gen_seq.size());
  for (std::size_t i = 0; i < perm_order.size(); ++i) perm_order[i] = i;
  std::stable_sort(perm_order.begin(), perm_order.end(), [&](std::size_t a, std::size_t b) {
    return search.cand_idx[a].size() < search.cand_idx[b].size();
  });
  {
    std::vector<Perm> gs;
    std::vector<std::uint32_t> gi;
    std::vector<std::vector<std::uint32_t>> ci;
    for (auto i : perm_order) {
      gs.push_back(search.gen_seq[i]);
      gi.push_back(search.gen_idx[i]);
      ci.push_back(std::move(search.cand_idx[i]));
    }
    search.gen_seq = std::move(gs);
    search.gen_idx = std::move(gi);
    search.cand_idx = std::move(ci);
    out.generating_sequence = search.gen_seq;
  }
  search.pair_order.assign(search.gen_seq.size(), 0);
  for (std::size_t i = 1; i < search.gen_seq.size(); ++i)
    search.pair_order[i] = (search.gen_seq[0] * search.gen_seq[i]).order();

  search.run();

  // classes modulo conjugation by the automorphism part
  const auto& auts = hol.automorphism_part.elements();
  std::map<std::vector<std::uint32_t>, std::size_t> canon_to_raw;
  for (std::size_t r = 0; r < search.raw_embeddings.size(); ++r) {
    std::vector<std::uint32_t> best;
    for (const Perm& a : auts) {
      Perm ai = a.inverse();
      std::vector<std::uint32_t> conj;
      conj.reserve(search.gen_seq.size());
      for (const Perm& img : search.raw_embeddings[r].generator_images)
        conj.push_back(*ambient.element_index(a * img * ai));
      if (best.empty() || conj < best) best = std::move(conj);
    }
    auto it = canon_to_raw.find(best);
    if (it == canon_to_raw.end()) canon_to_raw.emplace(std::move(best), r);
  }
  for (const auto& [canon, r] : canon_to_raw) out.classes.push_back(search.raw_embeddings[r]);
  out.count = static_cast<long long>(out.classes.size());
  std::lock_guard<std::mutex> lock(byott_cache_mutex());
  byott_cache().emplace(std::move(key), out);
  return out;
}

HGStructure structure_from_embedding(const ExtensionDatum& E, const PermGroup& N,
                                     const EmbeddingClass& cls, const std::string& type_name) {
  const std::vector<Perm>& reps = E.action.space().coset_reps;
  const unsigned n = E.n;
  // point bijection phi(g Gp) = beta(g)(e_N)
  std::vector<std::uint8_t> phi(n), phi_inv(n, 255);
  for (unsigned i = 0; i < n; ++i) {
    const Perm& beta_g = cls.beta_of_element[*E.G.element_index(reps[i])];
    phi[i] = static_cast<std::uint8_t>(beta_g(0));
    if (phi_inv[phi[i]] != 255)
      throw ValidationError("embedding does not induce a point bijection");
    phi_inv[phi[i]] = static_cast<std::uint8_t>(i);
  }
  // alpha(m) = phi^-1 ∘ (left translation by m) ∘ phi
  const auto& n_elems = N.elements();
  std::vector<Perm> gens;
  for (const Perm& g : N.generators()) {
    std::vector<std::uint8_t> img(n);
    for (unsigned i = 0; i < n; ++i) {
      std::uint32_t translated = *N.element_index(g * n_elems[phi[i]]);
      img[i] = phi_inv[translated];
    }
    gens.push_back(Perm(std::move(img)));
  }
  HGStructure s;
  s.regular_N = PermGroup::generate(n, gens);
  s.type_name = type_name;
  if (!is_regular(s.regular_N, n) || !is_normalized_by(s.regular_N, E.lambda()))
    throw ValidationError("embedding produced an invalid structure");
  if (E.galois()) {
    s.is_classical = s.regular_N.same_element_set(right_regular_rep(E.G));
    s.is_canonical_nonclassical = s.regular_N.same_element_set(E.lambda());
  }
  // structures arising from a normal complement: N sits inside lambda(G)
  bool inside = true;
  for (const Perm& p : s.regular_N.elements())
    if (!E.lambda().contains(p)) {
      inside = false;
      break;
    }
  if (inside) {
    std::vector<Perm> pre_elems, pre_gens;
    for (const Perm& g : E.G.elements())
      if (s.regular_N.contains(E.action.act(g))) pre_elems.push_back(g);
    for (const Perm& p : pre_elems)
      if (!p.is_identity()) pre_gens.push_back(p);
    s.acg_witness = PermGroup::from_elements(E.G.degree(), pre_gens, pre_elems);
  }
  return s;
}

CountReport count_structures(const ExtensionDatum& E) {
  CountReport report;
  for (const CatalogEntry& entry : groups_of_order(E.n)) {
    PermGroup N = entry.group();
    ByottClasses classes = byott_embedding_classes(E, N);
    report.per_type.emplace_back(entry.name, classes.count);
    report.total += classes.count;
    for (const EmbeddingClass& cls : classes.classes)
      report.witnesses.push_back(structure_from_embedding(E, N, cls, entry.name));
  }
  return report;
}

// ---------------------------------------------------------------------------

const char* const kVerdictGalois = "Galois";
const char* const kVerdictAcg = "almost classically Galois";
const char* const kVerdictHgNotAcg = "Hopf Galois not almost classically Galois";
const char* const kVerdictNotHg = "not Hopf Galois";

const char* decided_by_string(DecidedBy d) {
  switch (d) {
    case DecidedBy::step0: return "step0";
    case DecidedBy::order_precheck: return "order-precheck";
    case DecidedBy::byott_search: return "byott-search";
  }
  return "?";
}

std::string HGVerdict::verdict_string() const {
  if (galois) return kVerdictGalois;
  if (almost_classically_galois) return kVerdictAcg;
  if (hopf_galois) return kVerdictHgNotAcg;
  return kVerdictNotHg;
}

namespace {

HGStructure structure_from_complement(const ExtensionDatum& E, const PermGroup& complement) {
  std::vector<Perm> gens;
  for (const Perm& g : complement.generators()) gens.push_back(E.action.act(g));
  HGStructure s;
  s.regular_N = PermGroup::generate(E.n, gens);
  s.type_name = identify(s.regular_N);
  s.acg_witness = complement;
  if (!is_regular(s.regular_N, E.n) || !is_normalized_by(s.regular_N, E.lambda()))
    throw ValidationError("normal complement did not give a valid structure");
  if (E.galois()) {
    s.is_classical = s.regular_N.same_element_set(right_regular_rep(E.G));
    s.is_canonical_nonclassical = s.regular_N.same_element_set(E.lambda());
  }
  return s;
}

}  // namespace

HGVerdict is_hopf_galois(const ExtensionDatum& E) {
  HGVerdict v;
  // Step 0: a normal complement settles it
  AcgResult acg = is_almost_classically_galois(E);
  if (acg.almost_classically_galois) {
    v.hopf_galois = true;
    v.galois = E.galois();
    v.almost_classically_galois = true;
    v.decided_by = DecidedBy::step0;
    v.witness = structure_from_complement(E, acg.complements.front());
    return v;
  }
  // order pre-check: G must embed into some Hol(N) with |N| = n
  std::vector<CatalogEntry> entries = groups_of_order(E.n);
  std::vector<CatalogEntry> survivors;
  for (const CatalogEntry& entry : entries) {
    PermGroup N = entry.group();
    const HolomorphGroup& hol = holomorph(N);
    if (hol.ambient.order() % E.G.order() == 0) survivors.push_back(entry);
  }
  if (survivors.empty()) {
    v.decided_by = DecidedBy::order_precheck;
    return v;
  }
  for (const CatalogEntry& entry : survivors) {
    PermGroup N = entry.group();
    ByottClasses classes = byott_embedding_classes(E, N);
    if (classes.count > 0) {
      v.hopf_galois = true;
      v.decided_by = DecidedBy::byott_search;
      v.witness = structure_from_embedding(E, N, classes.classes.front(), entry.name);
      return v;
    }
  }
  v.decided_by = DecidedBy::byott_search;
  return v;
}

std::vector<ClassifyRow> classify_degree(unsigned degree) {
  std::vector<ClassifyRow> rows;
  for (const CatalogEntry& entry : transitive_groups(degree)) {
    ClassifyRow row;
    row.name = entry.name;
    row.order = entry.order;
    if (!entry.has_generators()) {
      // decidable by order arithmetic alone: the only groups of prime order n
      // are cyclic, and an embedding into Hol(C_n) needs |G| dividing its order
      row.order_only = true;
      bool possible = false;
      for (const CatalogEntry& ne : groups_of_order(degree)) {
        const HolomorphGroup& hol = holomorph(ne.group());
        if (static_cast<long long>(hol.ambient.order()) % entry.order == 0) {
          possible = true;
          break;
        }
      }
      row.verdict = possible ? "undecided (order-only entry)" : kVerdictNotHg;
      row.decided_by = decided_by_string(DecidedBy::order_precheck);
      rows.push_back(std::move(row));
      continue;
    }
    PermGroup G = entry.group();
    ExtensionDatum E = make_extension(G, G.stabilizer(0));
    HGVerdict v = is_hopf_galois(E);
    row.verdict = v.verdict_string();
    row.decided_by = decided_by_string(v.decided_by);
    if (v.almost_classically_galois && v.witness && v.witness->acg_witness) {
      row.witness_gprime = identify(E.Gp);
      row.witness_complement = identify(*v.witness->acg_witness);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hgk
