#include "hgk/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hgk {

std::vector<PermGroup> stable_subgroups(const HGStructure& s, const ExtensionDatum& E) {
  std::vector<PermGroup> out;
  for (const PermGroup& Np : all_subgroups(s.regular_N)) {
    bool stable = true;
    for (const Perm& g : E.lambda().generators()) {
      for (const Perm& x : Np.generators())
        if (!Np.contains(x.conjugated_by(g))) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (stable) out.push_back(Np);
  }
  return out;
}

PermGroup corresponding_subgroup(const PermGroup& Np, const ExtensionDatum& E) {
  for (const Perm& g : E.lambda().generators())
    for (const Perm& x : Np.generators())
      if (!Np.contains(x.conjugated_by(g)))
        throw ValidationError("corresponding_subgroup: subgroup is not lambda(G)-stable");
  std::vector<bool> in_orbit(E.n, false);
  for (const Perm& x : Np.elements()) in_orbit[x(0)] = true;
  std::vector<Perm> elems, gens;
  for (const Perm& x : E.lambda().elements())
    if (in_orbit[x(0)]) {
      elems.push_back(x);
      if (!x.is_identity()) gens.push_back(x);
    }
  return PermGroup::from_elements(E.n, std::move(gens), std::move(elems));
}

StrongFormReport strong_form_holds(const HGStructure& s, const ExtensionDatum& E) {
  StrongFormReport report;
  // image of Gp inside lambda(G)
  std::vector<Perm> img_elems, img_gens;
  for (const Perm& h : E.Gp.elements()) {
    Perm x = E.action.act(h);
    img_elems.push_back(x);
    if (!x.is_identity()) img_gens.push_back(x);
  }
  std::sort(img_elems.begin(), img_elems.end());
  img_elems.erase(std::unique(img_elems.begin(), img_elems.end()), img_elems.end());
  PermGroup image_gp = PermGroup::from_elements(E.n, img_gens, img_elems);

  std::set<std::vector<Perm>> images;
  for (const PermGroup& Np : stable_subgroups(s, E)) {
    StableSubgroupRecord rec{Np, corresponding_subgroup(Np, E), {}};
    std::vector<bool> in_orbit(E.n, false);
    for (const Perm& x : Np.elements()) in_orbit[x(0)] = true;
    for (unsigned p = 0; p < E.n; ++p)
      if (in_orbit[p]) rec.orbit_of_base.push_back(p);
    images.insert(rec.corresponding_subgroup.elements());
    report.records.push_back(std::move(rec));
  }
  for (const auto& e : images) {
    std::vector<Perm> gens;
    for (const Perm& p : e)
      if (!p.is_identity()) gens.push_back(p);
    report.image_subgroups.push_back(PermGroup::from_elements(E.n, gens, e));
  }
  for (const PermGroup& H : all_subgroups(E.lambda()))
    if (image_gp.is_subgroup_of(H)) report.all_intermediate.push_back(H);
  auto by_order = [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  };
  std::sort(report.image_subgroups.begin(), report.image_subgroups.end(), by_order);
  std::sort(report.all_intermediate.begin(), report.all_intermediate.end(), by_order);
  std::set<std::vector<Perm>> all_sets;
  for (const PermGroup& H : report.all_intermediate) all_sets.insert(H.elements());
  report.holds = (images == all_sets);
  return report;
}

// ---------------------------------------------------------------------------

const char* row_verdict_string(RowVerdict v) {
  switch (v) {
    case RowVerdict::galois: return kVerdictGalois;
    case RowVerdict::acg: return kVerdictAcg;
    case RowVerdict::hg_not_acg: return kVerdictHgNotAcg;
    case RowVerdict::not_hg: return kVerdictNotHg;
    case RowVerdict::skipped: return "skipped: bound";
  }
  return "?";
}

namespace {

bool order_in_catalog(long long m) {
  const auto& orders = catalog_orders();
  return std::find(orders.begin(), orders.end(), m) != orders.end();
}

IntermediateClass classify_intermediate(const ExtensionDatum& E, const PermGroup& Gpp,
                                        long long index_bound) {
  IntermediateClass cls;
  cls.Gpp = Gpp;
  cls.index = static_cast<long long>(E.G.order() / Gpp.order());
  if (cls.index > index_bound) {
    cls.verdict = RowVerdict::skipped;
    cls.skip_reason = "index exceeds bound " + std::to_string(index_bound);
    return cls;
  }
  ExtensionDatum Erow = make_subquotient_extension(E.G, Gpp);
  if (Erow.galois()) {
    cls.verdict = RowVerdict::galois;
    return cls;
  }
  AcgResult acg = is_almost_classically_galois(Erow);
  if (acg.almost_classically_galois) {
    cls.verdict = RowVerdict::acg;
    return cls;
  }
  if (!order_in_catalog(Erow.n)) {
    cls.verdict = RowVerdict::skipped;
    cls.skip_reason = "no catalog of groups of order " + std::to_string(Erow.n);
    return cls;
  }
  HGVerdict v = is_hopf_galois(Erow);
  cls.verdict = v.hopf_galois ? RowVerdict::hg_not_acg : RowVerdict::not_hg;
  if (v.witness) cls.type_name = v.witness->type_name;
  return cls;
}

}  // namespace

IntermediateReport intermediate_report(const ExtensionDatum& E, long long index_bound) {
  IntermediateReport report;
  // proper nontrivial subgroups of Gp, up to G-conjugacy
  std::vector<PermGroup> subs = all_subgroups(E.Gp);
  std::vector<PermGroup> proper;
  for (const PermGroup& H : subs)
    if (H.order() > 1 && H.order() < E.Gp.order()) proper.push_back(H);
  std::vector<PermGroup> reps = conjugacy_class_reps(E.G, proper);

  std::map<long long, std::vector<IntermediateClass>> by_index;
  for (const PermGroup& Gpp : reps) {
    IntermediateClass cls = classify_intermediate(E, Gpp, index_bound);
    by_index[cls.index].push_back(std::move(cls));
  }
  for (auto& [index, classes] : by_index) {
    IntermediateRow row;
    row.index = index;
    std::set<RowVerdict> verdicts;
    bool any_acg = false;
    for (const auto& c : classes) {
      verdicts.insert(c.verdict);
      any_acg = any_acg || c.verdict == RowVerdict::acg || c.verdict == RowVerdict::galois;
    }
    if (verdicts.size() == 1) {
      row.verdict = row_verdict_string(*verdicts.begin());
    } else if (any_acg) {
      row.exists_marker = true;
      row.verdict = std::string("∃ ") + kVerdictAcg;
    } else {
      row.verdict = "mixed";
    }
    row.classes = std::move(classes);
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool transitivity_check(const ExtensionDatum& E, const PermGroup& Gpp) {
  if (!Gpp.is_subgroup_of(E.Gp)) throw ValidationError("transitivity_check: need Gpp <= Gp");
  HGVerdict base = is_hopf_galois(E);
  if (!base.hopf_galois) return true;  // hypothesis fails, nothing to check
  if (Gpp.order() == E.Gp.order()) return true;
  ExtensionDatum relative = make_subquotient_extension(E.Gp, Gpp);
  if (!order_in_catalog(relative.n)) return true;
  HGVerdict rel = is_hopf_galois(relative);
  if (!rel.hopf_galois) return true;
  ExtensionDatum whole = make_subquotient_extension(E.G, Gpp);
  if (!order_in_catalog(whole.n) &&
      !is_almost_classically_galois(whole).almost_classically_galois)
    return true;  // cannot decide the conclusion at this scale
  HGVerdict full = is_almost_classically_galois(whole).almost_classically_galois
                       ? HGVerdict{true, whole.galois(), true, DecidedBy::step0, std::nullopt}
                       : is_hopf_galois(whole);
  return full.hopf_galois;
}

}  // namespace hgk
