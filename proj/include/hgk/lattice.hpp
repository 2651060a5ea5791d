#pragma once

#include <string>
#include <vector>

#include "hgk/hopf.hpp"

namespace hgk {

struct StableSubgroupRecord {
  PermGroup subgroup;               // N' <= regular_N, stable under lambda(G)
  PermGroup corresponding_subgroup; // image(Gp) <= S <= lambda(G)
  std::vector<unsigned> orbit_of_base;
};

// all subgroups of regular_N invariant under conjugation by every lambda(g)
std::vector<PermGroup> stable_subgroups(const HGStructure& s, const ExtensionDatum& E);

// S(N') = { x in lambda(G) : x(base) in N'-orbit of base }; requires N' stable
PermGroup corresponding_subgroup(const PermGroup& Np, const ExtensionDatum& E);

struct StrongFormReport {
  bool holds = false;
  std::vector<StableSubgroupRecord> records;
  std::vector<PermGroup> image_subgroups;    // deduplicated, canonical order
  std::vector<PermGroup> all_intermediate;   // subgroups between image(Gp) and lambda(G)
};

StrongFormReport strong_form_holds(const HGStructure& s, const ExtensionDatum& E);

// ---------------------------------------------------------------------------
// intermediate extensions K ⊂ F ⊂ closure, F the fixed field of Gpp <= Gp

enum class RowVerdict { galois, acg, hg_not_acg, not_hg, skipped };
const char* row_verdict_string(RowVerdict v);

struct IntermediateClass {
  PermGroup Gpp;              // representative, up to G-conjugacy
  long long index = 0;        // [G : Gpp] = [F : k]
  RowVerdict verdict = RowVerdict::skipped;
  std::string type_name;      // type of a witness structure, when Hopf Galois
  std::string skip_reason;
};

struct IntermediateRow {
  long long index = 0;
  std::vector<IntermediateClass> classes;
  bool exists_marker = false;      // verdicts differ and at least one class is acG
  std::string verdict;             // row verdict string, "∃ ..." when marked
};

struct IntermediateReport {
  std::vector<IntermediateRow> rows;  // ascending [F:k]
};

IntermediateReport intermediate_report(const ExtensionDatum& E, long long index_bound = 60);

// consistency instance of the tower theorem: if K/k and F/K are Hopf Galois
// then F/k must be; returns false only on a violation
bool transitivity_check(const ExtensionDatum& E, const PermGroup& Gpp);

}  // namespace hgk
