#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgk/groupid.hpp"
#include "hgk/holomorph.hpp"
#include "hgk/permgroup.hpp"

namespace hgk {

// A separable extension K/k presented through its Galois closure: G acting on
// the left cosets of the core-free subgroup Gp fixing K.
struct ExtensionDatum {
  PermGroup G;
  PermGroup Gp;
  unsigned n = 1;       // [G : Gp]
  CosetAction action;   // lambda: G -> Sym(G/Gp), base coset is point 1

  const PermGroup& lambda() const { return action.image(); }
  bool galois() const { return Gp.is_trivial(); }
};

// requires Gp <= G with trivial core
ExtensionDatum make_extension(const PermGroup& G, const PermGroup& Gp);

// quotients out the core first, so any subgroup works (used for intermediate
// extensions: the closure of the fixed field of Gpp has group G/core)
ExtensionDatum make_subquotient_extension(const PermGroup& G, const PermGroup& Gpp);

// all normal subgroups N of G with N ∩ Gp = 1 and |N| |Gp| = |G|
std::vector<PermGroup> normal_complement(const PermGroup& G, const PermGroup& Gp);

struct AcgResult {
  bool almost_classically_galois = false;
  std::vector<PermGroup> complements;
};
AcgResult is_almost_classically_galois(const ExtensionDatum& E);

// every regular subgroup of Sym(n) normalized by lambda(G), by direct search
std::vector<PermGroup> gp_regular_subgroups(const ExtensionDatum& E);

// all regular subgroups of Sym(n), n <= 8; cached per degree
const std::vector<PermGroup>& regular_subgroups_of_sym(unsigned n);

// one Hopf Galois structure: a regular subgroup of Sym(G/Gp) normalized by
// lambda(G), together with its type and provenance
struct HGStructure {
  PermGroup regular_N;
  std::string type_name;
  bool is_classical = false;              // Galois case, N = rho(G)
  bool is_canonical_nonclassical = false; // Galois case, N = lambda(G)
  std::optional<PermGroup> acg_witness;   // normal complement of Gp mapping onto N
};

// an embedding class beta: G -> Hol(N) with beta(Gp) the stabilizer of e_N,
// taken modulo conjugation by Aut(N)
struct EmbeddingClass {
  std::vector<Perm> generator_images;      // images of the generating sequence
  std::vector<Perm> beta_of_element;       // aligned with E.G.elements()
};

struct ByottClasses {
  long long count = 0;  // e(G, N)
  std::vector<Perm> generating_sequence;
  std::vector<EmbeddingClass> classes;
};

ByottClasses byott_embedding_classes(const ExtensionDatum& E, const PermGroup& N);

HGStructure structure_from_embedding(const ExtensionDatum& E, const PermGroup& N,
                                     const EmbeddingClass& cls, const std::string& type_name);

struct CountReport {
  std::vector<std::pair<std::string, long long>> per_type;  // catalog order, zeros kept
  long long total = 0;
  std::vector<HGStructure> witnesses;  // one per counted class
};
CountReport count_structures(const ExtensionDatum& E);

enum class DecidedBy { step0, order_precheck, byott_search };
const char* decided_by_string(DecidedBy d);

// fixed verdict strings
extern const char* const kVerdictGalois;
extern const char* const kVerdictAcg;
extern const char* const kVerdictHgNotAcg;
extern const char* const kVerdictNotHg;

struct HGVerdict {
  bool hopf_galois = false;
  bool galois = false;
  bool almost_classically_galois = false;
  DecidedBy decided_by = DecidedBy::step0;
  std::optional<HGStructure> witness;

  std::string verdict_string() const;
};

HGVerdict is_hopf_galois(const ExtensionDatum& E);

struct ClassifyRow {
  std::string name;
  long long order = 0;
  std::string verdict;
  std::string decided_by;
  std::string witness_gprime;     // type of Gp, for Galois/acG rows
  std::string witness_complement; // type of the normal complement
  bool order_only = false;        // catalog entry without generators
};

std::vector<ClassifyRow> classify_degree(unsigned degree);

}  // namespace hgk
