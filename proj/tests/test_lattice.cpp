#include <doctest.h>

#include <algorithm>
#include <set>

#include "hgk/lattice.hpp"

using namespace hgk;

namespace {

PermGroup gen(unsigned degree, std::initializer_list<const char*> cycles) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(Perm::parse(c, degree));
  return PermGroup::generate(degree, gens);
}

PermGroup trans(unsigned degree, const std::string& name) {
  for (const auto& e : transitive_groups(degree))
    if (e.name == name) return e.group();
  throw std::runtime_error("no transitive entry " + name);
}

ExtensionDatum galois_v4() {
  return make_extension(gen(4, {"(1,2)(3,4)", "(1,3)(2,4)"}), PermGroup::trivial(4));
}

HGStructure find_structure(const ExtensionDatum& E, const PermGroup& N) {
  for (const auto& w : count_structures(E).witnesses)
    if (w.regular_N.same_element_set(N)) return w;
  throw std::runtime_error("structure not found");
}

}  // namespace

TEST_CASE("stable subgroups: biquadratic cyclic structure") {
  ExtensionDatum E = galois_v4();
  HGStructure s = find_structure(E, gen(4, {"(1,2,3,4)"}));
  auto stable = stable_subgroups(s, E);
  CHECK(stable.size() == 3);  // V4 normalizes every subgroup of this C4
}

TEST_CASE("stable subgroups: quartic radical V4 structure") {
  // D8 = <r,s> on the 4 roots, Gp = <s>; N2 = <r^2, sr> maps onto the Klein
  // regular subgroup, of which only <r^2> survives conjugation by lambda(G)
  PermGroup D8 = gen(4, {"(1,2,3,4)", "(2,4)"});
  ExtensionDatum E = make_extension(D8, gen(4, {"(2,4)"}));
  HGStructure s = find_structure(E, gen(4, {"(1,3)(2,4)", "(1,4)(2,3)"}));
  auto stable = stable_subgroups(s, E);
  REQUIRE(stable.size() == 3);
  CHECK(stable[0].order() == 1);
  CHECK(stable[1].same_element_set(gen(4, {"(1,3)(2,4)"})));
  CHECK(stable[2].order() == 4);
  // the two reflections' subgroups are not stable
  CHECK_THROWS_AS(corresponding_subgroup(gen(4, {"(1,4)(2,3)"}), E), ValidationError);
  CHECK_THROWS_AS(corresponding_subgroup(gen(4, {"(1,2)(3,4)"}), E), ValidationError);
}

TEST_CASE("corresponding subgroups on the worked examples") {
  ExtensionDatum E = galois_v4();
  find_structure(E, gen(4, {"(1,2,3,4)"}));
  // N' = <g1^2> corresponds to {id, lambda(tau)}
  PermGroup S = corresponding_subgroup(gen(4, {"(1,3)(2,4)"}), E);
  CHECK(S.same_element_set(gen(4, {"(1,3)(2,4)"})));
  CHECK(S.order() == 2);

  PermGroup D8 = gen(4, {"(1,2,3,4)", "(2,4)"});
  ExtensionDatum Eq = make_extension(D8, gen(4, {"(2,4)"}));
  PermGroup S2 = corresponding_subgroup(gen(4, {"(1,3)(2,4)"}), Eq);
  CHECK(S2.order() == 4);
  CHECK(S2.same_element_set(gen(4, {"(2,4)", "(1,3)(2,4)"})));

  // N' = 1 corresponds to the image of Gp
  PermGroup S3b = corresponding_subgroup(PermGroup::trivial(4), Eq);
  CHECK(S3b.same_element_set(gen(4, {"(2,4)"})));
  // N' = N corresponds to all of lambda(G)
  HGStructure sq = find_structure(Eq, gen(4, {"(1,3)(2,4)", "(1,4)(2,3)"}));
  PermGroup S4b = corresponding_subgroup(sq.regular_N, Eq);
  CHECK(S4b.same_element_set(Eq.lambda()));
}

TEST_CASE("strong form holds for the classical structure on a Galois extension") {
  for (const char* name : {"C6", "S3"}) {
    PermGroup G = trans(6, name);
    ExtensionDatum E = make_extension(G, PermGroup::trivial(6));
    HGStructure classical = find_structure(E, right_regular_rep(E.G));
    StrongFormReport r = strong_form_holds(classical, E);
    CHECK_MESSAGE(r.holds, name);
    CHECK(r.image_subgroups.size() == all_subgroups(E.G).size());
  }
}

TEST_CASE("strong form fails for the biquadratic cyclic structure") {
  ExtensionDatum E = galois_v4();
  HGStructure s = find_structure(E, gen(4, {"(1,2,3,4)"}));
  StrongFormReport r = strong_form_holds(s, E);
  CHECK(!r.holds);
  REQUIRE(r.image_subgroups.size() == 3);  // a single chain: 1, one C2, V4
  CHECK(r.image_subgroups[0].order() == 1);
  CHECK(r.image_subgroups[1].order() == 2);
  CHECK(r.image_subgroups[2].order() == 4);
  CHECK(r.image_subgroups[1].same_element_set(gen(4, {"(1,3)(2,4)"})));
  CHECK(r.all_intermediate.size() == 5);  // 1, three C2's, V4
}

TEST_CASE("lambda structure on Galois S3 reaches exactly the normal subgroups") {
  PermGroup G = trans(6, "S3");
  ExtensionDatum E = make_extension(G, PermGroup::trivial(6));
  HGStructure lambda_structure = find_structure(E, E.lambda());
  StrongFormReport r = strong_form_holds(lambda_structure, E);
  CHECK(!r.holds);
  std::set<std::vector<Perm>> images;
  for (const auto& H : r.image_subgroups) images.insert(H.elements());
  std::set<std::vector<Perm>> normals;
  for (const auto& N : normal_subgroups(E.lambda())) normals.insert(N.elements());
  CHECK(images == normals);
}

TEST_CASE("strong form holds for structures coming from a normal complement") {
  // almost classically Galois rows in degree 4 and 5
  for (auto [degree, name] : std::vector<std::pair<unsigned, const char*>>{
           {4u, "D_{2·4}"}, {4u, "A4"}, {4u, "S4"}, {5u, "D_{2·5}"}, {5u, "F20"}}) {
    PermGroup G = trans(degree, name);
    ExtensionDatum E = make_extension(G, G.stabilizer(0));
    for (const PermGroup& N : normal_complement(E.G, E.Gp)) {
      std::vector<Perm> gens;
      for (const Perm& g : N.generators()) gens.push_back(E.action.act(g));
      HGStructure s = find_structure(E, PermGroup::generate(E.n, gens));
      StrongFormReport r = strong_form_holds(s, E);
      CHECK_MESSAGE(r.holds, name);
    }
  }
}

TEST_CASE("correspondence properties across all structures in degree <= 5") {
  for (unsigned d : {4u, 5u}) {
    for (const auto& entry : transitive_groups(d)) {
      PermGroup G = entry.group();
      ExtensionDatum E = make_extension(G, G.stabilizer(0));
      for (const auto& s : count_structures(E).witnesses) {
        auto stable = stable_subgroups(s, E);
        std::set<std::vector<Perm>> images;
        for (std::size_t i = 0; i < stable.size(); ++i) {
          PermGroup Si = corresponding_subgroup(stable[i], E);
          // |S(N')| = |Gp| * |N'|
          CHECK(Si.order() == E.Gp.order() * stable[i].order());
          images.insert(Si.elements());
          for (std::size_t j = 0; j < stable.size(); ++j) {
            if (i == j) continue;
            // growing N' grows the fixing subgroup, which is exactly how the
            // field-level correspondence reverses inclusions
            if (stable[i].is_subgroup_of(stable[j])) {
              PermGroup Sj = corresponding_subgroup(stable[j], E);
              CHECK(Si.is_subgroup_of(Sj));
            }
          }
        }
        CHECK(images.size() == stable.size());  // injective
        // endpoints
        PermGroup bottom = corresponding_subgroup(PermGroup::trivial(E.n), E);
        CHECK(bottom.order() == E.Gp.order());
        PermGroup top = corresponding_subgroup(s.regular_N, E);
        CHECK(top.same_element_set(E.lambda()));
      }
    }
  }
}

TEST_CASE("intermediate report for degree 4 with closure group S4") {
  PermGroup S4 = trans(4, "S4");
  ExtensionDatum E = make_extension(S4, S4.stabilizer(0));
  IntermediateReport rep = intermediate_report(E);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].index == 8);
  CHECK(rep.rows[0].verdict == kVerdictHgNotAcg);
  REQUIRE(rep.rows[0].classes.size() == 1);
  CHECK(rep.rows[0].classes[0].type_name == "C2xC2xC2");
  CHECK(rep.rows[1].index == 12);
  CHECK(rep.rows[1].verdict == kVerdictAcg);
}

TEST_CASE("intermediate rows outside the bound are skipped") {
  PermGroup S4 = trans(4, "S4");
  ExtensionDatum E = make_extension(S4, S4.stabilizer(0));
  IntermediateReport rep = intermediate_report(E, 10);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].verdict == kVerdictHgNotAcg);
  CHECK(rep.rows[1].verdict == std::string("skipped: bound"));
}

TEST_CASE("transitivity consistency on computed chains") {
  // degree 4, G = S4: both the full extension and the relative step are Hopf
  // Galois for every proper Gpp, so the conclusion must hold as well
  PermGroup S4 = trans(4, "S4");
  ExtensionDatum E = make_extension(S4, S4.stabilizer(0));
  for (const PermGroup& Gpp : all_subgroups(E.Gp))
    if (Gpp.order() > 1 && Gpp.order() < E.Gp.order()) CHECK(transitivity_check(E, Gpp));
  // Galois towers are trivially consistent
  ExtensionDatum Eg = galois_v4();
  CHECK(transitivity_check(Eg, PermGroup::trivial(4)));
}
