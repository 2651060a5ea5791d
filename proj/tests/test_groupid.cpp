#include <doctest.h>

#include <map>
#include <set>

#include "hgk/groupid.hpp"

using namespace hgk;

namespace {

PermGroup gen(unsigned degree, std::initializer_list<const char*> cycles) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(Perm::parse(c, degree));
  return PermGroup::generate(degree, gens);
}

}  // namespace

TEST_CASE("fingerprints of small groups") {
  GroupFingerprint c4 = fingerprint(gen(4, {"(1,2,3,4)"}));
  CHECK(c4.element_order_histogram == std::map<unsigned, std::size_t>{{1, 1}, {2, 1}, {4, 2}});
  CHECK(c4.is_abelian);

  GroupFingerprint v4 = fingerprint(gen(4, {"(1,2)(3,4)", "(1,3)(2,4)"}));
  CHECK(v4.element_order_histogram == std::map<unsigned, std::size_t>{{1, 1}, {2, 3}});
  CHECK(v4.is_abelian);
  CHECK(c4 != v4);

  GroupFingerprint s3 = fingerprint(gen(3, {"(1,2,3)", "(2,3)"}));
  CHECK(s3.element_order_histogram == std::map<unsigned, std::size_t>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(s3.center_order == 1);
  CHECK(s3.derived_subgroup_order == 3);
}

TEST_CASE("isomorphism testing") {
  CHECK(!are_isomorphic(gen(4, {"(1,2,3,4)"}), gen(4, {"(1,2)(3,4)", "(1,3)(2,4)"})).isomorphic);
  // lambda(S3) vs rho(S3) inside S6
  PermGroup S3 = gen(3, {"(1,2,3)", "(2,3)"});
  PermGroup lam = left_regular_rep(S3);
  PermGroup rho = right_regular_rep(S3);
  IsoWitness w = are_isomorphic(lam, rho);
  CHECK(w.isomorphic);
  // the witness is a bijective homomorphism
  REQUIRE(w.from.size() == 6);
  std::set<Perm> image(w.to.begin(), w.to.end());
  CHECK(image.size() == 6);
  for (std::size_t i = 0; i < w.from.size(); ++i)
    for (std::size_t j = 0; j < w.from.size(); ++j) {
      Perm prod = w.from[i] * w.from[j];
      std::size_t k = 0;
      while (w.from[k] != prod) ++k;
      CHECK(w.to[i] * w.to[j] == w.to[k]);
    }
  CHECK_THROWS_AS(are_isomorphic(gen(6, {"(1,2,3,4,5,6)", "(1,2)"}),
                                 gen(6, {"(1,2,3,4,5,6)", "(1,2)"})),
                  BoundError);
}

TEST_CASE("catalog entries load and verify") {
  for (long long m : catalog_orders()) {
    for (const CatalogEntry& e : groups_of_order(m)) {
      REQUIRE(e.has_generators());
      PermGroup G = e.group();
      CHECK(static_cast<long long>(G.order()) == e.order);
      CHECK(e.order == m);
    }
  }
  for (unsigned d : catalog_degrees()) {
    for (const CatalogEntry& e : transitive_groups(d)) {
      if (!e.has_generators()) continue;
      PermGroup G = e.group();
      CHECK(static_cast<long long>(G.order()) == e.order);
      CHECK(G.degree() == d);
      CHECK(G.is_transitive());
    }
  }
}

TEST_CASE("small group counts per order") {
  const std::map<long long, std::size_t> expected{
      {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
      {9, 2},  {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14},
      {18, 5}, {20, 5}, {21, 2}, {24, 15}, {30, 4}, {40, 14}, {60, 13}};
  std::map<long long, std::size_t> got;
  for (long long m : catalog_orders()) got[m] = groups_of_order(m).size();
  CHECK(got == expected);
  CHECK_THROWS_AS(groups_of_order(17), BoundError);
  CHECK_THROWS_AS(groups_of_order(36), BoundError);
}

TEST_CASE("distinct catalog entries of equal order are pairwise non-isomorphic") {
  for (long long m : {4LL, 6LL, 8LL, 12LL, 16LL, 18LL, 20LL, 24LL}) {
    auto entries = groups_of_order(m);
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        CHECK_MESSAGE(!are_isomorphic(entries[i].group(), entries[j].group()).isomorphic,
                      entries[i].name, " vs ", entries[j].name);
  }
}

TEST_CASE("transitive group tables match the expected row counts and orders") {
  CHECK(transitive_groups(4).size() == 5);
  CHECK(transitive_groups(5).size() == 5);
  CHECK(transitive_groups(6).size() == 16);
  CHECK(transitive_groups(7).size() == 7);
  CHECK(transitive_groups(11).size() == 8);
  CHECK_THROWS_AS(transitive_groups(9), BoundError);

  std::vector<std::string> names4;
  std::vector<long long> orders4;
  for (const auto& e : transitive_groups(4)) {
    names4.push_back(e.name);
    orders4.push_back(e.order);
  }
  CHECK(names4 == std::vector<std::string>{"C4", "V4", "D_{2·4}", "A4", "S4"});
  CHECK(orders4 == std::vector<long long>{4, 4, 8, 12, 24});

  std::vector<std::string> names5;
  for (const auto& e : transitive_groups(5)) names5.push_back(e.name);
  CHECK(names5 == std::vector<std::string>{"C5", "D_{2·5}", "F20", "A5", "S5"});

  std::vector<long long> orders6;
  for (const auto& e : transitive_groups(6)) orders6.push_back(e.order);
  CHECK(orders6 == std::vector<long long>{6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120,
                                          360, 720});
}

TEST_CASE("degree 11 rows") {
  auto entries = transitive_groups(11);
  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"C11", "D_{2·11}", "F55", "F110", "PSL(2,11)", "M11",
                                          "A11", "S11"});
  CHECK(entries[4].has_generators());
  PermGroup psl = entries[4].group();
  CHECK(psl.order() == 660);
  CHECK(psl.is_transitive());
  CHECK(psl.stabilizer(0).order() == 60);
  CHECK(!entries[5].has_generators());
  CHECK(entries[5].order == 7920);
  CHECK(entries[6].order == 19958400LL);
  CHECK(entries[7].order == 39916800LL);
}

TEST_CASE("the two transitive S4 copies in degree 6 are distinguished by parity") {
  auto entries = transitive_groups(6);
  PermGroup s4_6d = entries[6].group();
  PermGroup s4_6c = entries[7].group();
  CHECK(entries[6].name == "S4(6d)");
  CHECK(entries[7].name == "S4(6c)");
  auto all_even = [](const PermGroup& G) {
    for (const Perm& p : G.elements())
      if (!p.is_even()) return false;
    return true;
  };
  CHECK(all_even(s4_6d));
  CHECK(!all_even(s4_6c));
  CHECK(are_isomorphic(s4_6d, s4_6c).isomorphic);
  CHECK(identify(s4_6d) == "S4(6d)");
  CHECK(identify(s4_6c) == "S4(6c)");
}

TEST_CASE("identify round-trips every embedded entry") {
  for (unsigned d : catalog_degrees())
    for (const CatalogEntry& e : transitive_groups(d)) {
      if (!e.has_generators()) continue;
      CHECK_MESSAGE(identify(e.group()) == e.name, "degree ", d, " entry ", e.name);
    }
  for (long long m : catalog_orders()) {
    if (m > 120) continue;
    for (const CatalogEntry& e : groups_of_order(m))
      CHECK_MESSAGE(identify(e.group()) == e.name, "order ", m, " entry ", e.name);
  }
}

TEST_CASE("identify falls back to unknown outside the catalog") {
  // C17 is outside the embedded orders
  std::vector<std::uint8_t> img(17);
  for (unsigned i = 0; i < 17; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % 17);
  PermGroup c17 = PermGroup::generate(17, {Perm(std::move(img))});
  CHECK(identify(c17) == "unknown(order=17)");
}

TEST_CASE("identify on abstract groups") {
  CHECK(identify(gen(3, {"(1,2,3)", "(2,3)"})) == "S3");
  CHECK(identify(gen(7, {"(1,2,3)", "(4,5,6,7)"})) == "C12");
  CHECK(identify(gen(4, {"(1,2)", "(3,4)"})) == "V4");
}

TEST_CASE("are_isomorphic is an equivalence relation on samples") {
  std::vector<PermGroup> sample{gen(4, {"(1,2,3,4)"}), gen(4, {"(1,2)(3,4)", "(1,3)(2,4)"}),
                                gen(3, {"(1,2,3)", "(2,3)"}),
                                left_regular_rep(gen(3, {"(1,2,3)", "(2,3)"}))};
  for (const auto& G : sample) CHECK(are_isomorphic(G, G).isomorphic);  // reflexive
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j)
      CHECK(are_isomorphic(sample[i], sample[j]).isomorphic ==
            are_isomorphic(sample[j], sample[i]).isomorphic);  // symmetric
  // transitivity on the S3 chain
  PermGroup a = gen(3, {"(1,2,3)", "(2,3)"});
  PermGroup b = left_regular_rep(a);
  PermGroup c = right_regular_rep(a);
  CHECK(are_isomorphic(a, b).isomorphic);
  CHECK(are_isomorphic(b, c).isomorphic);
  CHECK(are_isomorphic(a, c).isomorphic);
}
