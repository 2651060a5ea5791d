#include <doctest.h>

#include "hgk/holomorph.hpp"
#include "hgk/groupid.hpp"

using namespace hgk;

namespace {

PermGroup gen(unsigned degree, std::initializer_list<const char*> cycles) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(Perm::parse(c, degree));
  return PermGroup::generate(degree, gens);
}

PermGroup catalog_group(long long order, const std::string& name) {
  for (const auto& e : groups_of_order(order))
    if (e.name == name) return e.group();
  throw std::runtime_error("no catalog entry " + name);
}

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(gen(6, {"(1,2,3,4,5,6)"})).order() == 2);
  CHECK(automorphism_group(gen(3, {"(1,2,3)", "(2,3)"})).order() == 6);
  CHECK(automorphism_group(gen(6, {"(1,2)", "(3,4)", "(5,6)"})).order() == 168);
  CHECK(automorphism_group(catalog_group(8, "Q8")).order() == 24);
  CHECK_THROWS_AS(automorphism_group(gen(7, {"(1,2,3,4,5,6,7)"}), 5), BoundError);
}

TEST_CASE("every automorphism fixes the identity point and preserves the table") {
  PermGroup S3 = gen(3, {"(1,2,3)", "(2,3)"});
  PermGroup aut = automorphism_group(S3);
  const auto& elems = S3.elements();
  for (const Perm& a : aut.elements()) {
    CHECK(a(0) == 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        std::uint32_t prod = *S3.element_index(elems[i] * elems[j]);
        CHECK(a(prod) == *S3.element_index(elems[a(i)] * elems[a(j)]));
      }
  }
}

TEST_CASE("holomorph structure") {
  PermGroup C6 = gen(6, {"(1,2,3,4,5,6)"});
  const HolomorphGroup& h = holomorph(C6);
  CHECK(h.ambient.order() == 12);
  CHECK(identify(h.ambient) == "D_{2·6}");
  CHECK(h.ambient.order() == h.left_regular.order() * h.automorphism_part.order());
  CHECK(is_regular(h.left_regular, 6));
  CHECK(h.left_regular.is_normal_in(h.ambient));
  // stabilizer of point 1 equals the automorphism part
  CHECK(h.ambient.stabilizer(0).same_element_set(h.automorphism_part));

  PermGroup S3 = gen(3, {"(1,2,3)", "(2,3)"});
  const HolomorphGroup& hs = holomorph(S3);
  CHECK(hs.ambient.order() == 36);
  CHECK(identify(hs.ambient) == "F_{18}:2");

  PermGroup E8 = gen(6, {"(1,2)", "(3,4)", "(5,6)"});
  CHECK(holomorph(E8).ambient.order() == 1344);
}

TEST_CASE("holomorph order formulas") {
  CHECK(holomorph_order_cyclic(15) == 120);
  CHECK(holomorph_order_cyclic(11) == 110);
  CHECK(holomorph_order_dihedral(3) == 36);
  CHECK(holomorph_order_dihedral(4) == 64);
  CHECK_THROWS_AS(holomorph_order_dihedral(2), ValidationError);
  // matches the computed holomorphs on catalog groups
  for (long long n : {2LL, 3LL, 4LL, 5LL, 6LL, 7LL, 8LL, 9LL, 12LL}) {
    PermGroup Cn = groups_of_order(n)[0].group();
    REQUIRE(groups_of_order(n)[0].name == "C" + std::to_string(n));
    CHECK(static_cast<long long>(holomorph(Cn).ambient.order()) == holomorph_order_cyclic(n));
  }
  for (long long n : {3LL, 4LL, 5LL, 6LL}) {
    PermGroup D = catalog_group(2 * n, n == 3 ? "S3" : "D_{2·" + std::to_string(n) + "}");
    CHECK(static_cast<long long>(holomorph(D).ambient.order()) == holomorph_order_dihedral(n));
  }
}

TEST_CASE("left and right regular representations coincide exactly for abelian groups") {
  for (long long m : {2LL, 3LL, 4LL, 5LL, 6LL, 7LL, 8LL, 9LL, 10LL, 11LL, 12LL}) {
    for (const auto& e : groups_of_order(m)) {
      PermGroup N = e.group();
      bool same = left_regular_rep(N).same_element_set(right_regular_rep(N));
      CHECK_MESSAGE(same == N.is_abelian(), e.name);
    }
  }
}

TEST_CASE("holomorph memoization returns the same object") {
  PermGroup C6 = gen(6, {"(1,2,3,4,5,6)"});
  const HolomorphGroup& a = holomorph(C6);
  const HolomorphGroup& b = holomorph(gen(6, {"(1,2,3,4,5,6)"}));
  CHECK(&a == &b);
}
