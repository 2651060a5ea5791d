#pragma once

#include <vector>

#include "hgk/permgroup.hpp"

namespace hgk {

// Aut(N) as permutations of N's canonical element list (degree |N|); every
// automorphism fixes point 1, the identity of N.
PermGroup automorphism_group(const PermGroup& N, std::size_t bound = 64);

// Hol(N) acting on the element set of N, with point 1 = e_N.
struct HolomorphGroup {
  PermGroup ambient;           // <lambda(N), Aut(N)>
  PermGroup left_regular;      // lambda(N), regular and normal in ambient
  PermGroup automorphism_part; // stabilizer of point 1 in ambient
  std::vector<Perm> element_labels;  // N's elements, aligned with the points
};

// memoized per multiplication table; the reference stays valid for the
// lifetime of the process
const HolomorphGroup& holomorph(const PermGroup& N, std::size_t bound = 64);

long long euler_phi(long long n);
long long holomorph_order_cyclic(long long n);    // n * phi(n)
long long holomorph_order_dihedral(long long n);  // |Hol(D_{2n})| = 2 n^2 phi(n), n >= 3

}  // namespace hgk
