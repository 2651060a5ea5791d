#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hgk/perm.hpp"

namespace hgk {

namespace detail {
struct GroupData;
}

// A finitely generated subgroup of Sym({1..degree}). Immutable; element
// enumeration is by breadth-first closure, cached on first use and safe to
// share across threads. Elements are kept in lexicographic order on image
// sequences, which fixes a canonical ordering for all downstream output.
class PermGroup {
 public:
  PermGroup() : PermGroup(trivial(1)) {}  // trivial group on one point

  static PermGroup generate(unsigned degree, std::vector<Perm> generators);
  static PermGroup trivial(unsigned degree);
  // for callers that already know the full element set (must be closed)
  static PermGroup from_elements(unsigned degree, std::vector<Perm> generators,
                                 std::vector<Perm> elements);

  unsigned degree() const;
  const std::vector<Perm>& generators() const;
  const std::vector<Perm>& elements() const;  // sorted, identity first
  std::size_t order() const { return elements().size(); }

  bool contains(const Perm& p) const;
  std::optional<std::uint32_t> element_index(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup& G) const;
  bool same_element_set(const PermGroup& other) const;

  std::vector<unsigned> orbit(unsigned point) const;
  bool is_transitive() const;
  PermGroup stabilizer(unsigned point) const;
  PermGroup conjugated_by(const Perm& g) const;
  bool is_normal_in(const PermGroup& G) const;

  // index-based multiplication tables; only for modest orders
  const std::vector<std::uint32_t>& mult_table(std::size_t max_order = 5000) const;
  const std::vector<std::uint32_t>& inverse_table() const;
  std::uint32_t mult(std::uint32_t a, std::uint32_t b) const;

 private:
  explicit PermGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::GroupData> data_;
};

// ---------------------------------------------------------------------------
// standard helpers

// largest normal subgroup of G contained in Gp
PermGroup core(const PermGroup& G, const PermGroup& Gp);

PermGroup join(const PermGroup& A, const PermGroup& B);

// every subgroup of G exactly once, sorted by (order, element list)
std::vector<PermGroup> all_subgroups(const PermGroup& G, std::size_t order_bound = 120);

// all normal subgroups, via joins of conjugacy-class closures (no order bound
// beyond the multiplication table)
std::vector<PermGroup> normal_subgroups(const PermGroup& G);

// representatives of the G-conjugacy classes of the given subgroups of G
std::vector<PermGroup> conjugacy_class_reps(const PermGroup& G,
                                            const std::vector<PermGroup>& subgroups);

bool is_regular(const PermGroup& N, unsigned domain_size);
bool is_normalized_by(const PermGroup& N, const PermGroup& G);

// ---------------------------------------------------------------------------
// left coset action

struct CosetSpace {
  std::vector<Perm> coset_reps;  // lex-least member of each coset; base coset first
  unsigned base_point = 0;       // index of the coset of the identity
};

class CosetAction {
 public:
  CosetAction(PermGroup parent, PermGroup subgroup, PermGroup image, CosetSpace space,
              std::vector<std::uint32_t> coset_of_element);

  const PermGroup& parent() const { return parent_; }
  const PermGroup& subgroup() const { return subgroup_; }
  const PermGroup& image() const { return image_; }
  const CosetSpace& space() const { return space_; }

  Perm act(const Perm& g) const;          // coset permutation of any g in parent
  unsigned coset_of(const Perm& g) const; // index of the coset gGp

 private:
  PermGroup parent_, subgroup_, image_;
  CosetSpace space_;
  std::vector<std::uint32_t> coset_of_element_;  // aligned with parent.elements()
};

// action of G on the left cosets of Gp, with deterministic enumeration:
// cosets ordered by their lex-least member, so the base coset is point 1
CosetAction left_coset_action(const PermGroup& G, const PermGroup& Gp);

// left and right regular representations on the canonical element list
PermGroup left_regular_rep(const PermGroup& N);
PermGroup right_regular_rep(const PermGroup& N);

}  // namespace hgk
