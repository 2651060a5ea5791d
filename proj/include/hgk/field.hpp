#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgk/hopf.hpp"
#include "hgk/rational.hpp"

namespace hgk {

// K~ = Q(theta) presented by the minimal polynomial of theta, with the Galois
// action given by polynomial images of theta for each bound generator of G.
struct SplittingFieldPresentation {
  std::string name;
  RatVec min_poly;  // c0..cd, monic (cd = 1)
  std::vector<std::pair<std::string, RatVec>> generator_images;
  std::vector<std::pair<std::string, std::string>> binding;  // name -> cycles
};

// arithmetic in Q[x]/(f); elements are coordinate vectors of length deg f
class NumberFieldQ {
 public:
  explicit NumberFieldQ(RatVec min_poly);

  unsigned degree() const { return degree_; }
  const RatVec& min_poly() const { return f_; }

  RatVec zero() const { return RatVec(degree_, 0); }
  RatVec one() const;
  bool is_zero(const RatVec& a) const;
  RatVec add(const RatVec& a, const RatVec& b) const;
  RatVec sub(const RatVec& a, const RatVec& b) const;
  RatVec mul(const RatVec& a, const RatVec& b) const;
  RatVec scale(const Rat& c, const RatVec& a) const;
  RatVec inverse(const RatVec& a) const;  // throws ValidationError on zero divisors
  RatVec pow_of_element(const RatVec& a, unsigned k) const;
  RatVec eval_poly(const RatVec& coeffs, const RatVec& at) const;

 private:
  RatVec f_;
  unsigned degree_;
};

struct CheckedPresentation {
  std::string name;
  NumberFieldQ field;
  PermGroup G;
  std::vector<RatMat> matrices;  // automorphism matrices, aligned with G.elements()

  const RatMat& matrix_of(const Perm& g) const;
};

// verifies roots, relations, faithfulness and degree = |G|
CheckedPresentation validate_presentation(const SplittingFieldPresentation& P, const PermGroup& G);

// echelon basis (rows, theta-power coordinates) of the fixed field of S <= G
RatMat fixed_subspace(const CheckedPresentation& P, const PermGroup& S);

// Evaluation convention for the Hopf action. The group-algebra element eta
// acts through the coset representative at eta^{-1}(base) or at eta(base);
// both reproduce the classical worked examples in their respective cases, and
// the choice is recorded in all output.
enum class ActionConvention { inverse_base, direct_base };
const char* action_convention_string(ActionConvention c);

struct DescentContext {
  const CheckedPresentation* pres = nullptr;
  const ExtensionDatum* E = nullptr;
  const HGStructure* structure = nullptr;
  ActionConvention convention = ActionConvention::inverse_base;
  RatMat k_basis;                  // basis of K = fix(Gp), theta coordinates
  std::vector<Perm> n_elements;    // regular_N.elements()
};

DescentContext make_descent_context(const CheckedPresentation& P, const ExtensionDatum& E,
                                    const HGStructure& s,
                                    std::optional<ActionConvention> convention = std::nullopt);

// A group-algebra element is a vector of length n*d: the coefficient of
// n_elements[j] occupies coordinates [j*d, (j+1)*d).
struct HopfAlgebraBasis {
  RatMat rows;  // echelon; dimension must equal n
  unsigned n = 0;
  unsigned d = 0;
  std::vector<Perm> n_elements;
};

HopfAlgebraBasis hopf_algebra_basis(const DescentContext& ctx);

// mu(h)(x) for x in K (theta coordinates); h need not be checked against H
RatVec apply_hopf_element(const DescentContext& ctx, const RatVec& h, const RatVec& x);

// matrix of mu(h) on ctx.k_basis; h must lie in the span of H
RatMat hopf_action_matrix(const DescentContext& ctx, const HopfAlgebraBasis& H, const RatVec& h);

// counit: coefficient sum, which lands in Q for G-fixed elements
Rat counit(const DescentContext& ctx, const RatVec& h);

// basis of K~[Np]^G = K~[Np] ∩ H
RatMat sub_hopf_algebra(const DescentContext& ctx, const HopfAlgebraBasis& H, const PermGroup& Np);

// basis (theta coordinates) of { x in K : mu(h)(x) = eps(h) x for h in sub }
RatMat fixed_field_of_sub_hopf(const DescentContext& ctx, const HopfAlgebraBasis& H,
                               const RatMat& sub);

// rank over K~ of a list of vectors with field-element entries
std::size_t field_rank(const NumberFieldQ& field, std::vector<std::vector<RatVec>> rows);

// the defining map K tensor H -> End_k(K) has full rank
bool verify_hg_isomorphism(const DescentContext& ctx, const HopfAlgebraBasis& H);

}  // namespace hgk
