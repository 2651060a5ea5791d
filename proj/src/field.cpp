#include "hgk/field.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace hgk {

namespace {

// polynomial helpers over Q, dense low-to-high
RatVec poly_trim(RatVec p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RatVec poly_rem(RatVec a, const RatVec& b) {
  a = poly_trim(std::move(a));
  RatVec bb = poly_trim(b);
  if (bb.empty()) throw ValidationError("polynomial division by zero");
  while (a.size() >= bb.size()) {
    Rat f = a.back() / bb.back();
    std::size_t shift = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

RatVec poly_gcd(RatVec a, RatVec b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    RatVec r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

RatVec poly_derivative(const RatVec& p) {
  RatVec d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
  return d;
}

}  // namespace

NumberFieldQ::NumberFieldQ(RatVec min_poly) : f_(std::move(min_poly)) {
  if (f_.size() < 3) throw ValidationError("minimal polynomial must have degree at least 2");
  if (f_.back() != 1) throw ValidationError("minimal polynomial must be monic");
  degree_ = static_cast<unsigned>(f_.size() - 1);
}

RatVec NumberFieldQ::one() const {
  RatVec v(degree_, 0);
  v[0] = 1;
  return v;
}

bool NumberFieldQ::is_zero(const RatVec& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

RatVec NumberFieldQ::add(const RatVec& a, const RatVec& b) const {
  RatVec c(degree_);
  for (unsigned i = 0; i < degree_; ++i) c[i] = a[i] + b[i];
  return c;
}

RatVec NumberFieldQ::sub(const RatVec& a, const RatVec& b) const {
  RatVec c(degree_);
  for (unsigned i = 0; i < degree_; ++i) c[i] = a[i] - b[i];
  return c;
}

RatVec NumberFieldQ::scale(const Rat& c, const RatVec& a) const {
  RatVec out(degree_);
  for (unsigned i = 0; i < degree_; ++i) out[i] = c * a[i];
  return out;
}

RatVec NumberFieldQ::mul(const RatVec& a, const RatVec& b) const {
  RatVec prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  // reduce modulo f using x^d = -(c0 + ... + c_{d-1} x^{d-1})
  for (std::size_t k = prod.size(); k-- > degree_;) {
    if (prod[k] == 0) continue;
    Rat c = prod[k];
    prod[k] = 0;
    for (unsigned i = 0; i < degree_; ++i) prod[k - degree_ + i] -= c * f_[i];
  }
  prod.resize(degree_);
  return prod;
}

RatVec NumberFieldQ::inverse(const RatVec& a) const {
  if (is_zero(a)) throw ValidationError("division by zero in the number field");
  // extended euclid in Q[x]: s*a + t*f = gcd
  RatVec r0 = f_, r1 = poly_trim(a);
  RatVec s0{}, s1{Rat(1)};
  s0 = RatVec{};
  while (true) {
    r1 = poly_trim(std::move(r1));
    if (r1.empty()) throw ValidationError("zero divisor: the modulus is reducible");
    if (r1.size() == 1) break;
    // quotient of r0 by r1
    RatVec q;
    RatVec rem = r0;
    rem = poly_trim(std::move(rem));
    q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, Rat(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rat fq = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = fq;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= fq * r1[i];
      rem = poly_trim(std::move(rem));
    }
    // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q*s1)
    RatVec qs1(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0)
        for (std::size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
    RatVec news1 = s0;
    news1.resize(std::max(news1.size(), qs1.size()), 0);
    for (std::size_t i = 0; i < qs1.size(); ++i) news1[i] -= qs1[i];
    s0 = std::move(s1);
    s1 = poly_trim(std::move(news1));
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  Rat lead = r1[0];
  RatVec inv = s1;
  for (Rat& c : inv) c /= lead;
  inv = poly_rem(std::move(inv), f_);
  inv.resize(degree_, 0);
  return inv;
}

RatVec NumberFieldQ::pow_of_element(const RatVec& a, unsigned k) const {
  RatVec out = one();
  for (unsigned i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

RatVec NumberFieldQ::eval_poly(const RatVec& coeffs, const RatVec& at) const {
  RatVec out = zero();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    out = mul(out, at);
    out[0] += coeffs[k];
  }
  return out;
}

// ---------------------------------------------------------------------------

const RatMat& CheckedPresentation::matrix_of(const Perm& g) const {
  auto idx = G.element_index(g);
  if (!idx) throw ValidationError("matrix_of: element not in the bound group");
  return matrices[*idx];
}

namespace {

// partial reducibility probe: squarefreeness plus all rational (linear) roots
void check_reducibility_probe(const RatVec& f) {
  RatVec g = poly_gcd(f, poly_derivative(f));
  if (g.size() > 1) throw ValidationError("minimal polynomial has repeated factors");
  // rational root theorem on the integer model
  mpz_class lcm_den = 1;
  for (const Rat& c : f) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<mpz_class> zc;
  for (const Rat& c : f) zc.push_back(mpz_class(c.get_num() * (lcm_den / c.get_den())));
  if (zc.front() == 0) throw ValidationError("minimal polynomial has root 0, so it is reducible");
  mpz_class a0 = abs(zc.front());
  mpz_class ad = abs(zc.back());
  auto divisors = [](const mpz_class& v) {
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= v && d < 100000; ++d)
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
    return out;
  };
  for (const mpz_class& p : divisors(a0))
    for (const mpz_class& q : divisors(ad))
      for (int sign : {1, -1}) {
        Rat root(sign * p, q);
        root.canonicalize();
        // evaluate
        Rat val = 0;
        for (std::size_t k = f.size(); k-- > 0;) val = val * root + f[k];
        if (val == 0)
          throw ValidationError("minimal polynomial has rational root " + rat_string(root));
      }
}

}  // namespace

CheckedPresentation validate_presentation(const SplittingFieldPresentation& P, const PermGroup& G) {
  if (P.min_poly.empty() || P.min_poly.back() != 1)
    throw ValidationError("presentation: minimal polynomial must be monic");
  const unsigned d = static_cast<unsigned>(P.min_poly.size() - 1);
  if (d != G.order())
    throw ValidationError("presentation: degree " + std::to_string(d) +
                          " does not match |G| = " + std::to_string(G.order()));
  check_reducibility_probe(P.min_poly);
  NumberFieldQ field(P.min_poly);

  // bind generator names to group elements
  std::map<std::string, Perm> bound;
  for (const auto& [name, cycles] : P.binding) bound.emplace(name, Perm::parse(cycles, G.degree()));
  std::vector<Perm> bound_gens;
  std::vector<RatMat> bound_mats;
  for (const auto& [name, image] : P.generator_images) {
    auto it = bound.find(name);
    if (it == bound.end())
      throw ValidationError("presentation: no binding for generator '" + name + "'");
    if (!G.contains(it->second))
      throw ValidationError("presentation: bound element for '" + name + "' is not in G");
    if (image.size() != d)
      throw ValidationError("presentation: image of theta must have " + std::to_string(d) +
                            " coordinates");
    // the image must be a root of the minimal polynomial
    RatVec value = field.eval_poly(P.min_poly, image);
    if (!field.is_zero(value))
      throw ValidationError("presentation: image for '" + name + "' is not a root");
    RatMat M(d, RatVec(d, 0));
    RatVec pw = field.one();
    for (unsigned k = 0; k < d; ++k) {
      for (unsigned r = 0; r < d; ++r) M[r][k] = pw[r];
      pw = field.mul(pw, image);
    }
    bound_gens.push_back(it->second);
    bound_mats.push_back(std::move(M));
  }
  if (!PermGroup::generate(G.degree(), bound_gens).same_element_set(G))
    throw ValidationError("presentation: bound elements do not generate G");

  // close the generator matrices into a full, conflict-free labelling of G
  const auto& elems = G.elements();
  std::vector<RatMat> matrices(elems.size());
  std::vector<bool> known(elems.size(), false);
  matrices[0] = mat_identity(d);
  known[0] = true;
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::uint32_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < bound_gens.size(); ++k) {
      std::uint32_t xg = *G.element_index(elems[x] * bound_gens[k]);
      RatMat prod = mat_mul(matrices[x], bound_mats[k]);
      if (known[xg]) {
        if (matrices[xg] != prod)
          throw ValidationError("presentation: generator images violate the group relations");
      } else {
        matrices[xg] = std::move(prod);
        known[xg] = true;
        frontier.push_back(xg);
      }
    }
  }
  // faithfulness
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (matrices[i] == matrices[j])
        throw ValidationError("presentation: the action of G is not faithful");
  return CheckedPresentation{P.name, std::move(field), G, std::move(matrices)};
}

RatMat fixed_subspace(const CheckedPresentation& P, const PermGroup& S) {
  const unsigned d = P.field.degree();
  if (S.generators().empty()) return mat_identity(d);
  RatMat stacked;
  for (const Perm& g : S.generators()) {
    const RatMat& M = P.matrix_of(g);
    for (unsigned r = 0; r < d; ++r) {
      RatVec row = M[r];
      row[r] -= 1;
      stacked.push_back(std::move(row));
    }
  }
  return row_space_echelon(kernel_basis(stacked));
}

// ---------------------------------------------------------------------------

const char* action_convention_string(ActionConvention c) {
  return c == ActionConvention::inverse_base ? "inverse-base" : "direct-base";
}

DescentContext make_descent_context(const CheckedPresentation& P, const ExtensionDatum& E,
                                    const HGStructure& s,
                                    std::optional<ActionConvention> convention) {
  if (!P.G.same_element_set(E.G))
    throw ValidationError("descent: presentation is bound to a different group");
  DescentContext ctx;
  ctx.pres = &P;
  ctx.E = &E;
  ctx.structure = &s;
  ctx.convention = convention.value_or(E.galois() ? ActionConvention::inverse_base
                                                  : ActionConvention::direct_base);
  ctx.k_basis = fixed_subspace(P, E.Gp);
  ctx.n_elements = s.regular_N.elements();
  return ctx;
}

HopfAlgebraBasis hopf_algebra_basis(const DescentContext& ctx) {
  const unsigned d = ctx.pres->field.degree();
  const unsigned n = ctx.E->n;
  const auto& N = ctx.structure->regular_N;
  const auto& etas = ctx.n_elements;
  RatMat system;
  for (const Perm& g : ctx.E->G.generators()) {
    Perm lg = ctx.E->action.act(g);
    const RatMat& M = ctx.pres->matrix_of(g);
    // conjugation index map: eta_j -> lg eta_j lg^-1
    std::vector<std::uint32_t> conj(n);
    Perm lgi = lg.inverse();
    for (unsigned j = 0; j < n; ++j) conj[j] = *N.element_index(lg * etas[j] * lgi);
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned r = 0; r < d; ++r) {
        RatVec row(static_cast<std::size_t>(n) * d, 0);
        for (unsigned k = 0; k < d; ++k) row[static_cast<std::size_t>(j) * d + k] += M[r][k];
        row[static_cast<std::size_t>(conj[j]) * d + r] -= 1;
        system.push_back(std::move(row));
      }
    }
  }
  HopfAlgebraBasis H;
  H.n = n;
  H.d = d;
  H.n_elements = etas;
  H.rows = row_space_echelon(kernel_basis(system));
  if (H.rows.size() != n)
    throw ValidationError("descent: fixed space has dimension " + std::to_string(H.rows.size()) +
                          ", expected " + std::to_string(n));
  return H;
}

namespace {

unsigned action_point(const DescentContext& ctx, const Perm& eta) {
  return ctx.convention == ActionConvention::inverse_base ? eta.inverse()(0) : eta(0);
}

}  // namespace

RatVec apply_hopf_element(const DescentContext& ctx, const RatVec& h, const RatVec& x) {
  const NumberFieldQ& F = ctx.pres->field;
  const unsigned d = F.degree();
  const unsigned n = ctx.E->n;
  RatVec out = F.zero();
  for (unsigned j = 0; j < n; ++j) {
    RatVec coeff(h.begin() + static_cast<std::size_t>(j) * d,
                 h.begin() + static_cast<std::size_t>(j + 1) * d);
    if (F.is_zero(coeff)) continue;
    unsigned pt = action_point(ctx, ctx.n_elements[j]);
    const Perm& rep = ctx.E->action.space().coset_reps[pt];
    RatVec moved = mat_apply(ctx.pres->matrix_of(rep), x);
    out = F.add(out, F.mul(coeff, moved));
  }
  return out;
}

namespace {

// coordinates of v in the echelon basis rows; throws when v is outside
RatVec coords_in_echelon(const RatMat& basis, const RatVec& v) {
  // pivot of each row = first nonzero column
  RatVec coords(basis.size(), 0);
  RatVec rem = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t pivot = 0;
    while (pivot < basis[i].size() && basis[i][pivot] == 0) ++pivot;
    coords[i] = rem[pivot];  // echelon rows have 1 at their pivot
    if (coords[i] != 0)
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= coords[i] * basis[i][j];
  }
  for (const Rat& c : rem)
    if (c != 0) throw ValidationError("vector lies outside the expected subspace");
  return coords;
}

}  // namespace

RatMat hopf_action_matrix(const DescentContext& ctx, const HopfAlgebraBasis& H, const RatVec& h) {
  if (!in_row_space(H.rows, h))
    throw ValidationError("hopf_action_matrix: element is not in the Hopf algebra");
  const std::size_t m = ctx.k_basis.size();
  RatMat R(m, RatVec(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    RatVec y = apply_hopf_element(ctx, h, ctx.k_basis[j]);
    RatVec c = coords_in_echelon(ctx.k_basis, y);
    for (std::size_t i = 0; i < m; ++i) R[i][j] = c[i];
  }
  return R;
}

Rat counit(const DescentContext& ctx, const RatVec& h) {
  const NumberFieldQ& F = ctx.pres->field;
  const unsigned d = F.degree();
  RatVec sum = F.zero();
  for (unsigned j = 0; j < ctx.E->n; ++j) {
    RatVec coeff(h.begin() + static_cast<std::size_t>(j) * d,
                 h.begin() + static_cast<std::size_t>(j + 1) * d);
    sum = F.add(sum, coeff);
  }
  for (unsigned k = 1; k < d; ++k)
    if (sum[k] != 0) throw ValidationError("counit: coefficient sum is not rational");
  return sum[0];
}

RatMat sub_hopf_algebra(const DescentContext& ctx, const HopfAlgebraBasis& H, const PermGroup& Np) {
  for (const Perm& p : Np.generators())
    if (!ctx.structure->regular_N.contains(p))
      throw ValidationError("sub_hopf_algebra: Np is not a subgroup of the structure group");
  const unsigned d = H.d;
  std::vector<bool> inside(H.n, false);
  for (unsigned j = 0; j < H.n; ++j) inside[j] = Np.contains(H.n_elements[j]);
  // combinations of H rows supported inside Np
  RatMat outside_cols;  // map combo -> outside coordinates
  for (std::size_t r = 0; r < H.rows.size(); ++r) {
    RatVec col;
    for (unsigned j = 0; j < H.n; ++j) {
      if (inside[j]) continue;
      for (unsigned k = 0; k < d; ++k) col.push_back(H.rows[r][static_cast<std::size_t>(j) * d + k]);
    }
    outside_cols.push_back(std::move(col));
  }
  const std::size_t outside_count = outside_cols.empty() ? 0 : outside_cols[0].size();
  RatMat combos = outside_count == 0 ? mat_identity(H.rows.size())
                                     : kernel_basis(mat_transpose(outside_cols));
  RatMat out;
  for (const RatVec& combo : combos) {
    RatVec v(H.rows[0].size(), 0);
    for (std::size_t r = 0; r < H.rows.size(); ++r)
      if (combo[r] != 0)
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += combo[r] * H.rows[r][c];
    out.push_back(std::move(v));
  }
  return row_space_echelon(std::move(out));
}

RatMat fixed_field_of_sub_hopf(const DescentContext& ctx, const HopfAlgebraBasis& H,
                               const RatMat& sub) {
  const unsigned d = ctx.pres->field.degree();
  const std::size_t m = ctx.k_basis.size();
  for (const RatVec& h : sub)
    if (!in_row_space(H.rows, h))
      throw ValidationError("fixed_field_of_sub_hopf: basis element outside H");
  RatMat stacked;  // conditions on K-coordinates
  for (const RatVec& h : sub) {
    Rat eps = counit(ctx, h);
    // rows: (mu(h) - eps) e_j in theta coordinates
    RatMat cols(m);
    for (std::size_t j = 0; j < m; ++j) {
      RatVec y = apply_hopf_element(ctx, h, ctx.k_basis[j]);
      for (unsigned r = 0; r < d; ++r) y[r] -= eps * ctx.k_basis[j][r];
      cols[j] = std::move(y);
    }
    for (unsigned r = 0; r < d; ++r) {
      RatVec row(m, 0);
      for (std::size_t j = 0; j < m; ++j) row[j] = cols[j][r];
      stacked.push_back(std::move(row));
    }
  }
  RatMat kern = stacked.empty() ? mat_identity(m) : kernel_basis(stacked);
  RatMat out;
  for (const RatVec& c : kern) {
    RatVec x(d, 0);
    for (std::size_t j = 0; j < m; ++j)
      if (c[j] != 0)
        for (unsigned r = 0; r < d; ++r) x[r] += c[j] * ctx.k_basis[j][r];
    out.push_back(std::move(x));
  }
  return row_space_echelon(std::move(out));
}

std::size_t field_rank(const NumberFieldQ& field, std::vector<std::vector<RatVec>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && field.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    RatVec inv = field.inverse(rows[r][c]);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = field.mul(rows[r][j], inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || field.is_zero(rows[i][c])) continue;
      RatVec f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
    }
    ++r;
    ++rank;
  }
  return rank;
}

bool verify_hg_isomorphism(const DescentContext& ctx, const HopfAlgebraBasis& H) {
  const NumberFieldQ& F = ctx.pres->field;
  const std::size_t m = ctx.k_basis.size();
  if (m != H.rows.size()) return false;
  RatMat big;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // operator y -> x_i * mu(h_j)(y) as an m x m matrix, flattened
      RatVec flat;
      flat.reserve(m * m);
      RatMat cols(m);
      for (std::size_t b = 0; b < m; ++b) {
        RatVec y = apply_hopf_element(ctx, H.rows[j], ctx.k_basis[b]);
        y = F.mul(ctx.k_basis[i], y);
        cols[b] = coords_in_echelon(ctx.k_basis, y);
      }
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) flat.push_back(cols[b][a]);
      big.push_back(std::move(flat));
    }
  }
  return rank(std::move(big)) == m * m;
}

}  // namespace hgk
