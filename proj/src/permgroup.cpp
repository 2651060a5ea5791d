#include "hgk/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hgk {

namespace detail {

struct GroupData {
  unsigned degree = 1;
  std::vector<Perm> gens;

  mutable std::mutex mu;
  mutable bool elems_done = false;
  mutable std::vector<Perm> elems;
  mutable std::unordered_map<Perm, std::uint32_t, PermHash> index;
  mutable std::vector<std::uint32_t> mult;
  mutable std::vector<std::uint32_t> inv;

  void ensure_elements() const {
    std::lock_guard<std::mutex> lock(mu);
    if (elems_done) return;
    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> todo;
    Perm id(degree);
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
      Perm cur = std::move(todo.front());
      todo.pop_front();
      for (const Perm& g : gens) {
        Perm nxt = g * cur;
        if (seen.insert(nxt).second) todo.push_back(nxt);
      }
    }
    elems.assign(seen.begin(), seen.end());
    std::sort(elems.begin(), elems.end());
    index.reserve(elems.size());
    for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    elems_done = true;
  }

  void set_elements(std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    elems = std::move(elements);
    for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    elems_done = true;
  }

  void ensure_tables(std::size_t max_order) const {
    ensure_elements();
    std::lock_guard<std::mutex> lock(mu);
    if (!mult.empty()) return;
    const std::size_t n = elems.size();
    if (n > max_order)
      throw BoundError("multiplication table requested for group of order " + std::to_string(n));
    mult.resize(n * n);
    inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = index.at(elems[i] * elems[j]);
      inv[i] = index.at(elems[i].inverse());
    }
  }
};

}  // namespace detail

PermGroup PermGroup::generate(unsigned degree, std::vector<Perm> generators) {
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw ValidationError("generator degree mismatch");
    if (!g.is_identity()) data->gens.push_back(g);
  }
  return PermGroup(std::move(data));
}

PermGroup PermGroup::trivial(unsigned degree) { return generate(degree, {}); }

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> generators,
                                   std::vector<Perm> elements) {
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  for (const Perm& g : generators)
    if (!g.is_identity()) data->gens.push_back(g);
  data->set_elements(std::move(elements));
  return PermGroup(std::move(data));
}

unsigned PermGroup::degree() const { return data_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return data_->gens; }

const std::vector<Perm>& PermGroup::elements() const {
  data_->ensure_elements();
  return data_->elems;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree()) return false;
  data_->ensure_elements();
  return data_->index.count(p) != 0;
}

std::optional<std::uint32_t> PermGroup::element_index(const Perm& p) const {
  data_->ensure_elements();
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i] * gs[j] != gs[j] * gs[i]) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& G) const {
  if (degree() != G.degree()) return false;
  if (order() > G.order()) return false;
  for (const Perm& g : generators())
    if (!G.contains(g)) return false;
  return true;
}

bool PermGroup::same_element_set(const PermGroup& other) const {
  return degree() == other.degree() && elements() == other.elements();
}

std::vector<unsigned> PermGroup::orbit(unsigned point) const {
  std::vector<bool> seen(degree(), false);
  std::vector<unsigned> out;
  seen[point] = true;
  out.push_back(point);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Perm& g : generators()) {
      unsigned q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree(); }

PermGroup PermGroup::stabilizer(unsigned point) const {
  std::vector<Perm> stab;
  for (const Perm& p : elements())
    if (p(point) == point) stab.push_back(p);
  std::vector<Perm> gens;
  for (const Perm& p : stab)
    if (!p.is_identity()) gens.push_back(p);
  return PermGroup::from_elements(degree(), std::move(gens), std::move(stab));
}

PermGroup PermGroup::conjugated_by(const Perm& g) const {
  std::vector<Perm> gens;
  gens.reserve(generators().size());
  for (const Perm& x : generators()) gens.push_back(x.conjugated_by(g));
  if (data_->elems_done) {
    std::vector<Perm> elems;
    elems.reserve(order());
    Perm gi = g.inverse();
    for (const Perm& x : elements()) elems.push_back(g * x * gi);
    return PermGroup::from_elements(degree(), std::move(gens), std::move(elems));
  }
  return PermGroup::generate(degree(), std::move(gens));
}

bool PermGroup::is_normal_in(const PermGroup& G) const {
  if (!is_subgroup_of(G)) return false;
  for (const Perm& g : G.generators())
    for (const Perm& n : generators())
      if (!contains(n.conjugated_by(g))) return false;
  return true;
}

const std::vector<std::uint32_t>& PermGroup::mult_table(std::size_t max_order) const {
  data_->ensure_tables(max_order);
  return data_->mult;
}

const std::vector<std::uint32_t>& PermGroup::inverse_table() const {
  data_->ensure_tables(5000);
  return data_->inv;
}

std::uint32_t PermGroup::mult(std::uint32_t a, std::uint32_t b) const {
  return data_->mult[a * order() + b];
}

// ---------------------------------------------------------------------------

PermGroup core(const PermGroup& G, const PermGroup& Gp) {
  if (!Gp.is_subgroup_of(G)) throw ValidationError("core: not a subgroup");
  std::set<Perm> current(Gp.elements().begin(), Gp.elements().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Perm& g : G.generators()) {
      std::set<Perm> conj;
      for (const Perm& x : current) conj.insert(x.conjugated_by(g));
      if (conj != current) {
        std::set<Perm> inter;
        std::set_intersection(current.begin(), current.end(), conj.begin(), conj.end(),
                              std::inserter(inter, inter.begin()));
        current = std::move(inter);
        changed = true;
      }
    }
  }
  std::vector<Perm> elems(current.begin(), current.end());
  std::vector<Perm> gens;
  for (const Perm& p : elems)
    if (!p.is_identity()) gens.push_back(p);
  return PermGroup::from_elements(G.degree(), std::move(gens), std::move(elems));
}

PermGroup join(const PermGroup& A, const PermGroup& B) {
  std::vector<Perm> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return PermGroup::generate(A.degree(), std::move(gens));
}

namespace {

// subgroups of G as sorted index vectors, closed via the multiplication table
using IdxSet = std::vector<std::uint32_t>;

IdxSet close_indices(const PermGroup& G, IdxSet seed) {
  const auto& table = G.mult_table();
  const std::size_t n = G.order();
  std::vector<bool> in(n, false);
  IdxSet out;
  auto push = [&](std::uint32_t v) {
    if (!in[v]) {
      in[v] = true;
      out.push_back(v);
    }
  };
  push(0);
  for (auto v : seed) push(v);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(table[out[i] * n + out[j]]);
      push(table[out[j] * n + out[i]]);
    }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup subgroup_from_indices(const PermGroup& G, const IdxSet& idx) {
  std::vector<Perm> elems;
  elems.reserve(idx.size());
  for (auto i : idx) elems.push_back(G.elements()[i]);
  std::vector<Perm> gens;
  for (const Perm& p : elems)
    if (!p.is_identity()) gens.push_back(p);
  return PermGroup::from_elements(G.degree(), std::move(gens), std::move(elems));
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& G, std::size_t order_bound) {
  if (G.order() > order_bound)
    throw BoundError("all_subgroups: order " + std::to_string(G.order()) + " exceeds bound " +
                     std::to_string(order_bound));
  const auto& table = G.mult_table();
  const std::size_t n = G.order();
  std::set<IdxSet> found;
  found.insert(IdxSet{0});
  // cyclic subgroups
  for (std::uint32_t x = 1; x < n; ++x) {
    IdxSet cyc{0};
    std::uint32_t cur = x;
    while (cur != 0) {
      cyc.push_back(cur);
      cur = table[cur * n + x];
    }
    std::sort(cyc.begin(), cyc.end());
    found.insert(cyc);
  }
  // close under pairwise join
  std::vector<IdxSet> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      IdxSet seed = work[i];
      seed.insert(seed.end(), work[j].begin(), work[j].end());
      IdxSet jn = close_indices(G, std::move(seed));
      if (found.insert(jn).second) work.push_back(std::move(jn));
    }
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  std::vector<IdxSet> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](const IdxSet& a, const IdxSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& s : sorted) out.push_back(subgroup_from_indices(G, s));
  return out;
}

namespace {

// incremental closure of a seed set, keeping a small generating subset;
// avoids multiplication tables so it scales to the S7-sized groups that the
// classification tables need
std::pair<std::vector<Perm>, std::vector<Perm>> close_perms(unsigned degree,
                                                            const std::vector<Perm>& seed) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span;
  span.insert(Perm(degree));
  for (const Perm& x : seed) {
    if (span.count(x)) continue;
    gens.push_back(x);
    span.clear();
    span.insert(Perm(degree));
    std::vector<Perm> frontier{Perm(degree)};
    while (!frontier.empty()) {
      Perm cur = std::move(frontier.back());
      frontier.pop_back();
      for (const Perm& g : gens) {
        Perm nxt = g * cur;
        if (span.insert(nxt).second) frontier.push_back(nxt);
      }
    }
  }
  std::vector<Perm> elems(span.begin(), span.end());
  std::sort(elems.begin(), elems.end());
  return {std::move(gens), std::move(elems)};
}

}  // namespace

std::vector<PermGroup> normal_subgroups(const PermGroup& G) {
  const auto& elems = G.elements();
  // conjugacy classes as orbits under conjugation by the generators
  std::vector<std::vector<Perm>> classes;
  {
    std::unordered_set<Perm, PermHash> seen;
    for (const Perm& x : elems) {
      if (seen.count(x)) continue;
      std::vector<Perm> cl{x};
      seen.insert(x);
      for (std::size_t i = 0; i < cl.size(); ++i)
        for (const Perm& g : G.generators()) {
          Perm y = cl[i].conjugated_by(g);
          if (seen.insert(y).second) cl.push_back(y);
        }
      classes.push_back(std::move(cl));
    }
  }
  // normal closures of single classes, then close under joins
  std::set<std::vector<Perm>> found;
  std::vector<std::pair<std::vector<Perm>, std::vector<Perm>>> work;  // (gens, elems)
  found.insert({Perm(G.degree())});
  for (const auto& cl : classes) {
    auto closed = close_perms(G.degree(), cl);
    if (found.insert(closed.second).second) work.push_back(std::move(closed));
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Perm> seed = work[i].first;
      seed.insert(seed.end(), work[j].first.begin(), work[j].first.end());
      auto joined = close_perms(G.degree(), seed);
      if (found.insert(joined.second).second) work.push_back(std::move(joined));
    }
  std::vector<std::vector<Perm>> sorted(found.begin(), found.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<PermGroup> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) {
    std::vector<Perm> gens;
    for (const Perm& p : s)
      if (!p.is_identity()) {
        gens.push_back(p);
        if (gens.size() >= 2 && close_perms(G.degree(), gens).second.size() == s.size()) break;
      }
    auto reduced = close_perms(G.degree(), gens);
    out.push_back(PermGroup::from_elements(G.degree(), reduced.first, std::move(s)));
  }
  return out;
}

std::vector<PermGroup> conjugacy_class_reps(const PermGroup& G,
                                            const std::vector<PermGroup>& subgroups) {
  std::vector<PermGroup> reps;
  std::set<std::vector<Perm>> seen;
  for (const PermGroup& H : subgroups) {
    if (seen.count(H.elements())) continue;
    reps.push_back(H);
    for (const Perm& g : G.elements()) {
      PermGroup conj = H.conjugated_by(g);
      seen.insert(conj.elements());
    }
  }
  return reps;
}

bool is_regular(const PermGroup& N, unsigned domain_size) {
  if (N.degree() != domain_size)
    throw ValidationError("is_regular: degree does not match domain size");
  return N.order() == domain_size && N.is_transitive();
}

bool is_normalized_by(const PermGroup& N, const PermGroup& G) {
  if (N.degree() != G.degree()) throw ValidationError("is_normalized_by: degree mismatch");
  for (const Perm& g : G.generators())
    for (const Perm& n : N.generators())
      if (!N.contains(n.conjugated_by(g))) return false;
  return true;
}

// ---------------------------------------------------------------------------

CosetAction::CosetAction(PermGroup parent, PermGroup subgroup, PermGroup image, CosetSpace space,
                         std::vector<std::uint32_t> coset_of_element)
    : parent_(std::move(parent)),
      subgroup_(std::move(subgroup)),
      image_(std::move(image)),
      space_(std::move(space)),
      coset_of_element_(std::move(coset_of_element)) {}

unsigned CosetAction::coset_of(const Perm& g) const {
  auto idx = parent_.element_index(g);
  if (!idx) throw ValidationError("coset_of: element not in the group");
  return coset_of_element_[*idx];
}

Perm CosetAction::act(const Perm& g) const {
  const unsigned m = static_cast<unsigned>(space_.coset_reps.size());
  std::vector<std::uint8_t> img(m);
  for (unsigned i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(coset_of(g * space_.coset_reps[i]));
  return Perm(std::move(img));
}

CosetAction left_coset_action(const PermGroup& G, const PermGroup& Gp) {
  if (!Gp.is_subgroup_of(G)) throw ValidationError("left_coset_action: not a subgroup");
  const auto& elems = G.elements();
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<Perm> reps;  // lex-least member; elems is sorted, so first-seen is least
  for (std::size_t i = 0; i < n; ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    const std::uint32_t label = static_cast<std::uint32_t>(reps.size());
    reps.push_back(elems[i]);
    for (const Perm& h : Gp.elements()) {
      auto idx = G.element_index(elems[i] * h);
      coset_of[*idx] = label;
    }
  }
  // reps came out in lex order already (first-seen over a sorted list), and
  // the identity coset is first
  const unsigned m = static_cast<unsigned>(reps.size());
  if (m > 255) throw BoundError("coset space larger than 255 points");
  CosetSpace space;
  space.coset_reps = reps;
  space.base_point = 0;
  auto act_of = [&](const Perm& g) {
    std::vector<std::uint8_t> img(m);
    for (unsigned i = 0; i < m; ++i) {
      auto idx = G.element_index(g * reps[i]);
      img[i] = static_cast<std::uint8_t>(coset_of[*idx]);
    }
    return Perm(std::move(img));
  };
  std::vector<Perm> image_gens;
  image_gens.reserve(G.generators().size());
  for (const Perm& g : G.generators()) image_gens.push_back(act_of(g));
  PermGroup image = PermGroup::generate(m, image_gens);
  return CosetAction(G, Gp, std::move(image), std::move(space), std::move(coset_of));
}

PermGroup left_regular_rep(const PermGroup& N) {
  return left_coset_action(N, PermGroup::trivial(N.degree())).image();
}

PermGroup right_regular_rep(const PermGroup& N) {
  const auto& elems = N.elements();
  const unsigned m = static_cast<unsigned>(elems.size());
  if (m > 255) throw BoundError("regular representation larger than 255 points");
  std::vector<Perm> gens;
  for (const Perm& g : N.generators()) {
    Perm gi = g.inverse();
    std::vector<std::uint8_t> img(m);
    for (unsigned i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(*N.element_index(elems[i] * gi));
    gens.push_back(Perm(std::move(img)));
  }
  return PermGroup::generate(m, gens);
}

}  // namespace hgk
