#include "skewres/ideal.hpp"

#include <algorithm>
#include <bit>

namespace skewres {

template <class K>
Ideal<K>::Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw MathError("ideal needs a ring");
  generators_.reserve(generators.size());
  for (const auto& g : generators) generators_.push_back(g.in_ring(ring_));
}

template <class K>
bool Ideal<K>::is_zero_ideal() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_zero(); });
}

template <class K>
bool Ideal<K>::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_homogeneous(); });
}

template <class K>
std::shared_ptr<const GroebnerBasis<K>> Ideal<K>::groebner_basis(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mu);
  for (const auto& [o, b] : cache_->bases) {
    if (o == order) return b;
  }
  auto target = ring_->order() == order ? ring_ : ring_->with_order(order);
  auto b = std::make_shared<const GroebnerBasis<K>>(buchberger(target, generators_));
  cache_->bases.emplace_back(order, b);
  return b;
}

template <class K>
bool Ideal<K>::contains(const Polynomial<K>& f) const {
  return groebner_basis()->contains(f.in_ring(ring_));
}

template <class K>
bool Ideal<K>::contains(const Ideal& other) const {
  if (!ring_->same_registry(*other.ring_)) throw RingMismatch("ideals live in different rings");
  auto gb = groebner_basis();
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const auto& g) { return gb->contains(g.in_ring(ring_)); });
}

template <class K>
bool Ideal<K>::is_unit() const {
  return groebner_basis()->is_unit();
}

template <class K>
std::optional<std::vector<Polynomial<K>>> Ideal<K>::certificate(const Polynomial<K>& f) const {
  std::shared_ptr<const SubmoduleBasis<K>> basis;
  {
    std::lock_guard lock(cache_->mu);
    if (!cache_->certified) {
      std::vector<ModuleElement<K>> gens;
      for (const auto& g : generators_) gens.push_back({g});
      cache_->certified = std::make_shared<const SubmoduleBasis<K>>(ring_, 1, std::move(gens), true);
    }
    basis = cache_->certified;
  }
  return basis->certificate({f.in_ring(ring_)});
}

template <class K>
std::string Ideal<K>::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ">";
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ring()->same_registry(*b.ring()) || !(a.ring()->field() == b.ring()->field())) {
    throw RingMismatch("ideal sum of ideals in different rings");
  }
  auto gens = a.generators();
  for (const auto& g : b.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  return Ideal<K>(a.ring(), std::move(gens));
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::uint64_t mask) {
  if (mask == 0) return ideal;
  auto gb = ideal.groebner_basis(MonomialOrder::block_elimination(mask));
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gb->elements()) {
    if (g.leading_monomial().degree_in(mask) == 0) kept.push_back(g.in_ring(ideal.ring()));
  }
  return Ideal<K>(ideal.ring(), std::move(kept));
}

template <class K>
Ideal<K> colon(const Ideal<K>& ideal, const Polynomial<K>& f) {
  const auto& ring = ideal.ring();
  if (f.is_zero()) throw MathError("colon by the zero polynomial");
  Polynomial<K> fr = f.in_ring(ring);
  if (ideal.is_zero_ideal()) return Ideal<K>(ring, {});
  if (fr.is_unit()) return ideal;

  auto vars = ring->variables().with_variable(ring->variables().fresh_name("t"));
  std::size_t t_index = vars.size() - 1;
  std::uint64_t t_mask = std::uint64_t{1} << t_index;
  auto ext = Ring<K>::make(std::move(vars), MonomialOrder::block_elimination(t_mask), ring->field());
  auto t = Polynomial<K>::variable(ext, t_index);
  auto one = Polynomial<K>::constant(ext, 1);

  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) gens.push_back(t * g.in_ring(ext));
  }
  gens.push_back((one - t) * fr.in_ring(ext));
  auto gb = buchberger(ext, gens);

  std::vector<Polynomial<K>> quotients;
  for (const auto& h : gb.elements()) {
    // Under the elimination order a t-free lead means a t-free element.
    if (h.leading_monomial().degree_in(t_mask) != 0) continue;
    quotients.push_back(exact_quotient(h.in_ring(ring), fr).monic());
  }
  return Ideal<K>(ring, std::move(quotients));
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  return a.contains(b) && b.contains(a);
}

namespace {

std::size_t hitting_search(const std::vector<std::uint64_t>& sets, std::uint64_t chosen, std::size_t size,
                           std::size_t best, std::uint64_t& best_set) {
  if (size >= best) return best;
  const std::uint64_t* open = nullptr;
  int open_bits = 65;
  for (const auto& s : sets) {
    if (s & chosen) continue;
    int bits = std::popcount(s);
    if (bits < open_bits) {
      open = &s;
      open_bits = bits;
    }
  }
  if (!open) {
    best_set = chosen;
    return size;
  }
  if (size + 1 >= best) return best;
  std::uint64_t rest = *open;
  while (rest) {
    std::uint64_t bit = rest & (~rest + 1);
    rest &= rest - 1;
    best = hitting_search(sets, chosen | bit, size + 1, best, best_set);
  }
  return best;
}

}  // namespace

std::uint64_t minimum_hitting_set(std::vector<std::uint64_t> supports) {
  for (auto s : supports) {
    if (s == 0) throw MathError("an empty support cannot be hit");
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  // Drop supersets: hitting a subset hits the superset.
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool redundant = false;
    for (auto o : supports) {
      if (o != s && (o & s) == o) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(s);
  }
  std::uint64_t best_set = 0;
  hitting_search(minimal, 0, 0, 65, best_set);
  return best_set;
}

template <class K>
std::size_t dimension(const Ideal<K>& ideal) {
  std::size_t nvars = ideal.ring()->num_variables();
  if (ideal.is_zero_ideal()) return nvars;
  auto gb = ideal.groebner_basis();
  if (gb->is_unit()) throw MathError("dimension of the unit ideal is undefined");
  std::vector<std::uint64_t> supports;
  for (const auto& m : gb->leading_monomials()) supports.push_back(m.support());
  return nvars - static_cast<std::size_t>(std::popcount(minimum_hitting_set(std::move(supports))));
}

template <class K>
RegularSequenceReport is_regular_sequence(const std::vector<Polynomial<K>>& fs, RegularityCheck mode) {
  RegularSequenceReport report;
  report.length = fs.size();
  if (fs.empty()) {
    report.regular = true;
    return report;
  }
  RingPtr<K> ring = fs.front().ring();
  for (const auto& f : fs) {
    if (f.is_zero()) throw MathError("regular sequence check on a zero element");
    if (!f.is_homogeneous()) throw MathError("regular sequence check needs homogeneous input");
  }
  Ideal<K> all(ring, fs);
  report.codimension = all.is_unit() ? ring->num_variables() + 1 : codimension(all);
  report.regular = report.codimension == fs.size();
  if (mode == RegularityCheck::paranoid) {
    for (std::size_t k = 1; k < fs.size(); ++k) {
      Ideal<K> prefix(ring, std::vector<Polynomial<K>>(fs.begin(), fs.begin() + k));
      bool ok = ideal_equal(colon(prefix, fs[k]), prefix);
      report.colon_checks.push_back(ok);
      if (!ok) report.regular = false;
    }
  }
  return report;
}

#define SKEWRES_INSTANTIATE(K)                                                     \
  template class Ideal<K>;                                                         \
  template Ideal<K> ideal_sum(const Ideal<K>&, const Ideal<K>&);                   \
  template Ideal<K> colon(const Ideal<K>&, const Polynomial<K>&);                  \
  template Ideal<K> eliminate(const Ideal<K>&, std::uint64_t);                     \
  template bool ideal_equal(const Ideal<K>&, const Ideal<K>&);                     \
  template std::size_t dimension(const Ideal<K>&);                                 \
  template RegularSequenceReport is_regular_sequence(const std::vector<Polynomial<K>>&, RegularityCheck);

SKEWRES_INSTANTIATE(Rational)
SKEWRES_INSTANTIATE(ModP)

}  // namespace skewres
