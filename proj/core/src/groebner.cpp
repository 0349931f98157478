#include "skewres/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "skewres/budget.hpp"

namespace skewres {

namespace {

template <class K>
std::strong_ordering compare_terms(const Ring<K>& ring, const ModuleTerm<K>& a, const ModuleTerm<K>& b) {
  if (a.pos != b.pos) return b.pos <=> a.pos;
  return ring.compare(a.mono, b.mono);
}

// a[from..] - c * m * b, merged in module order.
template <class K>
ModuleVector<K> sub_mul(const Ring<K>& ring, const ModuleVector<K>& a, std::size_t from, const K& c,
                        const Monomial& m, const ModuleVector<K>& b) {
  ModuleVector<K> out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  ModuleTerm<K> cur;
  auto fetch = [&]() {
    if (j < b.size()) {
      cur.mono = b[j].mono * m;
      cur.pos = b[j].pos;
      return true;
    }
    return false;
  };
  bool have = fetch();
  while (i < a.size() && have) {
    auto cmp = compare_terms(ring, a[i], cur);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      cur.coeff = -(c * b[j].coeff);
      out.push_back(cur);
      ++j;
      have = fetch();
    } else {
      K v = a[i].coeff - c * b[j].coeff;
      if (!v.is_zero()) {
        cur.coeff = std::move(v);
        out.push_back(cur);
      }
      ++i;
      ++j;
      have = fetch();
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (have) {
    cur.coeff = -(c * b[j].coeff);
    out.push_back(cur);
    ++j;
    have = fetch();
  }
  return out;
}

template <class K>
void make_monic(ModuleVector<K>& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  K inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
}

template <class K>
int weighted_degree(const ModuleVector<K>& v, const std::vector<int>& twists) {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : v) {
    int tw = t.pos < twists.size() ? twists[t.pos] : 0;
    d = std::max(d, static_cast<int>(t.mono.degree()) + tw);
  }
  return d;
}

// Index of reducers grouped by lead position.
template <class K>
class ReducerIndex {
 public:
  void add(const ModuleVector<K>* v) {
    std::uint32_t p = v->front().pos;
    if (p >= by_pos_.size()) by_pos_.resize(p + 1);
    by_pos_[p].push_back(v);
  }
  void clear() { by_pos_.clear(); }
  const ModuleVector<K>* find(const ModuleTerm<K>& t) const {
    if (t.pos >= by_pos_.size()) return nullptr;
    for (const auto* g : by_pos_[t.pos]) {
      if (g->front().mono.divides(t.mono)) return g;
    }
    return nullptr;
  }

 private:
  std::vector<std::vector<const ModuleVector<K>*>> by_pos_;
};

template <class K>
ModuleVector<K> reduce_full(const Ring<K>& ring, ModuleVector<K> f, const ReducerIndex<K>& index,
                            const Deadline* deadline = nullptr) {
  ModuleVector<K> out;
  std::size_t start = 0;
  std::size_t steps = 0;
  while (start < f.size()) {
    const auto& lt = f[start];
    const auto* g = index.find(lt);
    if (!g) {
      out.push_back(lt);
      ++start;
      continue;
    }
    K c = lt.coeff / g->front().coeff;
    Monomial m = lt.mono / g->front().mono;
    f = sub_mul(ring, f, start, c, m, *g);
    start = 0;
    if (deadline && (++steps & 63) == 0) deadline->check("reduction");
  }
  return out;
}

// Reduces the leading term until it is irreducible or the vector vanishes.
template <class K>
ModuleVector<K> reduce_top(const Ring<K>& ring, ModuleVector<K> f, const ReducerIndex<K>& index,
                           std::uint32_t stop_pos = std::numeric_limits<std::uint32_t>::max()) {
  while (!f.empty() && f.front().pos < stop_pos) {
    const auto* g = index.find(f.front());
    if (!g) break;
    K c = f.front().coeff / g->front().coeff;
    Monomial m = f.front().mono / g->front().mono;
    f = sub_mul(ring, f, 0, c, m, *g);
  }
  return f;
}

template <class K>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const Ring<K>& ring, const std::vector<int>& twists, bool coprime_criterion)
      : ring_(ring), twists_(twists), coprime_ok_(coprime_criterion), deadline_(Deadline::from_budget()) {}

  ModuleGroebnerResult<K> run(const std::vector<ModuleVector<K>>& inputs) {
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (inputs[k].empty()) continue;
      Item it;
      it.input = k;
      it.degree = weighted_degree(inputs[k], twists_);
      it.pos = inputs[k].front().pos;
      it.lcm = inputs[k].front().mono;
      queue_.push_back(std::move(it));
    }
    ModuleGroebnerResult<K> result;
    while (!queue_.empty()) {
      deadline_.check("Groebner basis computation");
      std::size_t best = select();
      Item it = std::move(queue_[best]);
      queue_[best] = std::move(queue_.back());
      queue_.pop_back();
      ++result.stats.pairs_considered;

      ModuleVector<K> h;
      if (it.input != kNone) {
        h = inputs[it.input];
      } else {
        h = spair(it.i, it.j);
      }
      ++result.stats.pairs_reduced;
      h = reduce_top(ring_, std::move(h), active_index_);
      if (h.empty()) {
        ++result.stats.zero_reductions;
        continue;
      }
      if (it.input != kNone) result.surviving_inputs.push_back(it.input);
      make_monic(h);
      insert(std::move(h));
    }
    result.basis = finish();
    return result;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Item {
    std::size_t i = kNone, j = kNone;  // pair (i, j) with i < j
    std::size_t input = kNone;         // or an input generator
    Monomial lcm;
    std::uint32_t pos = 0;
    int degree = 0;
  };

  int twist(std::uint32_t pos) const { return pos < twists_.size() ? twists_[pos] : 0; }

  // Normal strategy: degree, then pairs before inputs, then smaller lcm,
  // then creation order.
  bool before(const Item& a, const Item& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    bool ai = a.input != kNone, bi = b.input != kNone;
    if (ai != bi) return !ai;
    if (ai) return a.input < b.input;
    if (a.pos != b.pos) return a.pos > b.pos;
    auto c = ring_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k) {
      if (before(queue_[k], queue_[best])) best = k;
    }
    return best;
  }

  ModuleVector<K> spair(std::size_t i, std::size_t j) const {
    const auto& f = elems_[i];
    const auto& g = elems_[j];
    Monomial l = lcm(f.front().mono, g.front().mono);
    // Both are monic.
    ModuleVector<K> a;
    a.reserve(f.size());
    Monomial mf = l / f.front().mono;
    for (const auto& t : f) a.push_back({t.coeff, t.mono * mf, t.pos});
    return sub_mul(ring_, a, 0, ring_.scalar(1), l / g.front().mono, g);
  }

  void insert(ModuleVector<K> h) {
    std::size_t hi = elems_.size();
    elems_.push_back(std::move(h));
    active_.push_back(false);
    const auto& lh = elems_[hi].front();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g] || elems_[g].front().pos != lh.pos) continue;
      const auto& lg = elems_[g].front().mono;
      cands.push_back({g, lcm(lg, lh.mono), coprime_ok_ && coprime(lg, lh.mono), false});
    }
    // Chain criterion among the new pairs.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool kill = false;
      if (!cands[a].coprime) {
        for (std::size_t b = a + 1; b < cands.size() && !kill; ++b) {
          if (cands[b].lcm.divides(cands[a].lcm)) kill = true;
        }
        for (std::size_t b = 0; b < a && !kill; ++b) {
          if (cands[b].keep && cands[b].lcm.divides(cands[a].lcm)) kill = true;
        }
      }
      cands[a].keep = !kill;
    }
    // Prune old pairs whose lcm is a proper multiple through h.
    std::erase_if(queue_, [&](const Item& it) {
      if (it.input != kNone || it.pos != lh.pos || !lh.mono.divides(it.lcm)) return false;
      Monomial l1 = lcm(elems_[it.i].front().mono, lh.mono);
      Monomial l2 = lcm(elems_[it.j].front().mono, lh.mono);
      return !(l1 == it.lcm) && !(l2 == it.lcm);
    });
    for (const auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      Item it;
      it.i = c.g;
      it.j = hi;
      it.lcm = c.lcm;
      it.pos = lh.pos;
      it.degree = static_cast<int>(c.lcm.degree()) + twist(lh.pos);
      queue_.push_back(std::move(it));
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && elems_[g].front().pos == lh.pos && lh.mono.divides(elems_[g].front().mono)) active_[g] = false;
    }
    active_[hi] = true;
    rebuild_index();
  }

  void rebuild_index() {
    active_index_.clear();
    for (std::size_t g = 0; g < elems_.size(); ++g) {
      if (active_[g]) active_index_.add(&elems_[g]);
    }
  }

  std::vector<ModuleVector<K>> finish() {
    std::vector<std::size_t> keep;
    for (std::size_t g = 0; g < elems_.size(); ++g) {
      if (active_[g]) keep.push_back(g);
    }
    std::vector<ModuleVector<K>> out;
    out.reserve(keep.size());
    for (std::size_t g : keep) {
      ModuleVector<K> tail(elems_[g].begin() + 1, elems_[g].end());
      ModuleVector<K> reduced{elems_[g].front()};
      auto rest = reduce_full(ring_, std::move(tail), active_index_, &deadline_);
      reduced.insert(reduced.end(), rest.begin(), rest.end());
      out.push_back(std::move(reduced));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleVector<K>& a, const ModuleVector<K>& b) {
      return compare_terms(ring_, a.front(), b.front()) < 0;
    });
    return out;
  }

  const Ring<K>& ring_;
  const std::vector<int>& twists_;
  bool coprime_ok_;
  Deadline deadline_;
  std::vector<ModuleVector<K>> elems_;
  std::vector<bool> active_;
  std::vector<Item> queue_;
  ReducerIndex<K> active_index_;
};

template <class K>
ModuleVector<K> sorted_vector(const Ring<K>& ring, ModuleVector<K> v) {
  std::sort(v.begin(), v.end(), [&](const ModuleTerm<K>& a, const ModuleTerm<K>& b) {
    return compare_terms(ring, a, b) > 0;
  });
  return v;
}

}  // namespace

template <class K>
ModuleVector<K> to_module_vector(const ModuleElement<K>& v, std::uint32_t offset) {
  ModuleVector<K> out;
  for (std::size_t p = 0; p < v.size(); ++p) {
    for (const auto& t : v[p].terms()) out.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(p) + offset});
  }
  return out;
}

template <class K>
ModuleElement<K> to_module_element(const RingPtr<K>& ring, const ModuleVector<K>& v, std::size_t rank,
                                   std::uint32_t offset) {
  std::vector<std::vector<Term<K>>> parts(rank);
  for (const auto& t : v) {
    if (t.pos < offset || t.pos - offset >= rank) throw MathError("module term outside the requested block");
    parts[t.pos - offset].push_back({t.coeff, t.mono});
  }
  ModuleElement<K> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial<K>::from_sorted_terms(ring, std::move(p)));
  return out;
}

template <class K>
ModuleGroebnerResult<K> module_groebner(const RingPtr<K>& ring, const std::vector<int>& twists,
                                        const std::vector<ModuleVector<K>>& inputs) {
  std::uint32_t max_pos = 0;
  for (const auto& v : inputs) {
    for (const auto& t : v) max_pos = std::max(max_pos, t.pos);
  }
  bool rank_one = max_pos == 0;
  BuchbergerEngine<K> engine(*ring, twists, rank_one);
  return engine.run(inputs);
}

template <class K>
ModuleVector<K> module_normal_form(const Ring<K>& ring, ModuleVector<K> f, const std::vector<ModuleVector<K>>& basis) {
  ReducerIndex<K> index;
  for (const auto& g : basis) {
    if (!g.empty()) index.add(&g);
  }
  return reduce_full(ring, std::move(f), index);
}

// ---------------------------------------------------------------------------
// GroebnerBasis

template <class K>
GroebnerBasis<K>::GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> elements,
                                std::vector<Polynomial<K>> inputs, GroebnerStats stats)
    : ring_(std::move(ring)), elements_(std::move(elements)), inputs_(std::move(inputs)), stats_(stats) {
  for (const auto& e : elements_) flat_.push_back(to_module_vector<K>({e}));
}

template <class K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elements_) out.push_back(e.leading_monomial());
  return out;
}

template <class K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& f) const {
  if (f.ring() && !f.ring()->same_as(*ring_)) throw RingMismatch("normal form: polynomial order differs from basis order");
  auto r = module_normal_form(*ring_, to_module_vector<K>({f}), flat_);
  return to_module_element(ring_, r, 1)[0];
}

template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens) {
  std::vector<ModuleVector<K>> inputs;
  std::vector<Polynomial<K>> moved;
  for (const auto& g : gens) {
    moved.push_back(g.in_ring(ring));
    if (!moved.back().is_zero()) inputs.push_back(to_module_vector<K>({moved.back()}));
  }
  auto res = module_groebner(ring, {0}, inputs);
  std::vector<Polynomial<K>> elements;
  for (const auto& v : res.basis) elements.push_back(to_module_element(ring, v, 1)[0]);
  return GroebnerBasis<K>(ring, std::move(elements), std::move(moved), res.stats);
}

template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const MonomialOrder& order) {
  RingPtr<K> base;
  for (const auto& g : gens) {
    if (g.ring()) {
      base = g.ring();
      break;
    }
  }
  if (!base) throw MathError("buchberger: cannot infer the ring of an all-zero generator list");
  return buchberger(base->with_order(order), gens);
}

// ---------------------------------------------------------------------------
// SubmoduleBasis

template <class K>
SubmoduleBasis<K>::SubmoduleBasis(RingPtr<K> ring, std::size_t rank, std::vector<ModuleElement<K>> generators,
                                  bool with_certificates, std::vector<int> twists, std::vector<int> generator_degrees)
    : ring_(std::move(ring)), rank_(rank), certified_(with_certificates), generators_(std::move(generators)) {
  if (twists.empty()) twists.assign(rank_, 0);
  if (twists.size() != rank_) throw MathError("twist count differs from module rank");
  for (auto& g : generators_) {
    if (g.size() != rank_) throw MathError("generator has wrong rank");
    for (auto& c : g) c = c.in_ring(ring_);
  }
  std::vector<ModuleVector<K>> inputs;
  inputs.reserve(generators_.size());
  if (certified_) {
    if (generator_degrees.empty()) {
      for (const auto& g : generators_) {
        int d = 0;
        for (std::size_t p = 0; p < rank_; ++p) {
          if (!g[p].is_zero()) {
            d = g[p].degree() + twists[p];
            break;
          }
        }
        generator_degrees.push_back(d);
      }
    }
    auto all_twists = twists;
    all_twists.insert(all_twists.end(), generator_degrees.begin(), generator_degrees.end());
    K one = ring_->scalar(1);
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      auto v = to_module_vector(generators_[j]);
      v.push_back({one, Monomial(), static_cast<std::uint32_t>(rank_ + j)});
      inputs.push_back(std::move(v));
    }
    auto res = module_groebner(ring_, all_twists, inputs);
    stats_ = res.stats;
    for (auto& b : res.basis) {
      if (b.front().pos < rank_) image_basis_.push_back(std::move(b));
      else relation_basis_.push_back(std::move(b));
    }
  } else {
    for (const auto& g : generators_) {
      auto v = to_module_vector(g);
      if (!v.empty()) inputs.push_back(std::move(v));
    }
    auto res = module_groebner(ring_, twists, inputs);
    stats_ = res.stats;
    image_basis_ = std::move(res.basis);
  }
}

template <class K>
std::vector<ModuleElement<K>> SubmoduleBasis<K>::basis() const {
  std::vector<ModuleElement<K>> out;
  for (const auto& b : image_basis_) {
    ModuleVector<K> head;
    for (const auto& t : b) {
      if (t.pos < rank_) head.push_back(t);
    }
    out.push_back(to_module_element(ring_, head, rank_));
  }
  return out;
}

template <class K>
ModuleElement<K> SubmoduleBasis<K>::normal_form(const ModuleElement<K>& v) const {
  if (v.size() != rank_) throw MathError("vector has wrong rank");
  ModuleElement<K> moved;
  for (const auto& c : v) moved.push_back(c.in_ring(ring_));
  // Reduce only the ambient block: relation parts of the basis are ignored.
  ReducerIndex<K> index;
  std::vector<ModuleVector<K>> heads;
  heads.reserve(image_basis_.size());
  for (const auto& b : image_basis_) {
    ModuleVector<K> head;
    for (const auto& t : b) {
      if (t.pos < rank_) head.push_back(t);
    }
    heads.push_back(std::move(head));
  }
  for (const auto& h : heads) index.add(&h);
  auto r = reduce_full(*ring_, to_module_vector(moved), index);
  return to_module_element(ring_, r, rank_);
}

template <class K>
bool SubmoduleBasis<K>::contains(const ModuleElement<K>& v) const {
  for (const auto& c : normal_form(v)) {
    if (!c.is_zero()) return false;
  }
  return true;
}

template <class K>
std::optional<std::vector<Polynomial<K>>> SubmoduleBasis<K>::certificate(const ModuleElement<K>& v) const {
  if (!certified_) throw MathError("certificates were not requested for this basis");
  if (v.size() != rank_) throw MathError("vector has wrong rank");
  ModuleElement<K> moved;
  for (const auto& c : v) moved.push_back(c.in_ring(ring_));
  ReducerIndex<K> index;
  for (const auto& b : image_basis_) index.add(&b);
  auto r = reduce_top(*ring_, to_module_vector(moved), index, static_cast<std::uint32_t>(rank_));
  if (!r.empty() && r.front().pos < rank_) return std::nullopt;
  // v - sum q_k (h_k, a_k) = (0, -sum q_k a_k), so the certificate is -tail.
  for (auto& t : r) t.coeff = -t.coeff;
  return to_module_element(ring_, r, generators_.size(), static_cast<std::uint32_t>(rank_));
}

template <class K>
std::vector<ModuleElement<K>> SubmoduleBasis<K>::relations() const {
  if (!certified_) throw MathError("relations need a certified basis");
  std::vector<ModuleElement<K>> out;
  for (const auto& b : relation_basis_) {
    out.push_back(to_module_element(ring_, b, generators_.size(), static_cast<std::uint32_t>(rank_)));
  }
  return out;
}

template <class K>
std::vector<ModuleElement<K>> module_buchberger(const RingPtr<K>& ring, std::size_t rank,
                                                const std::vector<ModuleElement<K>>& gens) {
  return SubmoduleBasis<K>(ring, rank, gens, false).basis();
}

template <class K>
std::vector<std::size_t> minimal_generator_indices(const RingPtr<K>& ring, std::size_t rank,
                                                   const std::vector<ModuleElement<K>>& gens,
                                                   const std::vector<int>& twists) {
  std::vector<ModuleVector<K>> inputs;
  for (const auto& g : gens) {
    if (g.size() != rank) throw MathError("generator has wrong rank");
    ModuleElement<K> moved;
    for (const auto& c : g) moved.push_back(c.in_ring(ring));
    inputs.push_back(to_module_vector(moved));
  }
  auto res = module_groebner(ring, twists.empty() ? std::vector<int>(rank, 0) : twists, inputs);
  return res.surviving_inputs;
}

template <class K>
int column_degree(const PolyMatrix<K>& m, std::size_t c, const std::vector<int>& row_degrees, int fallback) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!m(r, c).is_zero()) return m(r, c).degree() + (row_degrees.empty() ? 0 : row_degrees[r]);
  }
  return fallback;
}

template <class K>
Kernel<K> syzygies(const PolyMatrix<K>& m, std::vector<int> row_degrees, std::vector<int> col_degrees, bool minimal) {
  const auto& ring = m.ring();
  bool graded = !col_degrees.empty() || !row_degrees.empty();
  if (row_degrees.empty()) row_degrees.assign(m.rows(), 0);
  if (col_degrees.empty()) {
    for (std::size_t c = 0; c < m.cols(); ++c) col_degrees.push_back(column_degree(m, c, row_degrees));
  }
  bool homogeneous = true;
  for (std::size_t r = 0; r < m.rows() && homogeneous; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() + row_degrees[r] != col_degrees[c]) {
        homogeneous = false;
        break;
      }
    }
  }
  Kernel<K> out;
  if (m.cols() == 0) {
    out.generators = PolyMatrix<K>(ring, 0, 0);
    return out;
  }
  SubmoduleBasis<K> basis(ring, m.rows(), m.columns(), true, row_degrees, col_degrees);
  auto rel = basis.relations();
  std::vector<int> rel_degrees;
  for (const auto& r : rel) {
    int d = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!r[j].is_zero()) {
        d = r[j].degree() + col_degrees[j];
        break;
      }
    }
    rel_degrees.push_back(d);
  }
  std::vector<std::size_t> order(rel.size());
  std::iota(order.begin(), order.end(), 0);
  if (minimal && homogeneous && graded && !rel.empty()) {
    order = minimal_generator_indices(ring, m.cols(), rel, col_degrees);
  }
  std::vector<ModuleElement<K>> cols;
  for (std::size_t k : order) {
    cols.push_back(rel[k]);
    out.degrees.push_back(rel_degrees[k]);
  }
  out.generators = PolyMatrix<K>::from_columns(ring, m.cols(), cols);
  return out;
}

#define SKEWRES_INSTANTIATE(K)                                                                                    \
  template ModuleVector<K> to_module_vector(const ModuleElement<K>&, std::uint32_t);                               \
  template ModuleElement<K> to_module_element(const RingPtr<K>&, const ModuleVector<K>&, std::size_t, std::uint32_t); \
  template ModuleGroebnerResult<K> module_groebner(const RingPtr<K>&, const std::vector<int>&,                      \
                                                   const std::vector<ModuleVector<K>>&);                          \
  template ModuleVector<K> module_normal_form(const Ring<K>&, ModuleVector<K>, const std::vector<ModuleVector<K>>&); \
  template class GroebnerBasis<K>;                                                                                \
  template GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>&, const MonomialOrder&);                  \
  template GroebnerBasis<K> buchberger(const RingPtr<K>&, const std::vector<Polynomial<K>>&);                     \
  template class SubmoduleBasis<K>;                                                                               \
  template std::vector<ModuleElement<K>> module_buchberger(const RingPtr<K>&, std::size_t,                        \
                                                           const std::vector<ModuleElement<K>>&);                 \
  template std::vector<std::size_t> minimal_generator_indices(const RingPtr<K>&, std::size_t,                     \
                                                              const std::vector<ModuleElement<K>>&,               \
                                                              const std::vector<int>&);                           \
  template int column_degree(const PolyMatrix<K>&, std::size_t, const std::vector<int>&, int);                    \
  template Kernel<K> syzygies(const PolyMatrix<K>&, std::vector<int>, std::vector<int>, bool);

SKEWRES_INSTANTIATE(Rational)
SKEWRES_INSTANTIATE(ModP)

}  // namespace skewres
