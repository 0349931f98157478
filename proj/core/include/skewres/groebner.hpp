#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewres/matrix.hpp"

namespace skewres {

/// A term c * m * e_pos of a free module.
template <class K>
struct ModuleTerm {
  K coeff;
  Monomial mono;
  std::uint32_t pos;
};

/// Module element in flat form, terms sorted strictly descending under the
/// position-over-term order: lower positions first, ties broken by the ring's
/// monomial order. Under this order a vector is the concatenation of its
/// coordinate polynomials.
template <class K>
using ModuleVector = std::vector<ModuleTerm<K>>;

template <class K>
ModuleVector<K> to_module_vector(const ModuleElement<K>& v, std::uint32_t offset = 0);
template <class K>
ModuleElement<K> to_module_element(const RingPtr<K>& ring, const ModuleVector<K>& v, std::size_t rank,
                                   std::uint32_t offset = 0);

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Raw output of the module Buchberger engine.
template <class K>
struct ModuleGroebnerResult {
  /// Reduced basis (monic, leads pairwise non-divisible, tails fully reduced),
  /// sorted by increasing leading term.
  std::vector<ModuleVector<K>> basis;
  /// Inputs that did not reduce to zero when processed, in processing order.
  /// For homogeneous input these form a minimal generating set.
  std::vector<std::size_t> surviving_inputs;
  GroebnerStats stats;
};

/// Buchberger completion for a submodule of R^rank.
///
/// Pairs follow the normal strategy (smallest weighted lcm degree first,
/// weights being the position twists); inputs are queued at their own degree
/// after the pairs of that degree. Gebauer-Moeller chain criterion always, the
/// coprime-lead criterion only in rank 1 where it is valid.
template <class K>
ModuleGroebnerResult<K> module_groebner(const RingPtr<K>& ring, const std::vector<int>& twists,
                                        const std::vector<ModuleVector<K>>& inputs);

/// Complete reduction of `f` by `basis` (leads need not be reduced).
template <class K>
ModuleVector<K> module_normal_form(const Ring<K>& ring, ModuleVector<K> f, const std::vector<ModuleVector<K>>& basis);

/// Reduced Groebner basis of an ideal.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> elements, std::vector<Polynomial<K>> inputs,
                GroebnerStats stats = {});

  const RingPtr<K>& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial<K>>& elements() const { return elements_; }
  /// The generators this basis was computed from.
  const std::vector<Polynomial<K>>& input_generators() const { return inputs_; }
  std::size_t size() const { return elements_.size(); }
  bool is_reduced() const { return true; }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_unit(); }
  const GroebnerStats& stats() const { return stats_; }

  std::vector<Monomial> leading_monomials() const;

  /// Unique remainder; throws RingMismatch when `f` is in a ring with another order.
  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> elements_;
  std::vector<Polynomial<K>> inputs_;
  std::vector<ModuleVector<K>> flat_;
  GroebnerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
/// Generators are moved into a ring with that order. Empty input gives an
/// empty basis (the zero ideal).
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens, const MonomialOrder& order);

template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens);

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  return gb.normal_form(f);
}

/// Groebner basis of the submodule of a graded free module generated by a
/// list of vectors, optionally extended with the representation of every
/// basis element in terms of the generators.
///
/// With certificates the computation runs on the augmented vectors
/// (g_j, e_j) in R^(rank + #gens); basis elements whose lead falls in the
/// appended block are relations among the generators.
template <class K>
class SubmoduleBasis {
 public:
  /// `twists` are the degrees of the ambient basis vectors; `generator_degrees`
  /// (needed only with certificates) those of the generators. Empty twists mean all zero.
  SubmoduleBasis(RingPtr<K> ring, std::size_t rank, std::vector<ModuleElement<K>> generators, bool with_certificates,
                 std::vector<int> twists = {}, std::vector<int> generator_degrees = {});

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<ModuleElement<K>>& generators() const { return generators_; }

  /// Reduced Groebner basis of the submodule, as coordinate vectors.
  std::vector<ModuleElement<K>> basis() const;
  ModuleElement<K> normal_form(const ModuleElement<K>& v) const;
  bool contains(const ModuleElement<K>& v) const;

  /// Coefficients a_j with v = sum a_j generators_j, or nothing when v is not
  /// in the submodule. Requires certificates.
  std::optional<std::vector<Polynomial<K>>> certificate(const ModuleElement<K>& v) const;

  /// Groebner basis of the module of relations among the generators
  /// (vectors of length #generators). Requires certificates.
  std::vector<ModuleElement<K>> relations() const;

  const GroebnerStats& stats() const { return stats_; }

 private:
  RingPtr<K> ring_;
  std::size_t rank_;
  bool certified_;
  std::vector<ModuleElement<K>> generators_;
  std::vector<ModuleVector<K>> image_basis_;
  std::vector<ModuleVector<K>> relation_basis_;
  GroebnerStats stats_;
};

/// Basis of the submodule generated by `gens` in R^rank (position-over-term).
template <class K>
std::vector<ModuleElement<K>> module_buchberger(const RingPtr<K>& ring, std::size_t rank,
                                                const std::vector<ModuleElement<K>>& gens);

/// Subset of `gens` that minimally generates their span. Input must be
/// homogeneous with respect to `twists`; result keeps the inputs' relative
/// order within each degree and sorts by degree.
template <class K>
std::vector<std::size_t> minimal_generator_indices(const RingPtr<K>& ring, std::size_t rank,
                                                   const std::vector<ModuleElement<K>>& gens,
                                                   const std::vector<int>& twists);

/// Kernel of a polynomial matrix together with the degrees of its columns.
template <class K>
struct Kernel {
  PolyMatrix<K> generators;
  std::vector<int> degrees;
};

/// Generators of ker(M) in R^cols(M). `row_degrees`/`col_degrees` make the
/// map graded; when they are given, M is homogeneous and `minimal` is set the
/// generators are minimal, otherwise they form a Groebner basis of the kernel.
template <class K>
Kernel<K> syzygies(const PolyMatrix<K>& m, std::vector<int> row_degrees = {}, std::vector<int> col_degrees = {},
                   bool minimal = true);

/// Degree of column `c` of a graded map, inferred from its first nonzero entry;
/// `fallback` for zero columns.
template <class K>
int column_degree(const PolyMatrix<K>& m, std::size_t c, const std::vector<int>& row_degrees, int fallback = 0);

}  // namespace skewres
