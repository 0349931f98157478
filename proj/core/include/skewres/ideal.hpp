#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skewres/groebner.hpp"

namespace skewres {

/// Ideal given by a generator list, with lazily computed reduced Groebner
/// bases cached per monomial order. Copies share the cache.
template <class K>
class Ideal {
 public:
  /// An empty list is the zero ideal. Generators are moved into `ring`.
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  bool is_zero_ideal() const;
  bool is_homogeneous() const;

  /// Reduced basis under the ring's own order.
  std::shared_ptr<const GroebnerBasis<K>> groebner_basis() const { return groebner_basis(ring_->order()); }
  std::shared_ptr<const GroebnerBasis<K>> groebner_basis(const MonomialOrder& order) const;

  bool contains(const Polynomial<K>& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;

  /// Coefficients a_i on generators() with f = sum a_i g_i, or nothing when f is not in the ideal.
  std::optional<std::vector<Polynomial<K>>> certificate(const Polynomial<K>& f) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis<K>>>> bases;
    std::shared_ptr<const SubmoduleBasis<K>> certified;
  };

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> generators_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b);

/// (I : f) by intersecting with <f> through an auxiliary variable t:
/// eliminate t from t*I + (1-t)*<f>, then divide exactly by f.
template <class K>
Ideal<K> colon(const Ideal<K>& ideal, const Polynomial<K>& f);

/// I intersected with the subring free of the variables in `mask`.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::uint64_t mask);

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b);

template <class K>
std::optional<std::vector<Polynomial<K>>> member_with_certificate(const Polynomial<K>& f, const Ideal<K>& ideal) {
  return ideal.certificate(f);
}

/// Krull dimension of R/I from the lead-term ideal: number of variables minus
/// the smallest set of variables meeting the support of every lead monomial.
/// Throws MathError for the unit ideal.
template <class K>
std::size_t dimension(const Ideal<K>& ideal);

template <class K>
std::size_t codimension(const Ideal<K>& ideal) {
  return ideal.ring()->num_variables() - dimension(ideal);
}

/// Smallest set of variables meeting every given support mask.
std::uint64_t minimum_hitting_set(std::vector<std::uint64_t> supports);

enum class RegularityCheck { codimension, paranoid };

struct RegularSequenceReport {
  bool regular = false;
  std::size_t length = 0;
  std::size_t codimension = 0;
  /// Paranoid mode: whether (f1..f(k-1) : fk) = (f1..f(k-1)) for k = 2..length.
  std::vector<bool> colon_checks;
};

/// Homogeneous f1..fm form a regular sequence iff codim <f1..fm> = m.
/// Throws MathError on zero or non-homogeneous input.
template <class K>
RegularSequenceReport is_regular_sequence(const std::vector<Polynomial<K>>& fs,
                                          RegularityCheck mode = RegularityCheck::codimension);

}  // namespace skewres
