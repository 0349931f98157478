#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skewres/ring.hpp"

namespace skewres {

template <class K>
struct Term {
  K coeff;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.mono == b.mono; }
};

/// Element of a polynomial ring: terms sorted strictly descending under the
/// ring order, no zero coefficients. The zero polynomial has no terms.
///
/// A default-constructed polynomial is a ring-less zero; it combines with any
/// polynomial and adopts that polynomial's ring.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<K> ring, const K& c);
  static Polynomial constant(RingPtr<K> ring, std::int64_t c) { auto k = ring->scalar(c); return constant(std::move(ring), k); }
  static Polynomial variable(RingPtr<K> ring, std::size_t index);
  static Polynomial term(RingPtr<K> ring, const K& c, const Monomial& m);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms);
  /// Trusts that `terms` already satisfies the canonical-form invariant.
  static Polynomial from_sorted_terms(RingPtr<K> ring, std::vector<Term<K>> terms);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  bool is_homogeneous() const;
  /// Largest total degree of a term; -1 for zero.
  int degree() const;

  /// Maximal term under the ring order. Throws MathError on zero.
  const Term<K>& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const K& leading_coefficient() const { return leading_term().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times(b); }
  Polynomial times(const Polynomial& o) const;

  Polynomial scaled(const K& c) const;
  Polynomial mul_term(const K& c, const Monomial& m) const;
  /// Scaled so the leading coefficient is 1.
  Polynomial monic() const;

  /// this - c*m*g, the basic reduction step.
  Polynomial sub_mul(const K& c, const Monomial& m, const Polynomial& g) const;

  /// Same polynomial re-expressed in `target` (matching variables by name).
  Polynomial in_ring(const RingPtr<K>& target) const;

  /// Value under a variable assignment (one value per variable).
  K evaluate(const std::vector<K>& point) const;

  std::string to_string() const;
  static Polynomial parse(const RingPtr<K>& ring, std::string_view text);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  const RingPtr<K>& common_ring(const Polynomial& o) const;

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Throws RingMismatch unless both polynomials may be combined.
template <class K>
void check_same_ring(const Polynomial<K>& a, const Polynomial<K>& b);

template <class K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

/// Multivariate division. Always reduces by the first divisor whose leading
/// term divides the current leading monomial, so results are deterministic.
/// Guarantees f = sum q_i d_i + r with no monomial of r divisible by any Lt(d_i).
template <class K>
DivisionResult<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors);

/// S(f, g) = (lcm/Lt(f)) f - (lcm/Lt(g)) g.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

/// Exact quotient f / g; throws MathError when g does not divide f.
template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& f, const Polynomial<K>& g);

/// Text form of a coefficient as used by the polynomial printer.
template <class K>
std::string scalar_to_string(const K& c);

/// Factors in the registry's display order, e.g. "x12*y2^2"; "1" for the unit monomial.
std::string monomial_to_string(const Monomial& m, const VariableRegistry& vars);

}  // namespace skewres
