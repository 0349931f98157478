#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewres/ideal.hpp"

namespace skewres {

/// Variables of the n-system: y1..yn followed by x_ij (i < j) in
/// lexicographic order of (i, j). Variable 0 (y1) is the largest.
class SkewSystem {
 public:
  static constexpr int kMaxN = 10;

  explicit SkewSystem(int n);

  int n() const { return n_; }
  const std::shared_ptr<const VariableRegistry>& registry() const { return registry_; }
  std::size_t y_index(int j) const;
  std::size_t x_index(int i, int j) const;

  /// "x12" below n = 10, "x_1_12" style from there on.
  static std::string x_name(int i, int j, int n);

 private:
  int n_;
  std::shared_ptr<const VariableRegistry> registry_;
};

/// Pfaffian of a skew-symmetric matrix by expansion along the first row,
/// with Pf([[0, a], [-a, 0]]) = a. Zero for odd size, 1 for size 0.
template <class K>
Polynomial<K> pfaffian(const PolyMatrix<K>& skew);

/// The system's polynomials over a chosen field and monomial order.
template <class K>
class SkewModel {
 public:
  explicit SkewModel(int n, FieldSpec field = default_field(), MonomialOrder order = MonomialOrder::lex());

  static FieldSpec default_field();

  int n() const { return system_.n(); }
  const SkewSystem& system() const { return system_; }
  const RingPtr<K>& ring() const { return ring_; }

  Polynomial<K> y(int j) const;
  /// Entry (i, j) of X: x_ij above the diagonal, -x_ji below, 0 on it.
  Polynomial<K> x(int i, int j) const;
  /// The leading m x m block of X.
  PolyMatrix<K> skew_matrix(int m) const;

  /// g_ki = sum_{j <= i} X[k, j] y_j.
  Polynomial<K> generator(int k, int i) const;
  /// g_1i .. g_ii, the entries of X_i Y_i.
  std::vector<Polynomial<K>> generators(int i) const;

  /// Delta_(i)m: Pfaffian of X_m with row and column i deleted.
  Polynomial<K> pfaffian_minor(int i, int m) const;
  Polynomial<K> pfaffian_minor(int i) const { return pfaffian_minor(i, n()); }

 private:
  void check_index(int v, int hi, const char* what) const;

  SkewSystem system_;
  RingPtr<K> ring_;
};

template <class K>
struct NamedIdeals {
  Ideal<K> I;  ///< <g_1n .. g_(n-1)n>
  Ideal<K> J;  ///< <g_nn>
  Ideal<K> L;  ///< I + J
  Ideal<K> C_conjectured;  ///< <g_1(n-1) .. g_(n-1)(n-1), y_n> plus Delta_(n)n for odd n
  Ideal<K> P_conjectured;  ///< <y_1 .. y_(n-1)>
};

template <class K>
NamedIdeals<K> build_named_ideals(const SkewModel<K>& model);

/// Generator list of the conjectured colon ideal (I_n : J_n).
template <class K>
std::vector<Polynomial<K>> conjectured_colon_generators(const SkewModel<K>& model);

enum class Verdict { pass, fail, unresolved };
std::string to_string(Verdict v);

struct IdentityCheck {
  std::string id;
  Verdict verdict = Verdict::unresolved;
  /// Whether the identity holds exactly as stated.
  bool literal_holds = false;
  /// The relation that was verified, in text form; empty when none was found.
  std::string relation;
  /// Signs or coefficients found by the search, one list per instance.
  std::vector<std::vector<int>> coefficients;
  std::string note;
};

struct Lemma1Report {
  int n = 0;
  IdentityCheck i, ii, iii;
};

/// Checks the three identities relating the generators and the Pfaffians.
/// (i) is checked exactly. (iii) and (ii) are first tried as stated and, when
/// that fails, in the nearest degree-consistent form found by a coefficient
/// search; the report says which form holds.
template <class K>
Lemma1Report verify_lemma1(const SkewModel<K>& model);

}  // namespace skewres
