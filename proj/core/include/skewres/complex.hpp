#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewres/ideal.hpp"

namespace skewres {

/// Free module R(-d_1) + ... + R(-d_r), recorded by its generator degrees.
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

  std::size_t rank() const { return degrees_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }

  GradedFreeModule shifted(int by) const;
  GradedFreeModule without(std::size_t i) const;
  friend GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::vector<int> degrees_;
};

/// Where a complex violates its invariants.
struct ComplexDefect {
  enum class Kind { shape, ring, homogeneity, composition } kind;
  std::size_t level = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

/// F_0 <- F_1 <- ... <- F_l with d_k : F_k -> F_(k-1) given as matrices
/// (rows index F_(k-1), columns F_k).
template <class K>
class ChainComplex {
 public:
  /// Throws InvalidComplex unless shapes compose, every entry is homogeneous of
  /// the degree the twists dictate, and d_(k-1) d_k = 0.
  ChainComplex(RingPtr<K> ring, std::vector<GradedFreeModule> modules, std::vector<PolyMatrix<K>> differentials);

  /// Skips validation; for inspecting possibly broken data.
  static ChainComplex unchecked(RingPtr<K> ring, std::vector<GradedFreeModule> modules,
                                std::vector<PolyMatrix<K>> differentials);

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t length() const { return modules_.size() - 1; }
  const std::vector<GradedFreeModule>& modules() const { return modules_; }
  const GradedFreeModule& module(std::size_t k) const { return modules_[k]; }
  /// d_k for k in 1..length().
  const PolyMatrix<K>& differential(std::size_t k) const { return differentials_.at(k - 1); }
  const std::vector<PolyMatrix<K>>& differentials() const { return differentials_; }
  std::vector<std::size_t> ranks() const;

  /// First violated invariant, if any.
  std::optional<ComplexDefect> find_defect() const;
  /// No differential has a nonzero scalar entry.
  bool is_minimal() const;

  ChainComplex in_ring(const RingPtr<K>& target) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.ring_->same_as(*b.ring_) && a.modules_ == b.modules_ && a.differentials_ == b.differentials_;
  }

 private:
  struct Unchecked {};
  ChainComplex(Unchecked, RingPtr<K> ring, std::vector<GradedFreeModule> modules, std::vector<PolyMatrix<K>> differentials);

  RingPtr<K> ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<PolyMatrix<K>> differentials_;
};

/// Maps xi_k : source_k -> target_k raising degrees by `degree`.
template <class K>
struct ChainMap {
  ChainComplex<K> source;
  ChainComplex<K> target;
  std::vector<PolyMatrix<K>> maps;
  int degree = 0;

  /// Level and description of the first square that fails to commute.
  std::optional<std::string> find_defect() const;
};

/// Koszul complex on fs: F_k has one generator per k-subset (lexicographic),
/// and the entry for (S minus j, S) is (-1)^(position of j in S) f_j.
template <class K>
ChainComplex<K> koszul(const std::vector<Polynomial<K>>& fs);

/// Tensor product with 0 -> R(-deg f) --f--> R -> 0. Level k is
/// C_k + C_(k-1)(-deg f) with differential [[d_k, (-1)^(k+1) f], [0, d_(k-1)]].
template <class K>
ChainComplex<K> tensor_length_one(const ChainComplex<K>& c, const Polynomial<K>& f);

/// Lifts multiplication by f0 on F_0 = R to a chain map source -> target,
/// solving target.d_k x = xi_(k-1) source.d_k column by column.
/// Throws MathError naming the level and column when no lift exists.
template <class K>
ChainMap<K> lift_chain_map(const ChainComplex<K>& source, const ChainComplex<K>& target, const Polynomial<K>& f0);

/// Level k is source_(k-1)(-degree) + target_k with differential
/// [[-source.d_(k-1), 0], [xi_(k-1), target.d_k]].
template <class K>
ChainComplex<K> mapping_cone(const ChainMap<K>& phi);

template <class K>
struct MinimalizeResult {
  ChainComplex<K> complex;
  /// Cancelled pairs, indexed by the level of the differential that held the unit.
  std::map<std::size_t, std::size_t> cancellations;
  std::size_t total_cancellations() const;
};

/// Cancels unit entries one at a time (lowest level first, first unit in
/// row-major order) until the complex is minimal.
template <class K>
MinimalizeResult<K> minimalize(const ChainComplex<K>& c);

/// Graded Betti numbers of a minimal complex.
class BettiTable {
 public:
  BettiTable() = default;
  /// beta[i][j]: generators of F_i in degree j.
  explicit BettiTable(std::map<std::size_t, std::map<int, std::size_t>> entries);

  std::size_t at(std::size_t i, int j) const;
  std::vector<std::size_t> totals() const;
  const std::map<std::size_t, std::map<int, std::size_t>>& entries() const { return entries_; }

  /// Grid with columns i and rows j - i, zeros shown as '.'.
  std::string to_string() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::size_t, std::map<int, std::size_t>> entries_;
};

/// Throws MathError on a non-minimal complex.
template <class K>
BettiTable betti_table(const ChainComplex<K>& c);

struct ResolutionCheckOptions {
  bool symbolic = true;
  bool probabilistic = true;
  std::size_t points = 3;
  std::uint64_t seed = 1;
  std::uint32_t prime = kDefaultPrime;
};

struct ResolutionReport {
  bool structure_ok = false;
  std::optional<ComplexDefect> defect;
  /// Ideal of entries of d_1 equals the target ideal.
  bool cokernel_ok = false;
  bool symbolic_ran = false;
  /// Per level k = 1..length: kernel of d_k lies in the image of d_(k+1).
  std::vector<bool> exact_at;
  bool probabilistic_ran = false;
  /// Per point and level k = 0..length: rank d_k + rank d_(k+1) == rank F_k.
  std::vector<std::vector<bool>> rank_checks;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks that c is a free resolution of R/ideal.
template <class K>
ResolutionReport verify_resolution(const ChainComplex<K>& c, const Ideal<K>& ideal,
                                   const ResolutionCheckOptions& options = {});

/// Columns scaled so the first nonzero entry is monic, then sorted by text.
template <class K>
PolyMatrix<K> normalize_columns(const PolyMatrix<K>& m);

}  // namespace skewres
