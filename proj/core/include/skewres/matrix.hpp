#pragma once

#include <string>
#include <vector>

#include "skewres/polynomial.hpp"

namespace skewres {

/// Coordinates of an element of a free module R^r.
template <class K>
using ModuleElement = std::vector<Polynomial<K>>;

/// Dense matrix of polynomials, row-major. Columns are images of basis vectors.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(RingPtr<K> ring, std::size_t n);
  static PolyMatrix from_rows(RingPtr<K> ring, const std::vector<std::vector<Polynomial<K>>>& rows);
  static PolyMatrix from_columns(RingPtr<K> ring, std::size_t rows, const std::vector<ModuleElement<K>>& cols);

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial<K>& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial<K>& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  ModuleElement<K> column(std::size_t c) const;
  std::vector<ModuleElement<K>> columns() const;
  std::vector<Polynomial<K>> row(std::size_t r) const;
  /// All entries, row-major.
  const std::vector<Polynomial<K>>& entries() const { return entries_; }

  PolyMatrix operator*(const PolyMatrix& o) const;
  ModuleElement<K> operator*(const ModuleElement<K>& v) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix scaled(const Polynomial<K>& f) const;

  bool is_zero() const;
  /// Copies `block` into this matrix with its top-left corner at (row0, col0).
  void paste(const PolyMatrix& block, std::size_t row0, std::size_t col0);
  PolyMatrix without_row(std::size_t r) const;
  PolyMatrix without_column(std::size_t c) const;
  PolyMatrix in_ring(const RingPtr<K>& target) const;

  /// One row per line, entries separated by ", ".
  std::string to_string() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  RingPtr<K> ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial<K>> entries_;
};

/// Rank over F_p of `m` evaluated at `point` (one residue per ring variable).
/// Rational coefficients are reduced modulo `prime`; throws MathError when a
/// denominator vanishes.
template <class K>
std::size_t evaluated_rank(const PolyMatrix<K>& m, const std::vector<std::uint32_t>& point, std::uint32_t prime);

}  // namespace skewres
