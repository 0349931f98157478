#include "skewres/matrix.hpp"

#include <utility>

namespace skewres {

template <class K>
PolyMatrix<K>::PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<K>(ring_)) {}

template <class K>
PolyMatrix<K> PolyMatrix<K>::identity(RingPtr<K> ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial<K>::constant(ring, 1);
  return m;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::from_rows(RingPtr<K> ring, const std::vector<std::vector<Polynomial<K>>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(ring, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw MathError("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[r][c].in_ring(ring);
  }
  return m;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::from_columns(RingPtr<K> ring, std::size_t rows, const std::vector<ModuleElement<K>>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw MathError("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r].in_ring(ring);
  }
  return m;
}

template <class K>
ModuleElement<K> PolyMatrix<K>::column(std::size_t c) const {
  ModuleElement<K> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

template <class K>
std::vector<ModuleElement<K>> PolyMatrix<K>::columns() const {
  std::vector<ModuleElement<K>> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

template <class K>
std::vector<Polynomial<K>> PolyMatrix<K>::row(std::size_t r) const {
  return std::vector<Polynomial<K>>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw MathError("matrix product shape mismatch");
  PolyMatrix out(ring_ ? ring_ : o.ring_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const auto& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

template <class K>
ModuleElement<K> PolyMatrix<K>::operator*(const ModuleElement<K>& v) const {
  if (v.size() != cols_) throw MathError("matrix-vector shape mismatch");
  ModuleElement<K> out(rows_, Polynomial<K>(ring_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix sum shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
  return out;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix difference shape mismatch");
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= o.entries_[i];
  return out;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::scaled(const Polynomial<K>& f) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = e * f;
  return out;
}

template <class K>
bool PolyMatrix<K>::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

template <class K>
void PolyMatrix<K>::paste(const PolyMatrix& block, std::size_t row0, std::size_t col0) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) throw MathError("block does not fit");
  for (std::size_t r = 0; r < block.rows_; ++r) {
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(row0 + r, col0 + c) = block(r, c);
  }
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::without_row(std::size_t skip) const {
  PolyMatrix out(ring_, rows_ - 1, cols_);
  for (std::size_t r = 0, o = 0; r < rows_; ++r) {
    if (r == skip) continue;
    for (std::size_t c = 0; c < cols_; ++c) out(o, c) = (*this)(r, c);
    ++o;
  }
  return out;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::without_column(std::size_t skip) const {
  PolyMatrix out(ring_, rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0, o = 0; c < cols_; ++c) {
      if (c == skip) continue;
      out(r, o++) = (*this)(r, c);
    }
  }
  return out;
}

template <class K>
PolyMatrix<K> PolyMatrix<K>::in_ring(const RingPtr<K>& target) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].in_ring(target);
  return out;
}

template <class K>
std::string PolyMatrix<K>::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

namespace {

std::uint32_t residue_of(const Rational& q, std::uint32_t p) {
  auto r = q.residue(p);
  if (!r) throw MathError("denominator vanishes modulo " + std::to_string(p));
  return *r;
}

std::uint32_t residue_of(const ModP& a, std::uint32_t p) {
  if (a.prime() != 0 && a.prime() != p) throw MathError("evaluation prime differs from the coefficient field");
  return a.value();
}

std::uint64_t pow_mod(std::uint64_t b, unsigned e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

template <class K>
std::size_t evaluated_rank(const PolyMatrix<K>& m, const std::vector<std::uint32_t>& point, std::uint32_t prime) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::uint64_t v = 0;
      for (const auto& t : m(r, c).terms()) {
        std::uint64_t x = residue_of(t.coeff, prime);
        for (std::size_t i = 0; i < point.size(); ++i) {
          if (t.mono[i]) x = x * pow_mod(point[i], t.mono[i], prime) % prime;
        }
        v = (v + x) % prime;
      }
      a[r][c] = v;
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    std::uint64_t inv = pow_mod(a[rank][c], prime - 2, prime);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      std::uint64_t f = a[r][c] * inv % prime;
      for (std::size_t k = c; k < m.cols(); ++k) {
        a[r][k] = (a[r][k] + (prime - f) * a[rank][k]) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

template class PolyMatrix<Rational>;
template class PolyMatrix<ModP>;
template std::size_t evaluated_rank(const PolyMatrix<Rational>&, const std::vector<std::uint32_t>&, std::uint32_t);
template std::size_t evaluated_rank(const PolyMatrix<ModP>&, const std::vector<std::uint32_t>&, std::uint32_t);

}  // namespace skewres
