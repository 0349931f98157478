#pragma once

// Independent checks used by the tests. Nothing here calls the Groebner
// engine: ideals and complexes are compared degree by degree through dense
// linear algebra over F_p.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "skewres/pipeline.hpp"

namespace oracle {

using Exps = std::vector<int>;

inline constexpr std::uint32_t kP = 32003;

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p = kP) {
  v %= static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(v < 0 ? v + p : v);
}

inline std::uint32_t residue(const skewres::ModP& c, std::uint32_t p = kP) {
  return c.prime() == p ? c.value() : reduce(c.symmetric(), p);
}

inline std::uint32_t residue(const skewres::Rational& c, std::uint32_t p = kP) { return *c.residue(p); }

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

/// Row-echelon rank over F_p.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p = kP) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = inv_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint64_t f = rows[r][c];
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

/// All exponent vectors of total degree d in nvars variables.
inline std::vector<Exps> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  Exps e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// Sparse polynomial mod p keyed by exponent vector.
using Sparse = std::map<Exps, std::uint32_t>;

template <class K>
Sparse sparse(const skewres::Polynomial<K>& f, std::size_t nvars, std::uint32_t p = kP) {
  Sparse s;
  for (const auto& t : f.terms()) {
    Exps e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<int>(t.mono[i]);
    auto c = residue(t.coeff, p);
    if (c) s[e] = c;
  }
  return s;
}

inline Sparse shift(const Sparse& f, const Exps& m) {
  Sparse s;
  for (const auto& [e, c] : f) {
    Exps k = e;
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += m[i];
    s[k] = c;
  }
  return s;
}

/// Product by schoolbook multiplication of the sparse forms.
inline Sparse multiply(const Sparse& a, const Sparse& b, std::uint32_t p = kP) {
  Sparse s;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto& slot = s[e];
      slot = static_cast<std::uint32_t>((slot + std::uint64_t{ca} * cb) % p);
      if (!slot) s.erase(e);
    }
  }
  return s;
}

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline std::uint32_t evaluate(const Sparse& f, const std::vector<std::uint32_t>& point, std::uint32_t p = kP) {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : f) {
    std::uint64_t v = c;
    for (std::size_t i = 0; i < e.size(); ++i) v = v * pow_mod(point[i], e[i], p) % p;
    acc = (acc + v) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

/// Coordinates of homogeneous pieces in a fixed monomial basis.
class DegreeBasis {
 public:
  DegreeBasis(std::size_t nvars, int d) : monos_(monomials_of_degree(nvars, d)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
  }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Exps>& monomials() const { return monos_; }
  std::size_t index(const Exps& e) const { return index_.at(e); }

 private:
  std::vector<Exps> monos_;
  std::map<Exps, std::size_t> index_;
};

/// dim_F_p of the degree-d part of the ideal generated by homogeneous gens.
template <class K>
std::size_t ideal_dim(const std::vector<skewres::Polynomial<K>>& gens, std::size_t nvars, int d) {
  DegreeBasis basis(nvars, d);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto s = sparse(g, nvars);
    for (const auto& m : monomials_of_degree(nvars, d - g.degree())) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& [e, c] : shift(s, m)) row[basis.index(e)] = c;
      rows.push_back(std::move(row));
    }
  }
  return rank_mod_p(std::move(rows));
}

/// dim_F_p of the degree-d part of (gens : f), by linear algebra in degree d + deg f.
template <class K>
std::size_t colon_dim(const std::vector<skewres::Polynomial<K>>& gens, const skewres::Polynomial<K>& f,
                      std::size_t nvars, int d) {
  int e = d + f.degree();
  DegreeBasis basis(nvars, e);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto s = sparse(g, nvars);
    for (const auto& m : monomials_of_degree(nvars, e - g.degree())) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& [x, c] : shift(s, m)) row[basis.index(x)] = c;
      rows.push_back(std::move(row));
    }
  }
  std::size_t base = rank_mod_p(rows);
  auto fs = sparse(f, nvars);
  auto multiples = monomials_of_degree(nvars, d);
  for (const auto& m : multiples) {
    std::vector<std::uint32_t> row(basis.size(), 0);
    for (const auto& [x, c] : shift(fs, m)) row[basis.index(x)] = c;
    rows.push_back(std::move(row));
  }
  return multiples.size() - (rank_mod_p(std::move(rows)) - base);
}

/// Number of degree-d monomials not divisible by any of `leads`.
inline std::size_t standard_monomials(const std::vector<skewres::Monomial>& leads, std::size_t nvars, int d) {
  std::size_t count = 0;
  for (const auto& e : monomials_of_degree(nvars, d)) {
    bool hit = false;
    for (const auto& l : leads) {
      bool div = true;
      for (std::size_t i = 0; i < nvars && div; ++i) div = static_cast<int>(l[i]) <= e[i];
      if (div) {
        hit = true;
        break;
      }
    }
    if (!hit) ++count;
  }
  return count;
}

/// Matrix of d_k restricted to internal degree d, as rows over F_p.
template <class K>
std::vector<std::vector<std::uint32_t>> graded_piece(const skewres::ChainComplex<K>& c, std::size_t k, int d) {
  std::size_t nvars = c.ring()->num_variables();
  const auto& src = c.module(k);
  const auto& tgt = c.module(k - 1);
  const auto& m = c.differential(k);
  std::vector<std::size_t> row_offset(tgt.rank() + 1, 0);
  std::vector<DegreeBasis> row_bases;
  for (std::size_t r = 0; r < tgt.rank(); ++r) {
    row_bases.emplace_back(nvars, d - tgt.degree(r));
    row_offset[r + 1] = row_offset[r] + row_bases.back().size();
  }
  std::vector<std::vector<std::uint32_t>> cols;
  for (std::size_t col = 0; col < src.rank(); ++col) {
    for (const auto& mono : monomials_of_degree(nvars, d - src.degree(col))) {
      std::vector<std::uint32_t> v(row_offset.back(), 0);
      for (std::size_t r = 0; r < tgt.rank(); ++r) {
        for (const auto& [e, coeff] : shift(sparse(m(r, col), nvars), mono)) {
          v[row_offset[r] + row_bases[r].index(e)] = coeff;
        }
      }
      cols.push_back(std::move(v));
    }
  }
  return cols;
}

template <class K>
std::size_t piece_dim(const skewres::ChainComplex<K>& c, std::size_t k, int d) {
  std::size_t nvars = c.ring()->num_variables(), dim = 0;
  for (int deg : c.module(k).degrees()) dim += monomials_of_degree(nvars, d - deg).size();
  return dim;
}

/// Homology dimensions H_0..H_l of the complex in internal degree d.
template <class K>
std::vector<std::size_t> homology_in_degree(const skewres::ChainComplex<K>& c, int d) {
  std::size_t len = c.length();
  std::vector<std::size_t> ranks(len + 2, 0);
  for (std::size_t k = 1; k <= len; ++k) ranks[k] = rank_mod_p(graded_piece(c, k, d));
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k <= len; ++k) h.push_back(piece_dim(c, k, d) - ranks[k] - ranks[k + 1]);
  return h;
}

/// Checks that c resolves R/<gens> in every internal degree up to max_degree:
/// H_0 has the Hilbert function of R/I and the higher homology vanishes.
template <class K>
bool resolves_up_to(const skewres::ChainComplex<K>& c, const std::vector<skewres::Polynomial<K>>& gens,
                    int max_degree) {
  std::size_t nvars = c.ring()->num_variables();
  for (int d = 0; d <= max_degree; ++d) {
    auto h = homology_in_degree(c, d);
    std::size_t quotient = monomials_of_degree(nvars, d).size() - ideal_dim(gens, nvars, d);
    if (h[0] != quotient) return false;
    for (std::size_t k = 1; k < h.size(); ++k) {
      if (h[k] != 0) return false;
    }
  }
  return true;
}

/// Determinant by the Leibniz formula.
template <class K>
skewres::Polynomial<K> leibniz_det(const skewres::PolyMatrix<K>& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  skewres::Polynomial<K> det(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    auto term = skewres::Polynomial<K>::constant(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Seeded generator of random ring elements for property tests.
template <class K>
class PolyGen {
 public:
  PolyGen(skewres::RingPtr<K> ring, std::uint64_t seed) : ring_(std::move(ring)), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  K coefficient() {
    int v = 0;
    while (v == 0) v = uniform(-9, 9);
    return ring_->scalar(v);
  }

  skewres::Monomial monomial(int degree, std::size_t nvars) {
    skewres::Monomial m;
    for (int i = 0; i < degree; ++i) {
      auto v = static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1));
      m.set(v, m[v] + 1);
    }
    return m;
  }

  /// Random polynomial with up to max_terms terms of degree <= max_degree.
  skewres::Polynomial<K> poly(int max_terms, int max_degree, std::size_t nvars = 0) {
    if (!nvars) nvars = ring_->num_variables();
    std::vector<skewres::Term<K>> terms;
    int count = uniform(0, max_terms);
    for (int i = 0; i < count; ++i) terms.push_back({coefficient(), monomial(uniform(0, max_degree), nvars)});
    return skewres::Polynomial<K>::from_terms(ring_, std::move(terms));
  }

  /// Random nonzero homogeneous polynomial of the given degree.
  skewres::Polynomial<K> homogeneous(int degree, int max_terms, std::size_t nvars = 0) {
    if (!nvars) nvars = ring_->num_variables();
    while (true) {
      std::vector<skewres::Term<K>> terms;
      int count = uniform(1, max_terms);
      for (int i = 0; i < count; ++i) terms.push_back({coefficient(), monomial(degree, nvars)});
      auto f = skewres::Polynomial<K>::from_terms(ring_, std::move(terms));
      if (!f.is_zero()) return f;
    }
  }

 private:
  skewres::RingPtr<K> ring_;
  std::mt19937_64 rng_;
};

/// Ring over the variables a, b, c, ... for generic property tests.
template <class K>
skewres::RingPtr<K> letters_ring(std::size_t nvars, skewres::MonomialOrder order,
                                 skewres::FieldSpec field = std::is_same_v<K, skewres::Rational>
                                                                ? skewres::FieldSpec::rationals()
                                                                : skewres::FieldSpec::prime_field()) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return skewres::Ring<K>::make(skewres::VariableRegistry(std::move(names)), order, field);
}

}  // namespace oracle
