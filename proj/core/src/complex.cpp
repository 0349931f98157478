#include "skewres/complex.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace skewres {

GradedFreeModule GradedFreeModule::shifted(int by) const {
  auto d = degrees_;
  for (auto& x : d) x += by;
  return GradedFreeModule(std::move(d));
}

GradedFreeModule GradedFreeModule::without(std::size_t i) const {
  auto d = degrees_;
  d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
  return GradedFreeModule(std::move(d));
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  auto d = a.degrees_;
  d.insert(d.end(), b.degrees_.begin(), b.degrees_.end());
  return GradedFreeModule(std::move(d));
}

// ---------------------------------------------------------------------------
// ChainComplex

template <class K>
ChainComplex<K>::ChainComplex(Unchecked, RingPtr<K> ring, std::vector<GradedFreeModule> modules,
                              std::vector<PolyMatrix<K>> differentials)
    : ring_(std::move(ring)), modules_(std::move(modules)), differentials_(std::move(differentials)) {
  if (modules_.empty()) modules_.emplace_back();
}

template <class K>
ChainComplex<K>::ChainComplex(RingPtr<K> ring, std::vector<GradedFreeModule> modules,
                              std::vector<PolyMatrix<K>> differentials)
    : ChainComplex(Unchecked{}, std::move(ring), std::move(modules), std::move(differentials)) {
  if (auto d = find_defect()) {
    throw InvalidComplex(d->message);
  }
}

template <class K>
ChainComplex<K> ChainComplex<K>::unchecked(RingPtr<K> ring, std::vector<GradedFreeModule> modules,
                                           std::vector<PolyMatrix<K>> differentials) {
  return ChainComplex(Unchecked{}, std::move(ring), std::move(modules), std::move(differentials));
}

template <class K>
std::vector<std::size_t> ChainComplex<K>::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& m : modules_) out.push_back(m.rank());
  return out;
}

template <class K>
std::optional<ComplexDefect> ChainComplex<K>::find_defect() const {
  using Kind = ComplexDefect::Kind;
  auto where = [](std::size_t k, std::size_t r, std::size_t c) {
    return "d_" + std::to_string(k) + "[" + std::to_string(r) + "," + std::to_string(c) + "]";
  };
  if (differentials_.size() + 1 != modules_.size()) {
    return ComplexDefect{Kind::shape, 0, 0, 0, "differential count does not match module count"};
  }
  for (std::size_t k = 1; k <= differentials_.size(); ++k) {
    const auto& d = differentials_[k - 1];
    if (d.rows() != modules_[k - 1].rank() || d.cols() != modules_[k].rank()) {
      return ComplexDefect{Kind::shape, k, 0, 0, "d_" + std::to_string(k) + " has the wrong shape"};
    }
    if (d.rows() * d.cols() > 0 && !d.ring()->same_as(*ring_)) {
      return ComplexDefect{Kind::ring, k, 0, 0, "d_" + std::to_string(k) + " lives in another ring"};
    }
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const auto& e = d(r, c);
        if (e.is_zero()) continue;
        if (e.ring() && !e.ring()->same_as(*ring_)) {
          return ComplexDefect{Kind::ring, k, r, c, where(k, r, c) + " lives in another ring"};
        }
        int want = modules_[k].degree(c) - modules_[k - 1].degree(r);
        if (!e.is_homogeneous() || e.degree() != want) {
          return ComplexDefect{Kind::homogeneity, k, r, c,
                               where(k, r, c) + " is not homogeneous of degree " + std::to_string(want)};
        }
      }
    }
  }
  for (std::size_t k = 2; k <= differentials_.size(); ++k) {
    auto prod = differentials_[k - 2] * differentials_[k - 1];
    for (std::size_t r = 0; r < prod.rows(); ++r) {
      for (std::size_t c = 0; c < prod.cols(); ++c) {
        if (!prod(r, c).is_zero()) {
          return ComplexDefect{Kind::composition, k, r, c,
                               "d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " is nonzero at [" +
                                   std::to_string(r) + "," + std::to_string(c) + "]"};
        }
      }
    }
  }
  return std::nullopt;
}

template <class K>
bool ChainComplex<K>::is_minimal() const {
  for (const auto& d : differentials_) {
    for (const auto& e : d.entries()) {
      if (e.is_unit()) return false;
    }
  }
  return true;
}

template <class K>
ChainComplex<K> ChainComplex<K>::in_ring(const RingPtr<K>& target) const {
  if (ring_->same_as(*target)) return *this;
  std::vector<PolyMatrix<K>> ds;
  for (const auto& d : differentials_) ds.push_back(d.in_ring(target));
  return ChainComplex(target, modules_, std::move(ds));
}

template <class K>
std::optional<std::string> ChainMap<K>::find_defect() const {
  if (maps.size() != source.length() + 1) return "chain map has " + std::to_string(maps.size()) + " levels";
  for (std::size_t k = 0; k < maps.size(); ++k) {
    std::size_t tr = k <= target.length() ? target.module(k).rank() : 0;
    if (maps[k].rows() != tr || maps[k].cols() != source.module(k).rank()) {
      return "xi_" + std::to_string(k) + " has the wrong shape";
    }
  }
  for (std::size_t k = 1; k < maps.size(); ++k) {
    auto rhs = maps[k - 1] * source.differential(k);
    PolyMatrix<K> lhs(source.ring(), rhs.rows(), rhs.cols());
    if (k <= target.length()) lhs = target.differential(k) * maps[k];
    if (!(lhs - rhs).is_zero()) return "square at level " + std::to_string(k) + " does not commute";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions

template <class K>
ChainComplex<K> koszul(const std::vector<Polynomial<K>>& fs) {
  if (fs.empty()) throw MathError("koszul complex of an empty sequence");
  RingPtr<K> ring = fs.front().ring();
  std::size_t m = fs.size();
  if (m > 20) throw MathError("koszul complex too large");
  std::vector<int> deg(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (fs[j].is_zero() || !fs[j].is_homogeneous()) throw MathError("koszul complex needs nonzero homogeneous input");
    deg[j] = fs[j].degree();
  }
  // Subsets of each size as bitmasks, in lexicographic order of their sorted elements.
  std::vector<std::vector<std::uint32_t>> subsets(m + 1);
  std::function<void(std::uint32_t, std::size_t, std::size_t)> gen = [&](std::uint32_t mask, std::size_t start,
                                                                         std::size_t size) {
    subsets[size].push_back(mask);
    for (std::size_t j = start; j < m; ++j) gen(mask | (1u << j), j + 1, size + 1);
  };
  gen(0, 0, 0);
  for (auto& s : subsets) {
    std::sort(s.begin(), s.end(), [](std::uint32_t a, std::uint32_t b) {
      // Sorted element lists compare like this: the set owning the lowest differing element is smaller.
      for (std::size_t j = 0; j < 32; ++j) {
        bool ia = a >> j & 1, ib = b >> j & 1;
        if (ia != ib) return ia;
      }
      return false;
    });
  }
  std::vector<GradedFreeModule> modules;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<int> d;
    for (auto s : subsets[k]) {
      int total = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (s >> j & 1) total += deg[j];
      }
      d.push_back(total);
    }
    modules.emplace_back(std::move(d));
  }
  std::vector<PolyMatrix<K>> ds;
  for (std::size_t k = 1; k <= m; ++k) {
    const auto& rows = subsets[k - 1];
    const auto& cols = subsets[k];
    PolyMatrix<K> d(ring, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t pos = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (!(cols[c] >> j & 1)) continue;
        auto face = cols[c] & ~(1u << j);
        std::size_t r = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), face) - rows.begin());
        d(r, c) = pos % 2 == 0 ? fs[j] : -fs[j];
        ++pos;
      }
    }
    ds.push_back(std::move(d));
  }
  return ChainComplex<K>(ring, std::move(modules), std::move(ds));
}

template <class K>
ChainComplex<K> tensor_length_one(const ChainComplex<K>& c, const Polynomial<K>& f) {
  const auto& ring = c.ring();
  Polynomial<K> fr = f.in_ring(ring);
  if (fr.is_zero() || !fr.is_homogeneous()) throw MathError("tensor factor must be nonzero and homogeneous");
  int e = fr.degree();
  std::size_t len = c.length();
  auto mod = [&](std::size_t k) -> GradedFreeModule { return k <= len ? c.module(k) : GradedFreeModule(); };
  std::vector<GradedFreeModule> modules;
  for (std::size_t k = 0; k <= len + 1; ++k) {
    GradedFreeModule prev = k == 0 ? GradedFreeModule() : mod(k - 1).shifted(e);
    modules.push_back(direct_sum(mod(k), prev));
  }
  std::vector<PolyMatrix<K>> ds;
  for (std::size_t k = 1; k <= len + 1; ++k) {
    std::size_t a = mod(k).rank(), b = mod(k - 1).rank();
    std::size_t pa = mod(k - 1).rank(), pb = k >= 2 ? mod(k - 2).rank() : 0;
    PolyMatrix<K> d(ring, pa + pb, a + b);
    if (k <= len && a > 0) d.paste(c.differential(k), 0, 0);
    Polynomial<K> s = k % 2 == 1 ? fr : -fr;
    for (std::size_t i = 0; i < b; ++i) d(i, a + i) = s;
    if (k >= 2 && b > 0 && pb > 0) d.paste(c.differential(k - 1), pa, a);
    ds.push_back(std::move(d));
  }
  return ChainComplex<K>(ring, std::move(modules), std::move(ds));
}

template <class K>
ChainMap<K> lift_chain_map(const ChainComplex<K>& source, const ChainComplex<K>& target, const Polynomial<K>& f0) {
  const auto& ring = target.ring();
  if (source.module(0).rank() != 1 || target.module(0).rank() != 1) {
    throw MathError("lifting needs complexes with F_0 = R");
  }
  Polynomial<K> f = f0.in_ring(ring);
  if (f.is_zero() || !f.is_homogeneous()) throw MathError("lifted map must be nonzero and homogeneous");
  int shift = f.degree() + source.module(0).degree(0) - target.module(0).degree(0);
  std::vector<PolyMatrix<K>> maps;
  PolyMatrix<K> xi0(ring, 1, 1);
  xi0(0, 0) = f;
  maps.push_back(std::move(xi0));
  for (std::size_t k = 1; k <= source.length(); ++k) {
    auto image = maps[k - 1] * source.differential(k);
    std::size_t cols = source.module(k).rank();
    if (k > target.length()) {
      if (!image.is_zero()) throw MathError("lift fails at level " + std::to_string(k) + ": target has ended");
      maps.emplace_back(ring, 0, cols);
      continue;
    }
    const auto& d = target.differential(k);
    SubmoduleBasis<K> basis(ring, d.rows(), d.columns(), true, target.module(k - 1).degrees(),
                            target.module(k).degrees());
    PolyMatrix<K> xi(ring, d.cols(), cols);
    for (std::size_t c = 0; c < cols; ++c) {
      auto cert = basis.certificate(image.column(c));
      if (!cert) {
        throw MathError("lift fails at level " + std::to_string(k) + ", column " + std::to_string(c) +
                        ": not in the image of the target differential");
      }
      for (std::size_t r = 0; r < d.cols(); ++r) xi(r, c) = (*cert)[r];
    }
    maps.push_back(std::move(xi));
  }
  ChainMap<K> phi{source.in_ring(ring), target, std::move(maps), shift};
  if (auto defect = phi.find_defect()) throw MathError("lifted chain map is invalid: " + *defect);
  return phi;
}

template <class K>
ChainComplex<K> mapping_cone(const ChainMap<K>& phi) {
  const auto& src = phi.source;
  const auto& tgt = phi.target;
  const auto& ring = tgt.ring();
  std::size_t len = std::max(src.length() + 1, tgt.length());
  auto smod = [&](std::ptrdiff_t k) {
    return k >= 0 && static_cast<std::size_t>(k) <= src.length() ? src.module(k).shifted(phi.degree) : GradedFreeModule();
  };
  auto tmod = [&](std::size_t k) { return k <= tgt.length() ? tgt.module(k) : GradedFreeModule(); };
  std::vector<GradedFreeModule> modules;
  for (std::size_t k = 0; k <= len; ++k) modules.push_back(direct_sum(smod(static_cast<std::ptrdiff_t>(k) - 1), tmod(k)));
  std::vector<PolyMatrix<K>> ds;
  for (std::size_t k = 1; k <= len; ++k) {
    std::size_t sa = smod(static_cast<std::ptrdiff_t>(k) - 1).rank(), ta = tmod(k).rank();
    std::size_t sb = smod(static_cast<std::ptrdiff_t>(k) - 2).rank(), tb = tmod(k - 1).rank();
    PolyMatrix<K> d(ring, sb + tb, sa + ta);
    if (k >= 2 && sa > 0 && sb > 0) d.paste(-src.differential(k - 1), 0, 0);
    if (sa > 0 && tb > 0) d.paste(phi.maps[k - 1], sb, 0);
    if (k <= tgt.length() && ta > 0) d.paste(tgt.differential(k), sb, sa);
    ds.push_back(std::move(d));
  }
  return ChainComplex<K>(ring, std::move(modules), std::move(ds));
}

template <class K>
std::size_t MinimalizeResult<K>::total_cancellations() const {
  std::size_t total = 0;
  for (const auto& [level, count] : cancellations) total += count;
  return total;
}

template <class K>
MinimalizeResult<K> minimalize(const ChainComplex<K>& c) {
  for (std::size_t k = 1; k <= c.length(); ++k) {
    for (const auto& e : c.differential(k).entries()) {
      if (!e.is_homogeneous()) throw MathError("minimalize needs homogeneous differentials");
    }
  }
  const auto& ring = c.ring();
  auto modules = c.modules();
  auto ds = c.differentials();
  std::map<std::size_t, std::size_t> cancelled;
  while (true) {
    bool found = false;
    std::size_t k = 0, pr = 0, pc = 0;
    for (std::size_t level = 1; level <= ds.size() && !found; ++level) {
      const auto& d = ds[level - 1];
      for (std::size_t r = 0; r < d.rows() && !found; ++r) {
        for (std::size_t col = 0; col < d.cols(); ++col) {
          if (d(r, col).is_unit()) {
            found = true;
            k = level;
            pr = r;
            pc = col;
            break;
          }
        }
      }
    }
    if (!found) break;
    auto& d = ds[k - 1];
    K inv = d(pr, pc).leading_coefficient().inverse();
    PolyMatrix<K> next(ring, d.rows() - 1, d.cols() - 1);
    for (std::size_t r = 0, nr = 0; r < d.rows(); ++r) {
      if (r == pr) continue;
      const auto& alpha = d(r, pc);
      for (std::size_t col = 0, nc = 0; col < d.cols(); ++col) {
        if (col == pc) continue;
        auto v = d(r, col);
        if (!alpha.is_zero() && !d(pr, col).is_zero()) v -= (alpha * d(pr, col)).scaled(inv);
        next(nr, nc++) = std::move(v);
      }
      ++nr;
    }
    d = std::move(next);
    if (k < ds.size()) ds[k] = ds[k].without_row(pc);
    if (k >= 2) ds[k - 2] = ds[k - 2].without_column(pr);
    modules[k] = modules[k].without(pc);
    modules[k - 1] = modules[k - 1].without(pr);
    ++cancelled[k];
  }
  while (modules.size() > 1 && modules.back().rank() == 0) {
    modules.pop_back();
    ds.pop_back();
  }
  return MinimalizeResult<K>{ChainComplex<K>(ring, std::move(modules), std::move(ds)), std::move(cancelled)};
}

// ---------------------------------------------------------------------------
// Betti tables

BettiTable::BettiTable(std::map<std::size_t, std::map<int, std::size_t>> entries) {
  for (auto& [i, row] : entries) {
    for (auto& [j, v] : row) {
      if (v) entries_[i][j] = v;
    }
  }
}

std::size_t BettiTable::at(std::size_t i, int j) const {
  auto it = entries_.find(i);
  if (it == entries_.end()) return 0;
  auto jt = it->second.find(j);
  return jt == it->second.end() ? 0 : jt->second;
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> out;
  for (const auto& [i, row] : entries_) {
    if (out.size() <= i) out.resize(i + 1, 0);
    for (const auto& [j, v] : row) out[i] += v;
  }
  return out;
}

std::string BettiTable::to_string() const {
  auto totals_row = totals();
  std::size_t cols = totals_row.size();
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& [i, row] : entries_) {
    for (const auto& [j, v] : row) {
      int s = j - static_cast<int>(i);
      if (!any) lo = hi = s;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
      any = true;
    }
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> labels;
  std::vector<std::string> header, total;
  for (std::size_t i = 0; i < cols; ++i) {
    header.push_back(std::to_string(i));
    total.push_back(std::to_string(totals_row[i]));
  }
  labels.push_back("");
  grid.push_back(header);
  labels.push_back("total:");
  grid.push_back(total);
  for (int s = lo; any && s <= hi; ++s) {
    labels.push_back(std::to_string(s) + ":");
    std::vector<std::string> row;
    for (std::size_t i = 0; i < cols; ++i) {
      std::size_t v = at(i, s + static_cast<int>(i));
      row.push_back(v ? std::to_string(v) : ".");
    }
    grid.push_back(row);
  }
  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> width(cols, 1);
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < cols; ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out << std::string(label_w - labels[r].size(), ' ') << labels[r];
    for (std::size_t i = 0; i < cols; ++i) out << ' ' << std::string(width[i] - grid[r][i].size(), ' ') << grid[r][i];
    out << '\n';
  }
  return out.str();
}

template <class K>
BettiTable betti_table(const ChainComplex<K>& c) {
  if (!c.is_minimal()) throw MathError("Betti numbers need a minimal complex");
  std::map<std::size_t, std::map<int, std::size_t>> entries;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    for (int d : c.module(i).degrees()) ++entries[i][d];
  }
  return BettiTable(std::move(entries));
}

// ---------------------------------------------------------------------------
// Verification

template <class K>
ResolutionReport verify_resolution(const ChainComplex<K>& c, const Ideal<K>& ideal, const ResolutionCheckOptions& options) {
  ResolutionReport report;
  const auto& ring = c.ring();
  report.defect = c.find_defect();
  report.structure_ok = !report.defect;
  if (report.defect) {
    report.failures.push_back("structure: " + report.defect->message);
  }

  if (c.length() == 0 || c.module(0).rank() != 1) {
    report.failures.push_back("cokernel: F_0 must have rank 1 and d_1 must exist");
  } else {
    Ideal<K> entries(ring, c.differential(1).row(0));
    report.cokernel_ok = ideal_equal(entries, ideal);
    if (!report.cokernel_ok) report.failures.push_back("cokernel: entries of d_1 do not generate the ideal");
  }

  if (options.symbolic && report.structure_ok) {
    report.symbolic_ran = true;
    for (std::size_t k = 1; k <= c.length(); ++k) {
      const auto& d = c.differential(k);
      auto kernel = syzygies(d, c.module(k - 1).degrees(), c.module(k).degrees(), false);
      bool ok = true;
      if (k == c.length()) {
        ok = kernel.generators.cols() == 0;
      } else if (kernel.generators.cols() > 0) {
        const auto& next = c.differential(k + 1);
        SubmoduleBasis<K> image(ring, next.rows(), next.columns(), false, c.module(k).degrees());
        for (std::size_t col = 0; col < kernel.generators.cols() && ok; ++col) {
          if (!image.contains(kernel.generators.column(col))) ok = false;
        }
      }
      report.exact_at.push_back(ok);
      if (!ok) report.failures.push_back("exactness: kernel of d_" + std::to_string(k) + " exceeds the image of d_" +
                                         std::to_string(k + 1));
    }
  }

  if (options.probabilistic) {
    report.probabilistic_ran = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> dist(1, options.prime - 1);
    std::uint32_t p = ring->field().kind == FieldKind::prime ? ring->field().prime : options.prime;
    for (std::size_t pt = 0; pt < options.points; ++pt) {
      std::vector<std::uint32_t> point(ring->num_variables());
      for (auto& x : point) x = dist(rng) % p;
      std::vector<std::size_t> rank(c.length() + 2, 0);
      for (std::size_t k = 1; k <= c.length(); ++k) rank[k] = evaluated_rank(c.differential(k), point, p);
      std::vector<bool> row;
      for (std::size_t k = 0; k <= c.length(); ++k) {
        bool ok = rank[k] + rank[k + 1] == c.module(k).rank();
        row.push_back(ok);
        if (!ok) {
          report.failures.push_back("rank: point " + std::to_string(pt) + ", level " + std::to_string(k) + ": " +
                                    std::to_string(rank[k]) + " + " + std::to_string(rank[k + 1]) +
                                    " != " + std::to_string(c.module(k).rank()));
        }
      }
      report.rank_checks.push_back(std::move(row));
    }
  }
  return report;
}

template <class K>
PolyMatrix<K> normalize_columns(const PolyMatrix<K>& m) {
  auto cols = m.columns();
  for (auto& col : cols) {
    for (const auto& e : col) {
      if (e.is_zero()) continue;
      K inv = e.leading_coefficient().inverse();
      for (auto& x : col) x = x.scaled(inv);
      break;
    }
  }
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::string key;
    for (const auto& e : cols[i]) key += e.to_string() + ";";
    keys.emplace_back(std::move(key), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<ModuleElement<K>> sorted;
  for (const auto& [key, i] : keys) sorted.push_back(cols[i]);
  return PolyMatrix<K>::from_columns(m.ring(), m.rows(), sorted);
}

#define SKEWRES_INSTANTIATE(K)                                                                                   \
  template class ChainComplex<K>;                                                                                \
  template struct ChainMap<K>;                                                                                   \
  template struct MinimalizeResult<K>;                                                                           \
  template ChainComplex<K> koszul(const std::vector<Polynomial<K>>&);                                            \
  template ChainComplex<K> tensor_length_one(const ChainComplex<K>&, const Polynomial<K>&);                      \
  template ChainMap<K> lift_chain_map(const ChainComplex<K>&, const ChainComplex<K>&, const Polynomial<K>&);     \
  template ChainComplex<K> mapping_cone(const ChainMap<K>&);                                                     \
  template MinimalizeResult<K> minimalize(const ChainComplex<K>&);                                               \
  template BettiTable betti_table(const ChainComplex<K>&);                                                       \
  template ResolutionReport verify_resolution(const ChainComplex<K>&, const Ideal<K>&, const ResolutionCheckOptions&); \
  template PolyMatrix<K> normalize_columns(const PolyMatrix<K>&);

SKEWRES_INSTANTIATE(Rational)
SKEWRES_INSTANTIATE(ModP)

}  // namespace skewres
