#include <doctest.h>

#include "support/oracles.hpp"

using namespace skewres;

namespace {

using Q = Rational;
using Mat = PolyMatrix<Q>;

/// The matrices of the worked n = 4 example, transcribed. `psi2_fixed`
/// flips the sign of entry (2,2) of psi_2, without which psi_1 psi_2 != 0.
struct Worked4 {
  SkewModel<Q> m{4};
  RingPtr<Q> r = m.ring();
  Polynomial<Q> z{r};

  Polynomial<Q> g(int k, int i) const { return m.generator(k, i); }
  Polynomial<Q> y(int j) const { return m.y(j); }
  Polynomial<Q> x(int i, int j) const { return m.x(i, j); }
  Polynomial<Q> c(int v) const { return Polynomial<Q>::constant(r, v); }

  Mat d13() const { return Mat::from_rows(r, {{g(1, 3), g(2, 3), g(3, 3)}}); }
  Mat d23() const { return Mat::from_rows(r, {{x(2, 3), y(1)}, {-x(1, 3), y(2)}, {x(1, 2), y(3)}}); }
  Mat eta1() const { return Mat::from_rows(r, {{g(1, 3), g(2, 3), g(3, 3), y(4)}}); }
  Mat eta2() const {
    return Mat::from_rows(r, {{x(2, 3), y(1), -y(4), z, z},
                              {-x(1, 3), y(2), z, -y(4), z},
                              {x(1, 2), y(3), z, z, -y(4)},
                              {z, z, g(1, 3), g(2, 3), g(3, 3)}});
  }
  Mat eta3() const {
    return Mat::from_rows(r, {{y(4), z}, {z, y(4)}, {x(2, 3), y(1)}, {-x(1, 3), y(2)}, {x(1, 2), y(3)}});
  }
  Mat psi1() const { return Mat::from_rows(r, {{g(1, 4), g(2, 4), g(3, 4)}}); }
  Mat psi2_literal() const {
    return Mat::from_rows(r, {{g(2, 4), z, -g(3, 4)}, {-g(1, 4), -g(3, 4), z}, {z, -g(2, 4), g(1, 4)}});
  }
  Mat psi2_fixed() const {
    return Mat::from_rows(r, {{g(2, 4), z, -g(3, 4)}, {-g(1, 4), g(3, 4), z}, {z, -g(2, 4), g(1, 4)}});
  }
  Mat psi3() const { return Mat::from_rows(r, {{g(3, 4)}, {g(1, 4)}, {g(2, 4)}}); }
  Mat xi1() const {
    return Mat::from_rows(r, {{g(4, 4) + x(1, 4) * y(1), x(2, 4) * y(1), x(3, 4) * y(1), -y(1)},
                              {x(1, 4) * y(2), g(4, 4) + x(2, 4) * y(2), x(3, 4) * y(2), -y(2)},
                              {x(1, 4) * y(3), x(2, 4) * y(3), g(4, 4) + x(3, 4) * y(3), -y(3)}});
  }
  Mat xi2() const {
    return Mat::from_rows(r, {{-x(3, 4), z, y(2), -y(1), z}, {-x(1, 4), z, z, y(3), -y(2)}, {-x(2, 4), z, -y(3), z, y(1)}});
  }
  Mat xi3() const { return Mat::from_rows(r, {{c(-1), z}}); }

  ChainComplex<Q> l3() const {
    return ChainComplex<Q>(r, {GradedFreeModule({0}), GradedFreeModule({2, 2, 2}), GradedFreeModule({3, 3})},
                           {d13(), d23()});
  }
  ChainComplex<Q> c4() const {
    return ChainComplex<Q>(r,
                           {GradedFreeModule({0}), GradedFreeModule({2, 2, 2, 1}), GradedFreeModule({3, 3, 3, 3, 3}),
                            GradedFreeModule({4, 4})},
                           {eta1(), eta2(), eta3()});
  }
  ChainComplex<Q> i4() const {
    return ChainComplex<Q>(r, {GradedFreeModule({0}), GradedFreeModule({2, 2, 2}), GradedFreeModule({4, 4, 4}),
                               GradedFreeModule({6})},
                           {psi1(), psi2_fixed(), psi3()});
  }
};

template <class K>
void check_structure(const ChainComplex<K>& c) {
  auto defect = c.find_defect();
  CHECK_MESSAGE(!defect.has_value(), (defect ? defect->message : ""));
  for (std::size_t k = 2; k <= c.length(); ++k) CHECK((c.differential(k - 1) * c.differential(k)).is_zero());
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// Random graded change of basis on F_level: an elementary operation and its inverse.
template <class K>
ChainComplex<K> scramble(const ChainComplex<K>& c, std::size_t level, oracle::PolyGen<K>& gen) {
  const auto& mod = c.module(level);
  if (mod.rank() < 2) return c;
  std::size_t a = gen.uniform(0, static_cast<int>(mod.rank()) - 1), b = a;
  while (b == a) b = gen.uniform(0, static_cast<int>(mod.rank()) - 1);
  if (mod.degree(b) < mod.degree(a)) std::swap(a, b);
  auto ring = c.ring();
  auto mono = gen.monomial(mod.degree(b) - mod.degree(a), ring->num_variables());
  auto coeff = gen.coefficient();
  auto e = PolyMatrix<K>::identity(ring, mod.rank());
  auto einv = e;
  e(a, b) = Polynomial<K>::term(ring, coeff, mono);
  einv(a, b) = -e(a, b);
  auto ds = c.differentials();
  if (level >= 1) ds[level - 1] = ds[level - 1] * einv;
  if (level < c.length()) ds[level] = e * ds[level];
  return ChainComplex<K>(ring, c.modules(), ds);
}

/// Adds the trivial complex R(-deg) --1--> R(-deg) in levels level, level - 1.
template <class K>
ChainComplex<K> add_trivial(const ChainComplex<K>& c, std::size_t level, int deg) {
  auto ring = c.ring();
  auto modules = c.modules();
  auto ds = c.differentials();
  if (level > c.length()) {
    modules.push_back(GradedFreeModule());
    ds.push_back(PolyMatrix<K>(ring, modules[modules.size() - 2].rank(), 0));
  }
  auto grow = [&](const PolyMatrix<K>& m, std::size_t extra_rows, std::size_t extra_cols) {
    PolyMatrix<K> out(ring, m.rows() + extra_rows, m.cols() + extra_cols);
    out.paste(m, 0, 0);
    return out;
  };
  modules[level] = direct_sum(modules[level], GradedFreeModule({deg}));
  modules[level - 1] = direct_sum(modules[level - 1], GradedFreeModule({deg}));
  ds[level - 1] = grow(ds[level - 1], 1, 1);
  ds[level - 1](ds[level - 1].rows() - 1, ds[level - 1].cols() - 1) = Polynomial<K>::constant(ring, 1);
  if (level >= 2) ds[level - 2] = grow(ds[level - 2], 0, 1);
  if (level < ds.size()) ds[level] = grow(ds[level], 1, 0);
  return ChainComplex<K>(ring, modules, ds);
}

}  // namespace

TEST_CASE("Koszul complexes have binomial ranks and vanishing square") {
  Worked4 w;
  auto k2 = koszul(std::vector{w.g(1, 3), w.g(2, 3)});
  CHECK(k2.ranks() == std::vector<std::size_t>{1, 2, 1});
  CHECK(normalize_columns(k2.differential(2)) == normalize_columns(Mat::from_rows(w.r, {{-w.g(2, 3)}, {w.g(1, 3)}})));
  auto ky = koszul(std::vector{w.y(1), w.y(2), w.y(3), w.y(4)});
  CHECK(ky.ranks() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(betti_table(ky).totals() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  check_structure(ky);
  auto ring = oracle::letters_ring<ModP>(6, MonomialOrder::degrevlex());
  oracle::PolyGen<ModP> gen(ring, 9);
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<Polynomial<ModP>> fs;
    for (std::size_t i = 0; i < m; ++i) fs.push_back(gen.homogeneous(gen.uniform(1, 2), 2));
    auto k = koszul(fs);
    for (std::size_t j = 0; j <= m; ++j) CHECK(k.module(j).rank() == binomial(m, j));
    check_structure(k);
  }
}

TEST_CASE("Koszul complex on g14, g24, g34 matches the worked psi maps") {
  Worked4 w;
  // the transcribed psi_2 is not a complex; one sign flip repairs it
  CHECK_FALSE((w.psi1() * w.psi2_literal()).is_zero());
  CHECK((w.psi1() * w.psi2_fixed()).is_zero());
  CHECK((w.psi2_fixed() * w.psi3()).is_zero());
  auto k = koszul(std::vector{w.g(1, 4), w.g(2, 4), w.g(3, 4)});
  CHECK(k.differential(1) == w.psi1());
  CHECK(normalize_columns(k.differential(2)) == normalize_columns(w.psi2_fixed()));
  auto top = k.differential(3);
  // same relation up to the order of the basis of F_2
  CHECK(std::is_permutation(top.entries().begin(), top.entries().end(), w.psi3().entries().begin(),
                            [](const auto& a, const auto& b) { return a == b || a == -b; }));
}

TEST_CASE("tensoring the resolution of L3 with y4 gives the eta maps") {
  Worked4 w;
  auto c = tensor_length_one(w.l3(), w.y(4));
  CHECK(c.ranks() == std::vector<std::size_t>{1, 4, 5, 2});
  CHECK(c.differential(1) == w.eta1());
  CHECK(c.differential(2) == w.eta2());
  CHECK(c.differential(3) == w.eta3());
  check_structure(c);
  CHECK(verify_resolution(c, build_named_ideals(w.m).C_conjectured).passed());
}

TEST_CASE("tensor with a length-zero complex") {
  Worked4 w;
  ChainComplex<Q> r0(w.r, {GradedFreeModule({0})}, {});
  auto c = tensor_length_one(r0, w.y(2));
  CHECK(c.ranks() == std::vector<std::size_t>{1, 1});
  CHECK(c.differential(1) == Mat::from_rows(w.r, {{w.y(2)}}));
  CHECK(c.module(1).degrees() == std::vector<int>{1});
}

TEST_CASE("the worked chain map commutes and its cone minimalizes to the worked resolution") {
  Worked4 w;
  ChainMap<Q> phi{w.c4(), w.i4(), {Mat::from_rows(w.r, {{w.g(4, 4)}}), w.xi1(), w.xi2(), w.xi3()}, 2};
  CHECK_FALSE(phi.find_defect().has_value());
  CHECK(w.psi1() * w.xi1() == w.eta1().scaled(w.g(4, 4)));
  auto cone = mapping_cone(phi);
  CHECK(cone.ranks() == std::vector<std::size_t>{1, 4, 7, 6, 2});
  check_structure(cone);
  auto min = minimalize(cone);
  CHECK(min.complex.ranks() == std::vector<std::size_t>{1, 4, 7, 5, 1});
  CHECK(min.total_cancellations() == 1);
  const auto& d = min.complex;
  CHECK(d.differential(1) == Mat::from_rows(w.r, {{w.g(4, 4), w.g(1, 4), w.g(2, 4), w.g(3, 4)}}));
  Mat d2(w.r, 4, 7);
  d2.paste(-w.eta1(), 0, 0);
  d2.paste(w.xi1(), 1, 0);
  d2.paste(w.psi2_fixed(), 1, 4);
  CHECK(d.differential(2) == d2);
  Mat d3(w.r, 7, 5);
  d3.paste(-w.eta2(), 0, 0);
  d3.paste(w.xi2(), 4, 0);
  CHECK(d.differential(3) == d3);
  auto d4 = Mat::from_rows(w.r, {{w.z}, {w.y(4)}, {w.y(1)}, {w.y(2)}, {w.y(3)}});
  CHECK(normalize_columns(d.differential(4)) == normalize_columns(d4));
  CHECK(d.is_minimal());
  CHECK(verify_resolution(d, build_named_ideals(w.m).L).passed());
}

TEST_CASE("lifting g44 from the resolution of C4 to the Koszul complex of I4") {
  Worked4 w;
  auto target = koszul(std::vector{w.g(1, 4), w.g(2, 4), w.g(3, 4)});
  auto phi = lift_chain_map(w.c4(), target, w.g(4, 4));
  CHECK_FALSE(phi.find_defect().has_value());
  CHECK(target.differential(1) * phi.maps[1] == phi.maps[0] * w.c4().differential(1));
  auto cone = mapping_cone(phi);
  CHECK(cone.ranks() == std::vector<std::size_t>{1, 4, 7, 6, 2});
  check_structure(cone);
  auto named = build_named_ideals(w.m);
  CHECK(verify_resolution(cone, named.L).passed());
  auto min = minimalize(cone);
  CHECK(min.complex.ranks() == std::vector<std::size_t>{1, 4, 7, 5, 1});
  CHECK(min.complex.is_minimal());
  CHECK(verify_resolution(min.complex, named.L).passed());
  CHECK(oracle::resolves_up_to(min.complex, named.L.generators(), 5));
  auto d4 = Mat::from_rows(w.r, {{w.z}, {w.y(4)}, {w.y(1)}, {w.y(2)}, {w.y(3)}});
  CHECK(normalize_columns(min.complex.differential(4)) == normalize_columns(d4));
}

TEST_CASE("lifting fails when multiplication is not well defined") {
  Worked4 w;
  auto source = koszul(std::vector{w.y(1)});
  auto target = koszul(std::vector{w.y(2)});
  CHECK_THROWS_AS(lift_chain_map(source, target, w.y(3)), MathError);
}

TEST_CASE("lifting the identity gives invertible maps") {
  Worked4 w;
  auto c = w.l3();
  auto phi = lift_chain_map(c, c, w.c(1));
  CHECK_FALSE(phi.find_defect().has_value());
  std::vector<std::uint32_t> point(w.r->num_variables());
  for (std::size_t i = 0; i < point.size(); ++i) point[i] = static_cast<std::uint32_t>(17 * i + 5);
  for (std::size_t k = 0; k <= c.length(); ++k) CHECK(evaluated_rank(phi.maps[k], point, 32003) == c.module(k).rank());
}

TEST_CASE("cone over a zero map from a zero complex leaves the target") {
  Worked4 w;
  auto target = w.l3();
  ChainComplex<Q> zero(w.r, {GradedFreeModule()}, {});
  ChainMap<Q> phi{zero, target, {Mat(w.r, 1, 0)}, 0};
  auto cone = mapping_cone(phi);
  REQUIRE(cone.length() >= target.length());
  for (std::size_t k = 0; k <= target.length(); ++k) CHECK(cone.module(k) == target.module(k));
  for (std::size_t k = 1; k <= target.length(); ++k) CHECK(cone.differential(k) == target.differential(k));
}

TEST_CASE("minimalize leaves minimal complexes alone") {
  Worked4 w;
  auto k = koszul(std::vector{w.y(1), w.y(2), w.y(3)});
  auto res = minimalize(k);
  CHECK(res.complex == k);
  CHECK(res.total_cancellations() == 0);
}

TEST_CASE("constructor rejects broken complexes") {
  Worked4 w;
  auto bad = w.d23();
  bad(0, 0) = bad(0, 0) + w.y(1);
  CHECK_THROWS_AS(ChainComplex<Q>(w.r, w.l3().modules(), {w.d13(), bad}), InvalidComplex);
  CHECK_THROWS_AS(ChainComplex<Q>(w.r, {GradedFreeModule({0}), GradedFreeModule({2, 2, 3})}, {w.d13()}), InvalidComplex);
  CHECK_THROWS_AS(ChainComplex<Q>(w.r, {GradedFreeModule({0}), GradedFreeModule({2, 2})}, {w.d13()}), InvalidComplex);
  auto broken = ChainComplex<Q>::unchecked(w.r, w.l3().modules(), {w.d13(), bad});
  auto defect = broken.find_defect();
  REQUIRE(defect.has_value());
  CHECK(defect->kind == ComplexDefect::Kind::composition);
  CHECK(defect->level == 2);
}

TEST_CASE("verify_resolution on good and bad inputs") {
  Worked4 w;
  auto named = build_named_ideals(SkewModel<Q>(3));
  SkewModel<Q> m3(3);
  auto l3 = ChainComplex<Q>(m3.ring(), {GradedFreeModule({0}), GradedFreeModule({2, 2, 2}), GradedFreeModule({3, 3})},
                            {Mat::from_rows(m3.ring(), {m3.generators(3)}),
                             Mat::from_rows(m3.ring(), {{m3.x(2, 3), m3.y(1)}, {-m3.x(1, 3), m3.y(2)}, {m3.x(1, 2), m3.y(3)}})});
  auto good = verify_resolution(l3, named.L);
  CHECK(good.passed());
  CHECK(good.cokernel_ok);
  CHECK(good.exact_at == std::vector<bool>{true, true});
  CHECK(good.rank_checks.size() == 3);

  SUBCASE("corrupted d23 entry") {
    auto d2 = l3.differential(2);
    d2(1, 0) = d2(1, 0) + m3.y(3);
    auto report = verify_resolution(ChainComplex<Q>::unchecked(m3.ring(), l3.modules(), {l3.differential(1), d2}), named.L);
    CHECK_FALSE(report.passed());
    CHECK_FALSE(report.structure_ok);
    REQUIRE(report.defect.has_value());
    CHECK(report.defect->level == 2);
    REQUIRE_FALSE(report.failures.empty());
    CHECK(report.failures[0].find("d_2") != std::string::npos);
  }
  SUBCASE("missing syzygy") {
    auto d2 = l3.differential(2).without_column(1);
    ChainComplex<Q> c(m3.ring(), {l3.module(0), l3.module(1), GradedFreeModule({3})}, {l3.differential(1), d2});
    auto report = verify_resolution(c, named.L);
    CHECK_FALSE(report.passed());
    CHECK(report.structure_ok);
    CHECK(report.exact_at[0] == false);
  }
  SUBCASE("wrong cokernel") {
    auto report = verify_resolution(l3, named.I);
    CHECK_FALSE(report.passed());
    CHECK_FALSE(report.cokernel_ok);
  }
  SUBCASE("Koszul complex of I4 resolves I4") {
    auto n4 = build_named_ideals(w.m);
    CHECK(verify_resolution(koszul(n4.I.generators()), n4.I).passed());
  }
}

TEST_CASE("Betti tables") {
  Worked4 w;
  SkewModel<Q> m3(3);
  auto l3 = ChainComplex<Q>(m3.ring(), {GradedFreeModule({0}), GradedFreeModule({2, 2, 2}), GradedFreeModule({3, 3})},
                            {Mat::from_rows(m3.ring(), {m3.generators(3)}),
                             Mat::from_rows(m3.ring(), {{m3.x(2, 3), m3.y(1)}, {-m3.x(1, 3), m3.y(2)}, {m3.x(1, 2), m3.y(3)}})});
  auto t = betti_table(l3);
  CHECK(t.totals() == std::vector<std::size_t>{1, 3, 2});
  CHECK(t.at(1, 2) == 3);
  CHECK(t.at(2, 3) == 2);
  CHECK(t.at(2, 4) == 0);
  CHECK(t.to_string() ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
  ChainMap<Q> phi{w.c4(), w.i4(), {Mat::from_rows(w.r, {{w.g(4, 4)}}), w.xi1(), w.xi2(), w.xi3()}, 2};
  CHECK_THROWS_AS(betti_table(mapping_cone(phi)), MathError);
}

TEST_CASE("property: minimalize removes trivial summands and preserves homology") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto ring = oracle::letters_ring<ModP>(4, MonomialOrder::degrevlex());
    oracle::PolyGen<ModP> gen(ring, seed);
    std::vector<Polynomial<ModP>> fs;
    int count = gen.uniform(2, 4);
    for (int i = 0; i < count; ++i) fs.push_back(gen.homogeneous(1, 3));
    auto base = minimalize(koszul(fs)).complex;
    auto c = base;
    int added = gen.uniform(1, 3);
    for (int i = 0; i < added; ++i) {
      std::size_t level = gen.uniform(2, static_cast<int>(c.length()) + 1);
      c = add_trivial(c, level, static_cast<int>(level) + gen.uniform(0, 1));
    }
    for (int i = 0; i < 6; ++i) c = scramble(c, gen.uniform(1, static_cast<int>(c.length())), gen);
    CAPTURE(seed);
    check_structure(c);
    auto min = minimalize(c);
    check_structure(min.complex);
    CHECK(min.complex.is_minimal());
    CHECK(min.total_cancellations() == static_cast<std::size_t>(added));
    CHECK(betti_table(min.complex) == betti_table(base));
    for (int d = 0; d <= 4; ++d) {
      auto a = oracle::homology_in_degree(min.complex, d), b = oracle::homology_in_degree(c, d);
      a.resize(std::max(a.size(), b.size()));
      b.resize(a.size());
      CHECK(a == b);
    }
  }
}

TEST_CASE("property: cone bookkeeping on random lifts") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto ring = oracle::letters_ring<ModP>(5, MonomialOrder::degrevlex());
    oracle::PolyGen<ModP> gen(ring, seed);
    // resolutions of <a, b> and <a, b, c>; multiplication by c maps the first into the second
    std::vector<Polynomial<ModP>> small{gen.homogeneous(1, 2), gen.homogeneous(1, 2)};
    auto big = small;
    big.push_back(gen.homogeneous(1, 2));
    auto f = gen.homogeneous(1, 2);
    auto src = koszul(std::vector{small[0], small[1]});
    auto tgt = koszul(std::vector{small[0], small[1], f * big[2]});
    auto phi = lift_chain_map(src, tgt, Polynomial<ModP>::constant(ring, 1));
    CAPTURE(seed);
    CHECK_FALSE(phi.find_defect().has_value());
    auto cone = mapping_cone(phi);
    check_structure(cone);
    for (std::size_t k = 1; k <= cone.length(); ++k) {
      std::size_t s = k - 1 <= src.length() ? src.module(k - 1).rank() : 0;
      std::size_t t = k <= tgt.length() ? tgt.module(k).rank() : 0;
      CHECK(cone.module(k).rank() == s + t);
    }
  }
}
