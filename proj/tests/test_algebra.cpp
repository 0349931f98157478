#include <doctest.h>

#include <thread>

#include "skewres/budget.hpp"
#include "support/oracles.hpp"

using namespace skewres;

namespace {

RingPtr<Rational> abc_lex() { return oracle::letters_ring<Rational>(3, MonomialOrder::lex()); }

Polynomial<Rational> P(const RingPtr<Rational>& r, std::string_view s) { return Polynomial<Rational>::parse(r, s); }

Monomial M(std::initializer_list<unsigned> exps) {
  Monomial m;
  std::size_t i = 0;
  for (auto e : exps) m.set(i++, e);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(mpz_class(6), mpz_class(-4));
  CHECK(a.to_string() == "-3/2");
  CHECK(a.denominator() == 2);
  CHECK((a * a.inverse()).is_one());
  CHECK((a + Rational(mpz_class(3), mpz_class(2))).is_zero());
  CHECK(Rational::parse("10/4") == Rational(mpz_class(5), mpz_class(2)));
  CHECK(Rational(mpz_class(1), mpz_class(3)).residue(32003) == oracle::inv_mod(3, 32003));
  CHECK_FALSE(Rational(mpz_class(1), mpz_class(32003)).residue(32003).has_value());
  CHECK_THROWS_AS(Rational(0).inverse(), MathError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("prime field arithmetic matches integer arithmetic mod p") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    auto x = dist(rng), y = dist(rng);
    ModP a(x, 32003), b(y, 32003);
    CHECK((a + b).value() == oracle::reduce(x + y));
    CHECK((a - b).value() == oracle::reduce(x - y));
    CHECK((a * b).value() == oracle::reduce(x % 32003 * (y % 32003)));
    if (!b.is_zero()) CHECK((a / b * b) == a);
  }
  CHECK(ModP(32002, 32003).symmetric() == -1);
  CHECK(ModP(-1, 7).to_string() == "-1");
  CHECK_THROWS_AS(ModP(0, 7).inverse(), MathError);
}

TEST_CASE("field specs parse and print") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("QQ").name() == "QQ");
  CHECK(FieldSpec::parse("fp").name() == "ZZ/32003");
  CHECK(FieldSpec::parse("fp:101").prime == 101);
  CHECK(FieldSpec::parse("ZZ/7").name() == "ZZ/7");
  CHECK_THROWS_AS(FieldSpec::parse("fp:100"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("reals"), ParseError);
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("monomial orders on small examples") {
  auto lex = MonomialOrder::lex();
  auto drl = MonomialOrder::degrevlex();
  // a > b > c
  CHECK(lex.compare(M({1, 0, 0}), M({0, 5, 0})) > 0);
  CHECK(drl.compare(M({1, 0, 0}), M({0, 5, 0})) < 0);
  // degrevlex: ab > ac? smallest variable c has exponent 1 in ac, so ab wins
  CHECK(drl.compare(M({1, 1, 0}), M({1, 0, 1})) > 0);
  CHECK(drl.compare(M({0, 2, 0}), M({1, 0, 1})) > 0);
  CHECK(lex.compare(M({0, 2, 0}), M({1, 0, 1})) < 0);
  auto block = MonomialOrder::block_elimination(0b001);
  CHECK(block.compare(M({1, 0, 0}), M({0, 4, 4})) > 0);
  CHECK(block.compare(M({0, 2, 0}), M({0, 1, 1})) > 0);
  CHECK(MonomialOrder::parse("degrevlex") == drl);
  CHECK(MonomialOrder::parse(block.to_string()) == block);
  CHECK_THROWS(MonomialOrder::parse("grlex"));
}

TEST_CASE("monomial operations") {
  auto a = M({2, 1, 0}), b = M({1, 3, 1});
  CHECK(lcm(a, b) == M({2, 3, 1}));
  CHECK(gcd(a, b) == M({1, 1, 0}));
  CHECK(M({1, 1, 0}).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a * b) / b == a);
  CHECK(coprime(M({1, 0, 0}), M({0, 0, 2})));
  CHECK(a.degree() == 3);
  CHECK_THROWS_AS(Monomial::variable(0, 200) * Monomial::variable(0, 100), MathError);
}

TEST_CASE("polynomial text round trip and canonical form") {
  auto r = abc_lex();
  auto f = P(r, "3*b^2 - a*c + 1/2 + a*c + a");
  CHECK(f.to_string() == "a+3*b^2+1/2");
  CHECK(P(r, f.to_string()) == f);
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "-a + a").is_zero());
  CHECK(P(r, "2*a*b").leading_coefficient() == Rational(2));
  CHECK_THROWS_AS(P(r, "a + z"), ParseError);
  CHECK_THROWS_AS(P(r, "a +"), ParseError);
  CHECK_THROWS_AS(P(r, ""), ParseError);
  CHECK_THROWS_AS(Polynomial<Rational>(r).leading_term(), MathError);
}

TEST_CASE("polynomial degree and homogeneity") {
  auto r = abc_lex();
  CHECK(P(r, "a*b + c^2").is_homogeneous());
  CHECK_FALSE(P(r, "a*b + c").is_homogeneous());
  CHECK(P(r, "a*b + c").degree() == 2);
  CHECK(Polynomial<Rational>(r).degree() == -1);
}

TEST_CASE("polynomials from different rings do not mix") {
  auto r1 = abc_lex();
  auto r2 = oracle::letters_ring<Rational>(3, MonomialOrder::degrevlex());
  CHECK_THROWS_AS(P(r1, "a") + Polynomial<Rational>::parse(r2, "a"), RingMismatch);
  auto moved = P(r1, "a*b + c^3").in_ring(r2);
  CHECK(moved.to_string() == "c^3+a*b");
  CHECK(moved.in_ring(r1) == P(r1, "a*b + c^3"));
}

TEST_CASE("division satisfies f = sum q_i d_i + r with reduced remainder") {
  auto r = abc_lex();
  auto f = P(r, "a^2*b + a*b^2 + b^2");
  std::vector<Polynomial<Rational>> ds{P(r, "a*b - 1"), P(r, "b^2 - 1")};
  auto res = divide(f, ds);
  CHECK(res.quotients[0] * ds[0] + res.quotients[1] * ds[1] + res.remainder == f);
  CHECK(res.remainder == P(r, "a + b + 1"));
}

TEST_CASE("s-polynomial and exact quotient") {
  auto r = abc_lex();
  auto s = s_polynomial(P(r, "a*b - c"), P(r, "a^2 - b"));
  CHECK(s == P(r, "-a*c + b^2"));
  CHECK(exact_quotient(P(r, "a^2 - b^2"), P(r, "a + b")) == P(r, "a - b"));
  CHECK_THROWS_AS(exact_quotient(P(r, "a^2 + b"), P(r, "a + b")), MathError);
}

TEST_CASE("polynomial matrices") {
  auto r = abc_lex();
  auto a = PolyMatrix<Rational>::from_rows(r, {{P(r, "a"), P(r, "b")}, {P(r, "c"), P(r, "0")}});
  auto id = PolyMatrix<Rational>::identity(r, 2);
  CHECK(a * id == a);
  CHECK((a - a).is_zero());
  auto sq = a * a;
  CHECK(sq(0, 0) == P(r, "a^2 + b*c"));
  CHECK(sq(1, 1) == P(r, "b*c"));
  CHECK(a.without_row(0).rows() == 1);
  CHECK(a.without_column(1).column(0) == ModuleElement<Rational>{P(r, "a"), P(r, "c")});
  CHECK_THROWS(a * PolyMatrix<Rational>(r, 3, 1));
}

TEST_CASE("evaluated rank agrees with elimination on the evaluated entries") {
  auto r = oracle::letters_ring<ModP>(4, MonomialOrder::degrevlex());
  oracle::PolyGen<ModP> gen(r, 11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = gen.uniform(1, 4), cols = gen.uniform(1, 4);
    PolyMatrix<ModP> m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen.poly(2, 2);
    }
    // force a rank drop half of the time
    if (trial % 2 && rows > 1) {
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * m(0, 0) - m(0, j) * m(0, 0);
    }
    std::vector<std::uint32_t> point;
    for (int v = 0; v < 4; ++v) point.push_back(static_cast<std::uint32_t>(gen.uniform(1, 30000)));
    std::vector<std::vector<std::uint32_t>> evaluated(rows, std::vector<std::uint32_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) evaluated[i][j] = oracle::evaluate(oracle::sparse(m(i, j), 4), point);
    }
    CHECK(evaluated_rank(m, point, 32003) == oracle::rank_mod_p(evaluated));
  }
}

TEST_CASE("budget scopes nest and expire") {
  CHECK_FALSE(GroebnerBudget::current().has_value());
  {
    GroebnerBudget outer(std::chrono::milliseconds(5000));
    {
      GroebnerBudget inner(std::chrono::milliseconds(0));
      CHECK(GroebnerBudget::current() == std::chrono::milliseconds(0));
      auto d = Deadline::from_budget();
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
      CHECK_THROWS_AS(d.check("test"), BudgetExceeded);
    }
    CHECK(GroebnerBudget::current() == std::chrono::milliseconds(5000));
  }
  CHECK_FALSE(GroebnerBudget::current().has_value());
}

// Property tests: ring axioms and order laws on random elements.

TEST_CASE("property: polynomial ring axioms") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto r = oracle::letters_ring<Rational>(4, seed % 2 ? MonomialOrder::lex() : MonomialOrder::degrevlex());
    oracle::PolyGen<Rational> gen(r, seed);
    auto f = gen.poly(5, 3), g = gen.poly(5, 3), h = gen.poly(5, 3);
    CAPTURE(seed);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Polynomial<Rational>(r));
    CHECK(f * Polynomial<Rational>::constant(r, 1) == f);
    CHECK(P(r, f.to_string()) == f);
  }
}

TEST_CASE("property: multiplication agrees with schoolbook oracle mod p") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto r = oracle::letters_ring<ModP>(5, MonomialOrder::degrevlex());
    oracle::PolyGen<ModP> gen(r, seed);
    auto f = gen.poly(6, 4), g = gen.poly(6, 4);
    CHECK(oracle::sparse(f * g, 5) == oracle::multiply(oracle::sparse(f, 5), oracle::sparse(g, 5)));
  }
}

TEST_CASE("property: monomial orders are total, multiplicative and well founded") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> e(0, 3);
  auto rand_mono = [&] { return M({e(rng), e(rng), e(rng), e(rng)}); };
  for (auto order : {MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::block_elimination(0b0011)}) {
    for (int i = 0; i < 300; ++i) {
      auto a = rand_mono(), b = rand_mono(), c = rand_mono();
      auto ab = order.compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(b, a) == (0 <=> ab));
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(a * c, a) >= 0);
      if (ab > 0 && order.compare(b, c) > 0) CHECK(order.compare(a, c) > 0);
    }
  }
}

TEST_CASE("property: division identity and remainder reducedness") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto r = oracle::letters_ring<Rational>(3, MonomialOrder::degrevlex());
    oracle::PolyGen<Rational> gen(r, seed);
    auto f = gen.poly(6, 4);
    std::vector<Polynomial<Rational>> ds;
    for (int i = 0; i < 3; ++i) {
      auto d = gen.poly(3, 2);
      if (!d.is_zero()) ds.push_back(d);
    }
    auto res = divide(f, ds);
    Polynomial<Rational> sum = res.remainder;
    for (std::size_t i = 0; i < ds.size(); ++i) sum += res.quotients[i] * ds[i];
    CAPTURE(seed);
    CHECK(sum == f);
    for (const auto& t : res.remainder.terms()) {
      for (const auto& d : ds) CHECK_FALSE(d.leading_monomial().divides(t.mono));
    }
  }
}
