#include "skewres/field.hpp"

#include <charconv>

#include "skewres/error.hpp"

namespace skewres {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::optional<std::uint32_t> Rational::residue(std::uint32_t p) const {
  std::uint32_t den = reduce_mod(q_.get_den(), p);
  if (den == 0) return std::nullopt;
  std::uint64_t num = reduce_mod(q_.get_num(), p);
  return static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
}

std::string Rational::to_string() const { return q_.get_str(10); }

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  mpz_class den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(trim(text.substr(0, slash))), den);
}

ModP::ModP(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p == 0) throw MathError("ModP needs a modulus");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

ModP ModP::inverse() const {
  if (v_ == 0) throw MathError("inverse of zero");
  return ModP(inverse_mod(v_, p_), p_, Raw{});
}

std::int64_t ModP::symmetric() const {
  if (v_ > p_ / 2) return static_cast<std::int64_t>(v_) - p_;
  return v_;
}

std::string ModP::to_string() const { return std::to_string(symmetric()); }

ModP& ModP::operator+=(const ModP& o) {
  if (p_ == 0) p_ = o.p_;
  std::uint64_t s = std::uint64_t{v_} + o.v_;
  if (s >= p_) s -= p_;
  v_ = static_cast<std::uint32_t>(s);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  if (p_ == 0) p_ = o.p_;
  v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  if (p_ == 0) p_ = o.p_;
  v_ = p_ == 0 ? 0 : static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
  return *this;
}

ModP FieldTraits<ModP>::parse(std::string_view text, const FieldSpec& f) {
  Rational q = Rational::parse(text);
  auto r = q.residue(f.prime);
  if (!r) throw ParseError("denominator vanishes modulo " + std::to_string(f.prime));
  return ModP(*r, f.prime);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw MathError("not a usable prime: " + std::to_string(p));
  return {FieldKind::prime, p};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::rational ? "QQ" : "ZZ/" + std::to_string(prime);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  if (text == "fp" || text == "p") return prime_field();
  std::string_view digits;
  if (text.rfind("fp:", 0) == 0) digits = text.substr(3);
  else if (text.rfind("ZZ/", 0) == 0) digits = text.substr(3);
  else throw ParseError("unknown field '" + std::string(text) + "'");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("bad prime in field '" + std::string(text) + "'");
  }
  if (!is_prime(p) || p >= (1u << 31)) throw ParseError("not a usable prime: " + std::to_string(p));
  return prime_field(p);
}

}  // namespace skewres
