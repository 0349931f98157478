#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace skewres {

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  Rational inverse() const;

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  /// Residue modulo p, or nothing when p divides the denominator.
  std::optional<std::uint32_t> residue(std::uint32_t p) const;

  std::string to_string() const;
  static Rational parse(std::string_view text);

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

/// Residue class modulo a prime p < 2^31, value kept in [0, p).
///
/// A default-constructed ModP is an unbound zero (p = 0); binary operations
/// take the modulus from whichever operand carries one.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t p);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  std::uint32_t prime() const { return p_; }
  ModP inverse() const;

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t symmetric() const;

  std::string to_string() const;

  ModP operator-() const { return ModP(v_ == 0 ? 0u : p_ - v_, p_, Raw{}); }
  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

 private:
  struct Raw {};
  ModP(std::uint32_t v, std::uint32_t p, Raw) : v_(v), p_(p) {}

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& a) { return os << a.to_string(); }

enum class FieldKind { rational, prime };

/// Which coefficient field a ring uses.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t prime = kDefaultPrime;

  static FieldSpec rationals() { return {FieldKind::rational, kDefaultPrime}; }
  static FieldSpec prime_field(std::uint32_t p = kDefaultPrime);

  /// "QQ" or "ZZ/p".
  std::string name() const;
  /// Accepts "q", "QQ", "fp", "fp:<p>", "ZZ/<p>".
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && (a.kind == FieldKind::rational || a.prime == b.prime);
  }
};

bool is_prime(std::uint32_t p);

/// Compile-time link between a coefficient type and its field kind.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr FieldKind kind = FieldKind::rational;
  static Rational from_int(std::int64_t v, const FieldSpec&) { return Rational(static_cast<long>(v)); }
  static Rational parse(std::string_view text, const FieldSpec&) { return Rational::parse(text); }
};

template <>
struct FieldTraits<ModP> {
  static constexpr FieldKind kind = FieldKind::prime;
  static ModP from_int(std::int64_t v, const FieldSpec& f) { return ModP(v, f.prime); }
  static ModP parse(std::string_view text, const FieldSpec& f);
};

}  // namespace skewres
