#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewres {

/// Upper bound on the number of ring variables (n = 10 needs 55, plus one
/// auxiliary variable for elimination).
inline constexpr std::size_t kMaxVariables = 64;

/// Dense exponent vector with cached total degree and support mask.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned exponent);

  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// Product; throws MathError when an exponent would exceed 255.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; precondition b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) { return (a.support_ & b.support_) == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVariables) == 0;
  }

  /// Degree restricted to the variables in `mask`.
  unsigned degree_in(std::uint64_t mask) const;

  const std::uint8_t* data() const { return exps_.data(); }

 private:
  void refresh();

  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint64_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Global monomial order. Variable 0 is the largest variable.
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  /// Product order: degrevlex on `first_block` variables, then degrevlex on the rest.
  /// Any monomial involving a first-block variable exceeds every monomial free of them.
  static MonomialOrder block_elimination(std::uint64_t first_block) { return MonomialOrder(Kind::block, first_block); }

  Kind kind() const { return kind_; }
  std::uint64_t first_block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex:
        return compare_lex(a, b);
      case Kind::degrevlex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        return compare_revlex(a, b, ~std::uint64_t{0});
      case Kind::block:
        return compare_block(a, b);
    }
    return std::strong_ordering::equal;
  }

  /// "lex", "degrevlex" or "block:<hex mask>".
  std::string to_string() const;
  static MonomialOrder parse(std::string_view text);

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind kind, std::uint64_t block) : kind_(kind), block_(block) {}

  static std::strong_ordering compare_lex(const Monomial& a, const Monomial& b);
  static std::strong_ordering compare_revlex(const Monomial& a, const Monomial& b, std::uint64_t mask);
  std::strong_ordering compare_block(const Monomial& a, const Monomial& b) const;

  Kind kind_;
  std::uint64_t block_;
};

/// Ordered list of variable names. Index 0 is the largest variable in every
/// order; `display_order` fixes the order in which factors are printed.
class VariableRegistry {
 public:
  explicit VariableRegistry(std::vector<std::string> names, std::vector<std::size_t> display_order = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& display_order() const { return display_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Copy with one extra variable appended (displayed last).
  VariableRegistry with_variable(std::string name) const;
  /// A name not yet registered, derived from `stem`.
  std::string fresh_name(std::string_view stem) const;

  friend bool operator==(const VariableRegistry& a, const VariableRegistry& b) {
    return a.names_ == b.names_ && a.display_ == b.display_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> display_;
};

}  // namespace skewres
