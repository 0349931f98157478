#include "skewres/monomial.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

#include "skewres/error.hpp"

namespace skewres {

namespace {

std::uint64_t load_word(const std::uint8_t* p) {
  std::uint64_t w;
  std::memcpy(&w, p, sizeof w);
  return w;
}

constexpr std::size_t kWords = kMaxVariables / 8;

}  // namespace

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= kMaxVariables) throw MathError("variable index out of range");
  if (exponent > 255) throw MathError("exponent exceeds 255");
  exps_[i] = static_cast<std::uint8_t>(exponent);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= std::uint64_t{1} << i;
  }
}

unsigned Monomial::degree_in(std::uint64_t mask) const {
  unsigned d = 0;
  std::uint64_t bits = support_ & mask;
  while (bits != 0) {
    int i = std::countr_zero(bits);
    d += exps_[i];
    bits &= bits - 1;
  }
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  if (a.degree_ + b.degree_ > 255) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (unsigned{a.exps_[i]} + b.exps_[i] > 255) throw MathError("exponent exceeds 255");
    }
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] + b.exps_[i]);
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
  r.degree_ = a.degree_ - b.degree_;
  r.support_ = 0;
  std::uint64_t bits = a.support_;
  while (bits != 0) {
    int i = std::countr_zero(bits);
    if (r.exps_[i] != 0) r.support_ |= std::uint64_t{1} << i;
    bits &= bits - 1;
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t w = 0; w < kWords; ++w) {
    h ^= load_word(m.data() + 8 * w);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering MonomialOrder::compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t w = 0; w < kWords; ++w) {
    std::uint64_t x = load_word(a.data() + 8 * w);
    std::uint64_t y = load_word(b.data() + 8 * w);
    if (x != y) {
      std::size_t i = 8 * w + std::countr_zero(x ^ y) / 8;
      return a[i] <=> b[i];
    }
  }
  return std::strong_ordering::equal;
}

// Reverse lexicographic tie-break among the variables in `mask`: the monomial
// with the smaller exponent in the last differing variable is larger.
std::strong_ordering MonomialOrder::compare_revlex(const Monomial& a, const Monomial& b, std::uint64_t mask) {
  if (mask == ~std::uint64_t{0}) {
    for (std::size_t w = kWords; w-- > 0;) {
      std::uint64_t x = load_word(a.data() + 8 * w);
      std::uint64_t y = load_word(b.data() + 8 * w);
      if (x != y) {
        std::size_t i = 8 * w + (63 - std::countl_zero(x ^ y)) / 8;
        return b[i] <=> a[i];
      }
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (((mask >> i) & 1) == 0) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare_block(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree_in(block_), db = b.degree_in(block_);
  if (da != db) return da <=> db;
  if (auto c = compare_revlex(a, b, block_); c != 0) return c;
  unsigned ra = a.degree() - da, rb = b.degree() - db;
  if (ra != rb) return ra <=> rb;
  return compare_revlex(a, b, ~block_);
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::block: {
      char buf[32];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, block_, 16);
      (void)ec;
      return "block:" + std::string(buf, ptr);
    }
  }
  return {};
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "degrevlex" || text == "grevlex" || text == "dp") return degrevlex();
  if (text.rfind("block:", 0) == 0) {
    std::uint64_t mask = 0;
    auto digits = text.substr(6);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mask, 16);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return block_elimination(mask);
  }
  throw ParseError("unknown monomial order '" + std::string(text) + "'");
}

VariableRegistry::VariableRegistry(std::vector<std::string> names, std::vector<std::size_t> display_order)
    : names_(std::move(names)), display_(std::move(display_order)) {
  if (names_.size() > kMaxVariables) {
    throw MathError("too many variables: " + std::to_string(names_.size()) + " > " + std::to_string(kMaxVariables));
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) throw MathError("duplicate or empty variable name '" + n + "'");
  }
  if (display_.empty()) {
    display_.resize(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) display_[i] = i;
  }
  auto sorted = display_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != names_.size() || sorted[i] != i) throw MathError("display order is not a permutation");
  }
}

std::optional<std::size_t> VariableRegistry::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VariableRegistry VariableRegistry::with_variable(std::string name) const {
  auto names = names_;
  auto display = display_;
  display.push_back(names.size());
  names.push_back(std::move(name));
  return VariableRegistry(std::move(names), std::move(display));
}

std::string VariableRegistry::fresh_name(std::string_view stem) const {
  std::string candidate(stem);
  while (index_of(candidate)) candidate += '_';
  return candidate;
}

}  // namespace skewres
