#include "skewres/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace skewres {

namespace {

template <class K>
void sort_and_combine(const Ring<K>& ring, std::vector<Term<K>>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term<K>& a, const Term<K>& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term<K> acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

// Merge a + s * b where s is a scalar and b is shifted by monomial m.
template <class K>
std::vector<Term<K>> merge_axpy(const Ring<K>& ring, const std::vector<Term<K>>& a, const K& s, const Monomial* m,
                                const std::vector<Term<K>>& b) {
  std::vector<Term<K>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have = false;
  auto fetch = [&]() {
    if (j < b.size()) {
      shifted = m ? b[j].mono * *m : b[j].mono;
      have = true;
    } else {
      have = false;
    }
  };
  fetch();
  while (i < a.size() && have) {
    auto c = ring.compare(a[i].mono, shifted);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({s * b[j].coeff, shifted});
      ++j;
      fetch();
    } else {
      K sum = a[i].coeff + s * b[j].coeff;
      if (!sum.is_zero()) out.push_back({std::move(sum), shifted});
      ++i;
      ++j;
      fetch();
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (have) {
    out.push_back({s * b[j].coeff, shifted});
    ++j;
    fetch();
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (c != '/') return false;
  }
  return digit;
}

}  // namespace

template <class K>
void check_same_ring(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (!a.ring() || !b.ring()) return;
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("polynomials live in different rings");
}

template <class K>
const RingPtr<K>& Polynomial<K>::common_ring(const Polynomial& o) const {
  check_same_ring(*this, o);
  return ring_ ? ring_ : o.ring_;
}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const K& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, Monomial()});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, std::size_t index) {
  if (index >= ring->num_variables()) throw MathError("variable index out of range");
  K one = ring->scalar(1);
  return term(std::move(ring), one, Monomial::variable(index));
}

template <class K>
Polynomial<K> Polynomial<K>::term(RingPtr<K> ring, const K& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
  sort_and_combine(*ring, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

template <class K>
Polynomial<K> Polynomial<K>::from_sorted_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

template <class K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

template <class K>
int Polynomial<K>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

template <class K>
const Term<K>& Polynomial<K>::leading_term() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return terms_.front();
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& o) {
  auto ring = common_ring(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = Polynomial(ring, o.terms_);
  terms_ = merge_axpy(*ring, terms_, ring->scalar(1), nullptr, o.terms_);
  ring_ = ring;
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator-=(const Polynomial& o) {
  auto ring = common_ring(o);
  if (o.is_zero()) return *this;
  terms_ = merge_axpy(*ring, terms_, ring->scalar(-1), nullptr, o.terms_);
  ring_ = ring;
  return *this;
}

template <class K>
Polynomial<K> Polynomial<K>::times(const Polynomial& o) const {
  auto ring = common_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring);
  if (terms_.size() == 1) return o.mul_term(terms_[0].coeff, terms_[0].mono);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].coeff, o.terms_[0].mono);
  std::vector<Term<K>> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
  }
  sort_and_combine(*ring, prod);
  return Polynomial(ring, std::move(prod));
}

template <class K>
Polynomial<K>& Polynomial<K>::operator*=(const Polynomial& o) {
  return *this = times(o);
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const K& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::mul_term(const K& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff *= c;
    t.mono = t.mono * m;
  }
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

template <class K>
Polynomial<K> Polynomial<K>::sub_mul(const K& c, const Monomial& m, const Polynomial& g) const {
  auto ring = common_ring(g);
  return Polynomial(ring, merge_axpy(*ring, terms_, -c, &m, g.terms_));
}

template <class K>
Polynomial<K> Polynomial<K>::in_ring(const RingPtr<K>& target) const {
  if (ring_ && ring_->same_as(*target)) return Polynomial(target, terms_);
  if (is_zero()) return Polynomial(target);
  if (ring_->field() != target->field()) throw RingMismatch("cannot move a polynomial between fields");
  std::vector<Term<K>> out;
  out.reserve(terms_.size());
  if (ring_->same_registry(*target)) {
    out = terms_;
  } else {
    const auto& from = ring_->variables();
    constexpr std::size_t kUnmapped = ~std::size_t{0};
    std::vector<std::size_t> map(from.size(), kUnmapped);
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < from.size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (map[i] == kUnmapped) {
          auto j = target->variables().index_of(from.name(i));
          if (!j) throw RingMismatch("variable '" + from.name(i) + "' missing from target ring");
          map[i] = *j;
        }
        m.set(map[i], t.mono[i]);
      }
      out.push_back({t.coeff, m});
    }
  }
  return from_terms(target, std::move(out));
}

template <class K>
K Polynomial<K>::evaluate(const std::vector<K>& point) const {
  K total = ring_ ? ring_->scalar(0) : K{};
  for (const auto& t : terms_) {
    K v = t.coeff;
    for (std::size_t i = 0; i < point.size() && i < kMaxVariables; ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    total += v;
  }
  return total;
}

template <class K>
std::string scalar_to_string(const K& c) {
  return c.to_string();
}

std::string monomial_to_string(const Monomial& m, const VariableRegistry& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i : vars.display_order()) {
    unsigned e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string c = scalar_to_string(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    std::string mag = negative ? c.substr(1) : c;
    std::string piece;
    if (t.mono.is_one()) piece = mag;
    else if (mag == "1") piece = monomial_to_string(t.mono, ring_->variables());
    else piece = mag + "*" + monomial_to_string(t.mono, ring_->variables());
    if (negative) out += '-';
    else if (!out.empty()) out += '+';
    out += piece;
  }
  return out;
}

template <class K>
Polynomial<K> Polynomial<K>::parse(const RingPtr<K>& ring, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial text");
  std::vector<Term<K>> terms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      if (text[pos] == '-') negative = !negative;
      ++pos;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view body = trim(text.substr(pos, end - pos));
    if (body.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
    K coeff = ring->scalar(negative ? -1 : 1);
    Monomial mono;
    std::size_t fpos = 0;
    while (fpos <= body.size()) {
      std::size_t star = body.find('*', fpos);
      if (star == std::string_view::npos) star = body.size();
      std::string_view factor = trim(body.substr(fpos, star - fpos));
      if (factor.empty()) throw ParseError("empty factor in '" + std::string(body) + "'");
      if (is_number(factor)) {
        coeff *= ring->parse_scalar(factor);
      } else {
        std::string_view name = factor;
        unsigned exponent = 1;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
          name = trim(factor.substr(0, caret));
          auto digits = trim(factor.substr(caret + 1));
          if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("bad exponent in '" + std::string(factor) + "'");
          }
          exponent = static_cast<unsigned>(std::stoul(std::string(digits)));
        }
        auto idx = ring->variables().index_of(name);
        if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
        mono = mono * Monomial::variable(*idx, exponent);
      }
      fpos = star + 1;
    }
    terms.push_back({coeff, mono});
    pos = end;
  }
  return from_terms(ring, std::move(terms));
}

template <class K>
DivisionResult<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors) {
  RingPtr<K> ring = f.ring();
  for (const auto& d : divisors) {
    if (d.is_zero()) throw MathError("division by the zero polynomial");
    check_same_ring(f, d);
    if (!ring) ring = d.ring();
  }
  DivisionResult<K> result;
  result.quotients.assign(divisors.size(), Polynomial<K>(ring));
  std::vector<std::vector<Term<K>>> qterms(divisors.size());
  std::vector<Term<K>> rterms;
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    const Term<K> lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& dl = divisors[i].leading_term();
      if (dl.mono.divides(lt.mono)) {
        K c = lt.coeff / dl.coeff;
        Monomial m = lt.mono / dl.mono;
        qterms[i].push_back({c, m});
        p = p.sub_mul(c, m, divisors[i]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rterms.push_back(lt);
      p = Polynomial<K>::from_sorted_terms(ring, std::vector<Term<K>>(p.terms().begin() + 1, p.terms().end()));
    }
  }
  // Quotient terms arrive in strictly decreasing order per divisor.
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    result.quotients[i] = Polynomial<K>::from_sorted_terms(ring, std::move(qterms[i]));
  }
  result.remainder = Polynomial<K>::from_sorted_terms(ring, std::move(rterms));
  return result;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  check_same_ring(f, g);
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial l = lcm(lf.mono, lg.mono);
  auto a = f.mul_term(lf.coeff.inverse(), l / lf.mono);
  return a.sub_mul(lg.coeff.inverse(), l / lg.mono, g);
}

template <class K>
Polynomial<K> exact_quotient(const Polynomial<K>& f, const Polynomial<K>& g) {
  auto r = divide(f, {g});
  if (!r.remainder.is_zero()) throw MathError("inexact division: " + g.to_string() + " does not divide " + f.to_string());
  return r.quotients[0];
}

#define SKEWRES_INSTANTIATE(K)                                                                        \
  template class Polynomial<K>;                                                                       \
  template void check_same_ring(const Polynomial<K>&, const Polynomial<K>&);                          \
  template DivisionResult<K> divide(const Polynomial<K>&, const std::vector<Polynomial<K>>&);          \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&);                     \
  template Polynomial<K> exact_quotient(const Polynomial<K>&, const Polynomial<K>&);                   \
  template std::string scalar_to_string(const K&);

SKEWRES_INSTANTIATE(Rational)
SKEWRES_INSTANTIATE(ModP)

}  // namespace skewres
