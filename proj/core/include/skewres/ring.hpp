#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string_view>

#include "skewres/error.hpp"
#include "skewres/field.hpp"
#include "skewres/monomial.hpp"

namespace skewres {

template <class K>
class Ring;

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

/// Polynomial ring K[vars] with a fixed monomial order. Immutable; shared by
/// every polynomial that lives in it.
template <class K>
class Ring {
 public:
  using Scalar = K;

  Ring(std::shared_ptr<const VariableRegistry> vars, MonomialOrder order, FieldSpec field)
      : vars_(std::move(vars)), order_(order), field_(field) {
    if (field_.kind != FieldTraits<K>::kind) throw MathError("field spec does not match coefficient type");
  }

  static RingPtr<K> make(VariableRegistry vars, MonomialOrder order, FieldSpec field) {
    return std::make_shared<const Ring<K>>(std::make_shared<const VariableRegistry>(std::move(vars)), order, field);
  }

  const VariableRegistry& variables() const { return *vars_; }
  const std::shared_ptr<const VariableRegistry>& registry() const { return vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  const MonomialOrder& order() const { return order_; }
  const FieldSpec& field() const { return field_; }

  K scalar(std::int64_t v) const { return FieldTraits<K>::from_int(v, field_); }
  K parse_scalar(std::string_view text) const { return FieldTraits<K>::parse(text, field_); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  /// Same variables and field, different order.
  RingPtr<K> with_order(const MonomialOrder& order) const {
    return std::make_shared<const Ring<K>>(vars_, order, field_);
  }

  bool same_as(const Ring& other) const {
    return this == &other ||
           ((vars_ == other.vars_ || *vars_ == *other.vars_) && order_ == other.order_ && field_ == other.field_);
  }
  bool same_registry(const Ring& other) const {
    return (vars_ == other.vars_ || *vars_ == *other.vars_) && field_ == other.field_;
  }

 private:
  std::shared_ptr<const VariableRegistry> vars_;
  MonomialOrder order_;
  FieldSpec field_;
};

}  // namespace skewres
