#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comvar/field.hpp"

namespace comvar {

using Exponent = std::int32_t;

enum class OrderKind { Lex, GrevLex, Block };

/// Monomial order on dense exponent vectors.
///
/// Block(k) compares the first k variables by graded reverse lex and breaks
/// ties on the remaining variables, again by graded reverse lex, so any
/// monomial involving one of the first k variables beats every monomial in
/// the remaining ones.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::size_t block_split = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::Block, k}; }

  /// "lex", "grevlex" or "block:<k>".
  static MonomialOrder parse(std::string_view text);
  std::string to_string() const;

  std::strong_ordering compare(std::span<const Exponent> a,
                               std::span<const Exponent> b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  long total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) reversed: this / d.
  Monomial operator/(const Monomial& d) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Shared, immutable ring descriptor: variable names, field and order.
/// Copies are cheap handles; equality is structural.
class Ring {
 public:
  Ring() = default;

  std::size_t arity() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const FieldSpec& field() const { return data_->field; }
  const MonomialOrder& order() const { return data_->order; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// index_of or throw std::invalid_argument.
  std::size_t require(std::string_view name) const;

  /// Same variables and field under a different order.
  Ring with_order(MonomialOrder order) const;
  bool valid() const noexcept { return data_ != nullptr; }

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::vector<std::string> names;
    FieldSpec field;
    MonomialOrder order;
  };
  explicit Ring(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  friend Ring make_ring(std::vector<std::string>, FieldSpec, MonomialOrder);

  std::shared_ptr<const Data> data_;
};

/// Throws std::invalid_argument on an empty or duplicated name list, on names
/// that are not identifiers, or on a block split outside [1, arity).
/// Characteristic 2 is accepted; see FieldSpec::allows_sl2.
Ring make_ring(std::vector<std::string> names, FieldSpec field,
               MonomialOrder order = MonomialOrder::grevlex());

bool is_identifier(std::string_view s);

}  // namespace comvar
