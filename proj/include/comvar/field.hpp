#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace comvar {

using Coeff = mpq_class;

inline constexpr std::uint32_t kDefaultPrime = 32003;

enum class FieldKind { Rationals, PrimeField };

/// Coefficient field: Q or GF(p) for a prime p < 2^31.
///
/// Elements of GF(p) are carried as canonical integers in [0, p) inside an
/// mpq_class so that the public polynomial type is field-agnostic; the
/// Gröbner kernel switches to machine words for prime fields.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws std::invalid_argument unless p is prime and below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q", "Q", "p=<prime>", "<prime>" and "mod <prime>".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }

  /// Builders for sl2/gl2 varieties reject characteristic 2.
  bool allows_sl2() const noexcept { return p_ != 2; }

  /// Reduce an arbitrary rational into this field's canonical form.
  /// Throws std::domain_error if the denominator vanishes mod p.
  void normalize(Coeff& c) const;
  Coeff from_integer(long v) const;
  Coeff inverse(const Coeff& c) const;

  /// Symmetric representative in (-p/2, p/2] for prime fields; identity on Q.
  Coeff display_value(const Coeff& c) const;

  /// "q" or "p=<prime>", the form used by ideal files.
  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace comvar
