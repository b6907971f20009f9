#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "comvar/field.hpp"
#include "comvar/ring.hpp"

namespace comvar {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a Ring. Terms are stored without zero
/// coefficients, without duplicate monomials, and sorted descending in the
/// ring's monomial order, so terms().front() is the leading term.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Combines duplicate monomials, reduces coefficients into the field and
  /// drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, Coeff c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, std::string_view name);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  /// Precondition: !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }

  long total_degree() const;
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_monomial(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned e) const;
  /// Scale so the leading coefficient is 1 (identity on zero).
  Polynomial monic() const;

  Coeff evaluate(std::span<const Coeff> point) const;
  Polynomial derivative(std::size_t var) const;

  /// Same terms, re-sorted for another ring with identical variables and
  /// field (order may differ).
  Polynomial reinterpreted(const Ring& target) const;

  /// poly-core text syntax, e.g. "3*x1^2*y2 - 1/2*z3". Prime-field
  /// coefficients print as symmetric residues.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// a op b; throws RingMismatch when the rings differ.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Remainder of multivariate division of f by divisors, taking the first
/// listed divisor whose leading monomial divides the current leading term.
/// The remainder has no term divisible by any divisor's leading monomial.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// Substitute images[i] (all in one target ring) for variable i of f's ring.
Polynomial ring_map(const Polynomial& f, std::span<const Polynomial> images);
/// Same, with an explicit target ring so that a zero polynomial image list
/// still has a home.
Polynomial ring_map(const Polynomial& f, const Ring& target,
                    std::span<const Polynomial> images);

/// Move f into target, matching variables by name. Every variable of f's
/// ring must exist in target; the fields must agree.
Polynomial rename_into(const Polynomial& f, const Ring& target);

/// Throws ParseError (line 1, column of the offending character) on bad input.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

}  // namespace comvar
