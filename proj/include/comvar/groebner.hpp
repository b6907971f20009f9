#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comvar/polynomial.hpp"
#include "comvar/ring.hpp"

namespace comvar {

/// Caps for a single Gröbner computation. Zero disables a cap.
struct GbBudget {
  std::uint64_t max_pairs = 1'000'000;
  double max_seconds = 0.0;
};

struct GbStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t zero_reductions = 0;
  std::size_t basis_size = 0;
  std::size_t max_basis_size = 0;
  double seconds = 0.0;
};

/// Generators of an ideal plus the radical-closure flag. With the flag set
/// the intended ideal is the radical of the generated one, and membership
/// must be decided by radical_member.
struct IdealPresentation {
  Ring ring;
  std::vector<Polynomial> generators;
  bool radical_closure = false;

  IdealPresentation() = default;
  IdealPresentation(Ring r, std::vector<Polynomial> gens, bool radical = false);

  /// Sum of ideals; radical_closure is kept if either operand carries it.
  IdealPresentation operator+(const IdealPresentation& other) const;
  IdealPresentation plus(std::vector<Polynomial> extra) const;
  bool is_homogeneous() const;

  friend bool operator==(const IdealPresentation&, const IdealPresentation&) = default;
};

/// Reduced Gröbner basis of the generated ideal in the ring's order.
class GroebnerBasis {
 public:
  GroebnerBasis(IdealPresentation source, std::vector<Polynomial> basis, GbStats stats);

  const Ring& ring() const { return source_.ring; }
  const IdealPresentation& source() const { return source_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const GbStats& stats() const { return stats_; }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

 private:
  IdealPresentation source_;
  std::vector<Polynomial> basis_;
  GbStats stats_;
};

/// Reduced Gröbner basis of ⟨I.generators⟩ (the radical flag is ignored:
/// the basis is always of the generated ideal). Throws BudgetExceeded.
GroebnerBasis buchberger(const IdealPresentation& I, const GbBudget& budget = {});

/// Reduced basis of an arbitrary polynomial list.
std::vector<Polynomial> reduced_basis(const Ring& ring, std::span<const Polynomial> gens,
                                      const GbBudget& budget = {}, GbStats* stats = nullptr);

/// S-polynomial of two nonzero polynomials (leading terms cancel).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// True iff every pairwise S-polynomial of basis reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// f ∈ ⟨G⟩, decided by normal form against the basis.
bool ideal_member(const Polynomial& f, const GroebnerBasis& G);

/// Membership in the intended ideal: routes through radical_member when
/// I.radical_closure is set.
bool ideal_member(const Polynomial& f, const IdealPresentation& I, const GbBudget& budget = {});

/// f ∈ √⟨I.generators⟩ via 1 ∈ ⟨I⟩ + ⟨1 - t f⟩ in the ring extended by a
/// fresh variable t (graded reverse lex).
bool radical_member(const Polynomial& f, const IdealPresentation& I,
                    const GbBudget& budget = {});

/// Generators of ⟨I⟩ ∩ k[kept variables], from a block-order basis. The
/// returned presentation lives in the ring of kept variables, in their
/// original relative order.
IdealPresentation eliminate(const IdealPresentation& I, std::span<const std::string> drop,
                            const GbBudget& budget = {});

/// I ∩ J as ⟨t·I, (1 - t)·J⟩ ∩ k[original variables].
IdealPresentation intersect_ideals(const IdealPresentation& I, const IdealPresentation& J,
                                   const GbBudget& budget = {});

/// √I = √J, checked generator-wise in both directions.
bool ideal_equal_radical(const IdealPresentation& I, const IdealPresentation& J,
                         const GbBudget& budget = {});

/// Equality of generated ideals, by comparing reduced bases.
bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J,
                 const GbBudget& budget = {});

}  // namespace comvar
