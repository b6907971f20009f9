#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "comvar/groebner.hpp"

namespace comvar {

/// Graded dimensions of R/I as numerator(t) / (1 - t)^denominator_power,
/// with common factors of (1 - t) cancelled.
struct HilbertData {
  std::vector<std::int64_t> numerator;
  int denominator_power = 0;
  /// Krull dimension of the quotient; -1 for the unit ideal (empty variety).
  long dimension = -1;
  /// First N coefficients of the series expansion.
  std::vector<std::int64_t> coefficients;
};

/// Numerator K(t) of the Hilbert series of k[x_1..x_n]/M, i.e. the series is
/// K(t)/(1-t)^n, before any cancellation. M is given by generators (not
/// necessarily minimal). Recursion: K(M) = K(M + ⟨x⟩) + t·K(M : x), pivoting
/// on the variable that occurs in the most minimal generators.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators,
                                            std::size_t nvars);

/// Hilbert series of R/⟨G⟩ from the leading-term ideal. Throws
/// std::invalid_argument unless the basis is homogeneous.
HilbertData hilbert_series(const GroebnerBasis& G, std::size_t N);

/// Krull dimension of R/⟨I.generators⟩ (-1 for the unit ideal). Uses a
/// graded reverse lex basis, so non-homogeneous input is fine.
long krull_dimension(const IdealPresentation& I, const GbBudget& budget = {});

/// Dimension read from an existing basis; the ring order must be graded
/// (anything but Lex or Block).
long krull_dimension(const GroebnerBasis& G);

/// Expand numerator/(1-t)^power to N coefficients.
std::vector<std::int64_t> series_coefficients(const std::vector<std::int64_t>& numerator,
                                              int power, std::size_t N);

}  // namespace comvar
