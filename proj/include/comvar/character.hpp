#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace comvar {

/// Finitely supported SL2 character: weight -> multiplicity. Weights are
/// integers with alpha = 2, so chi(n alpha) lives on even weights.
struct Sl2Character {
  std::map<int, std::uint64_t> multiplicities;

  std::uint64_t dimension() const;
  bool is_symmetric() const;
  Sl2Character& operator+=(const Sl2Character& o);
  Sl2Character scaled(std::uint64_t k) const;

  friend bool operator==(const Sl2Character&, const Sl2Character&) = default;
};

/// P_r(n): number of r-tuples of nonnegative integers summing to n, from the
/// closed form binomial(n + r - 1, r - 1).
std::uint64_t partition_count(int r, int n);

/// Same count by explicit enumeration of the tuples.
std::uint64_t partition_count_enumerated(int r, int n);

/// chi(n alpha): multiplicity 1 on weights -2n, -2n + 2, ..., 2n.
Sl2Character weyl_character(int n);

struct CharacterSeries {
  int r = 1;
  /// degrees[n] = P_r(n) chi(n alpha).
  std::vector<Sl2Character> degrees;

  std::vector<std::uint64_t> dimensions() const;
};

CharacterSeries character_series(int r, int N);

/// degree -> (m -> multiplicity of chi(m alpha) in that degree).
using MultiplicityTable = std::map<int, std::map<int, std::uint64_t>>;

/// Peels chi(m alpha) off each degree from the top weight down. Throws
/// std::invalid_argument if some degree is not a nonnegative combination of
/// the chi(m alpha).
MultiplicityTable decompose_good_filtration(const std::vector<Sl2Character>& degrees);

/// m -> total multiplicity of chi(m alpha) over all degrees.
std::map<int, std::uint64_t> total_multiplicities(const MultiplicityTable& table);

}  // namespace comvar
