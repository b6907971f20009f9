#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace comvar {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Exact rank by fraction-free (Bareiss) elimination. Rows may have any
/// common length; an empty matrix has rank 0.
std::size_t rank_bareiss(IntMatrix m);

/// Exact rank over Q: each row is scaled by the lcm of its denominators,
/// then rank_bareiss.
std::size_t rank_rational(const RatMatrix& m);

/// Rank over GF(p), p < 2^32. Entries must already be reduced mod p.
std::size_t rank_mod_p(ModMatrix m, std::uint64_t p);

/// Residue of a rational mod p; throws std::domain_error if p divides the
/// denominator.
std::uint64_t reduce_mod_p(const mpq_class& q, std::uint64_t p);

}  // namespace comvar
