#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comvar/catalog.hpp"

namespace comvar {

/// Polynomial map from integer parameters onto (a dense subset of) a catalog
/// variety or one of its components. Everything is over Q.
///
///   sl2-comm       A = [[p, q], [w, -p]], tuple i = b_i A
///   sl2-nilcomm    A = [[a b, -a^2], [b^2, -a b]], tuple i = c_i A
///   gl2-comm       tuple i = al_i I + b_i [[p, q], [w, -p]]
///   sl3-u-comm     (x_i, y_i, z_i) = (c_i s, y_i, c_i t)
///   sl3-nilcomm    tuple i = g u_i g^-1, u_i as in sl3-u-comm, g = U L with
///                  U, L products of the three upper / lower elementary
///                  unipotents
///   subreg j       g (c0 E21) g^-1, then g (a_k P + b_k Q) g^-1 where
///                  (P, Q) = (E21, E31) for j = 1 and (E21, E23) for j = 2
///   mixed          component 1: sl2-nilcomm on all i + j tuples;
///                  component 2: zero on the first i tuples, sl2-comm after
///   cut V1         zero first tuple, sl2-nilcomm on the rest
///   cut V2, V3     tuple i = t_i [[1, 1], [-1, -1]], t_i [[1, -1], [1, -1]]
struct Parametrization {
  VarietyId variety;
  /// Empty for irreducible targets; "1"/"2" for the components of mixed ids.
  std::string component_tag;
  Ring parameter_ring;
  /// Coordinate ring of the variety (the catalog ring, over Q).
  Ring ambient;
  /// coordinates[v] is ambient variable v as a polynomial in the parameters.
  std::vector<Polynomial> coordinates;

  std::size_t parameter_count() const { return parameter_ring.arity(); }
  std::vector<Coeff> evaluate(std::span<const long> params) const;
};

/// One parametrization per listed component (two for mixed:…,component=0).
/// Throws std::invalid_argument for family-f ids.
std::vector<Parametrization> parametrize_components(const VarietyId& id);

/// The unique parametrization; throws if id has several components.
Parametrization parametrize(const VarietyId& id);

struct VarietySample {
  std::vector<Coeff> point;
  std::vector<long> parameters;
  std::uint64_t seed = 0;
  std::string component_tag;
};

/// count samples, cycling through the components. Parameters are uniform in
/// [-999, 999] with zero draws rejected. Every point is checked to annihilate
/// the generators of build(id, Q); a failure throws std::logic_error.
std::vector<VarietySample> sample(const VarietyId& id, std::size_t count, std::uint64_t seed);

/// JSON array of points, each a list of "p/q" (or integer) strings.
std::string samples_to_json(const std::vector<VarietySample>& samples);

/// Rank of the degree-n evaluation matrix M[s, mu] = mu(point_s) for one
/// seed. When the monomial count is at most exact_limit the rank is the exact
/// Bareiss rank over Q of a matrix with (monomials + 4) samples. Otherwise
/// samples are added in batches until the rank falls below the sample count
/// (or reaches the monomial count), and the rank of the Gram matrix
/// G[s, s'] = <P_s, P_s'>^n is taken modulo a 32-bit prime; that value is a
/// lower bound for the rank over Q and equals it for generic samples.
struct HfRank {
  std::size_t rank = 0;
  std::size_t samples = 0;
  std::size_t monomials = 0;
  bool exact = false;
};

HfRank hilbert_rank(const VarietyId& id, int n, std::uint64_t seed,
                    std::size_t max_samples = 0, std::size_t exact_limit = 120);

/// dim k[V]_n from two seeds (seed and seed + 1). Throws OracleDisagreement
/// carrying both values if they differ.
std::size_t hilbert_function_by_evaluation(const VarietyId& id, int n, std::size_t sample_count,
                                           std::uint64_t seed);

/// Maximum, over trials and components, of the exact rank of the Jacobian of
/// the parametrization at random integer parameters: a lower bound for the
/// dimension that is attained at generic parameters.
std::size_t jacobian_rank_dimension(const VarietyId& id, int trials, std::uint64_t seed);

/// Component labels (1-based) whose defining conditions hold at point:
///   mixed     1: every tuple nilpotent; 2: first i tuples vanish
///   subreg    1: the 3r×3 stack of the matrices has rank <= 1 (common row
///             space); 2: the 3×3r stack has rank <= 1 (common column space)
///   cut       1: first tuple zero; 2: y = x, z = -x; 3: y = -x, z = x
///   otherwise {1}
/// Throws std::invalid_argument if the point is not on the variety.
std::vector<int> component_membership(std::span<const Coeff> point, const VarietyId& id);

}  // namespace comvar
