#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "comvar/groebner.hpp"

namespace comvar {

// Coordinates used throughout:
//   sl2:        [[x_i, y_i], [z_i, -x_i]]                 vars x1 y1 z1 x2 ...
//   gl2:        [[a_i, b_i], [c_i, d_i]]                  vars a1 b1 c1 d1 ...
//   sl3 u:      x_i at (2,1), y_i at (3,1), z_i at (3,2)  vars x1 y1 z1 ...
//   sl3:        m<i>_<rc> for rc in 11 12 13 21 22 23 31 32, and the (3,3)
//               entry is -(m<i>_11 + m<i>_22)

enum class Family {
  Sl2Comm,
  Sl2NilComm,
  Gl2Comm,
  Sl3UComm,
  Sl3NilComm,
  Mixed,
  FamilyF,
  SubregComponent,
  CutComponent,
};

/// Names a catalog variety, e.g. "sl2-nilcomm:r=3", "mixed:i=1,j=2",
/// "family-f:r=2,label=Chain1_1", "subreg:r=2,j=1", "cut:r=2,v=2".
struct VarietyId {
  Family family = Family::Sl2Comm;
  int r = 1;
  /// Mixed: i nilpotent tuples then j sl2 tuples (r = i + j).
  /// SubregComponent: j selects the plane (1 or 2).
  /// CutComponent: j selects V1, V2 or V3.
  int i = 0;
  int j = 0;
  /// Mixed only: 0 = whole variety, 1 = nilpotent component,
  /// 2 = zero-times-sl2 component.
  int component = 0;
  /// FamilyF member label: I_m, P_m, Chain1_m, Chain2_n or MaxIdeal.
  std::string label;

  static VarietyId parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const VarietyId&, const VarietyId&) = default;
};

// --- rings ---------------------------------------------------------------

Ring sl2_ring(int r, const FieldSpec& field);
Ring gl2_ring(int r, const FieldSpec& field);
/// sl2^r coordinates followed by the traces s1..sr (target of the split map).
Ring sl2_affine_ring(int r, const FieldSpec& field);
Ring sl3_ring(int r, const FieldSpec& field);

// --- builders ------------------------------------------------------------

/// Quadrics x_i y_j - x_j y_i, y_i z_j - y_j z_i, x_i z_j - x_j z_i, i < j.
IdealPresentation build_sl2_comm(int r, const FieldSpec& field);
/// 2-minors of the 3×r matrix with rows (x_i), (y_i), (z_i).
IdealPresentation sl2_comm_by_minors(int r, const FieldSpec& field);
/// build_sl2_comm plus x_i^2 + y_i z_i for each i.
IdealPresentation build_sl2_nilcomm(int r, const FieldSpec& field);
/// Entries of [v_i, v_j] for 2×2 matrices, i < j (the (2,2) entry repeats
/// the (1,1) entry up to sign and is omitted).
IdealPresentation build_gl2_comm(int r, const FieldSpec& field);
/// x_i z_j - x_j z_i, i < j; the y_i are free.
IdealPresentation build_sl3_u_comm(int r, const FieldSpec& field);
/// 2-minors of the 2×r matrix with rows (x_i), (z_i).
IdealPresentation sl3_u_comm_by_minors(int r, const FieldSpec& field);
/// Commutator entries (all but (3,3)) for i < j, plus tr(A_i^2) and det(A_i).
/// Needs characteristic 0 or p > 3.
IdealPresentation build_sl3_nilcomm(int r, const FieldSpec& field);
/// Commutator entries plus all 2-minors of each matrix: the rank ≤ 1
/// commuting tuples, i.e. the union of both subregular components.
IdealPresentation build_sl3_subreg_comm(int r, const FieldSpec& field);

// gl2 <-> sl2 × A^r. Points are flat coordinate vectors in ring order.
std::vector<Coeff> gl2_split(std::span<const Coeff> gl2_point, const FieldSpec& field);
std::vector<Coeff> gl2_unsplit(std::span<const Coeff> split_point, const FieldSpec& field);
/// Images of a_i, b_i, c_i, d_i as polynomials in sl2_affine_ring (φ⁻¹).
std::vector<Polynomial> gl2_unsplit_images(int r, const FieldSpec& field);
/// Images of x_i, y_i, z_i, s_i as polynomials in gl2_ring (φ).
std::vector<Polynomial> gl2_split_images(int r, const FieldSpec& field);

struct MixedPresentation {
  IdealPresentation mixed;
  /// C_{i+j}(N): nilcomm generators on every tuple, radical closure.
  IdealPresentation nilpotent_component;
  /// 0^i × C_j(sl2).
  IdealPresentation zero_sl2_component;
};

/// i nilpotent tuples followed by j sl2 tuples.
MixedPresentation build_mixed(int i, int j, const FieldSpec& field);

struct FamilyFMember {
  std::string label;
  IdealPresentation presentation;
};

/// I_m, P_m (1 ≤ m ≤ r), Chain1_m (1 ≤ m ≤ r), Chain2_n (0 ≤ n ≤ r), MaxIdeal.
std::vector<FamilyFMember> build_family_F(int r, const FieldSpec& field);
/// Nilcomm generators plus x_j, y_j, z_j for j ≤ r - m, radical closure.
IdealPresentation family_I(int r, int m, const FieldSpec& field);
/// Σ_{i≤m} ⟨x_i, y_i, z_i⟩ + Σ_{j>m} ⟨x_j - y_j, y_j + z_j⟩; m = 0 allowed.
IdealPresentation family_P(int r, int m, const FieldSpec& field);

struct CutComponents {
  IdealPresentation v1;
  IdealPresentation v2;
  IdealPresentation v3;
};

/// Components of C_r(N) ∩ V(y_1 + z_1); needs r ≥ 2.
CutComponents build_cut_components(int r, const FieldSpec& field);

/// Integer 3×3 matrix, row-major.
using IntMatrix3 = std::array<std::array<long, 3>, 3>;

struct SubregDescriptor {
  int component = 1;
  /// Fixed subregular nilpotent placed in the first tuple slot.
  IntMatrix3 v_sub{};
  /// Basis of the plane W_j inside z_sub ∩ closure(O_sub) used for the
  /// remaining r - 1 slots.
  std::array<IntMatrix3, 2> plane{};
};

/// W_1 = span(E21, E31), W_2 = span(E21, E23); v_sub = E21.
std::array<SubregDescriptor, 2> build_subreg_components(int r);

enum class ObligationKind { Member, RadicalMember, RadicalNonMember, NonMember };

struct Obligation {
  std::string label;
  ObligationKind kind;
  Polynomial f;
  IdealPresentation ideal;
};

/// Every membership obligation behind the principal-radical-system check.
std::vector<Obligation> appendix_cases(int r, const FieldSpec& field);

/// Generated ideal for any catalog id with an ideal (all but subregular
/// components, whose id yields build_sl3_subreg_comm).
IdealPresentation build(const VarietyId& id, const FieldSpec& field);

}  // namespace comvar
