#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "comvar/catalog.hpp"
#include "comvar/errors.hpp"
#include "comvar/hilbert.hpp"

using namespace comvar;

namespace {

const FieldSpec kFp = FieldSpec::prime(32003);
const FieldSpec kQ = FieldSpec::rationals();

Polynomial P(const Ring& r, std::string_view text) { return parse_polynomial(r, text); }

bool contains_generators(const IdealPresentation& big, const IdealPresentation& small) {
  return std::all_of(small.generators.begin(), small.generators.end(), [&](const Polynomial& g) {
    return std::find(big.generators.begin(), big.generators.end(), g) != big.generators.end();
  });
}

}  // namespace

TEST_CASE("variety ids round-trip") {
  for (std::string s : {"sl2-comm:r=3", "sl2-nilcomm:r=1", "gl2-comm:r=2", "sl3-u-comm:r=4",
                        "sl3-nilcomm:r=2", "mixed:i=1,j=2", "mixed:i=2,j=1,component=2",
                        "family-f:r=2,label=Chain1_1", "subreg:r=2,j=1", "cut:r=2,v=V3"}) {
    CHECK(VarietyId::parse(s).to_string() == s);
  }
  CHECK(VarietyId::parse("cut:r=2,v=2").j == 2);
  CHECK(VarietyId::parse("mixed:i=1,j=3").r == 4);
  CHECK_THROWS(VarietyId::parse("sl4-comm:r=2"));
  CHECK_THROWS(VarietyId::parse("sl2-comm"));
  CHECK_THROWS(VarietyId::parse("sl2-comm:r=0"));
  CHECK_THROWS(VarietyId::parse("mixed:i=0,j=2"));
  CHECK_THROWS(VarietyId::parse("subreg:r=2,j=3"));
  CHECK_THROWS(VarietyId::parse("sl2-comm:r=x"));
  CHECK_THROWS(VarietyId::parse("sl2-comm:r=2,q=1"));
}

TEST_CASE("sl2 commuting variety: generator counts and the minor construction") {
  CHECK(build_sl2_comm(1, kFp).generators.empty());
  CHECK(build_sl2_comm(2, kFp).generators.size() == 3);
  CHECK(build_sl2_comm(3, kFp).generators.size() == 9);
  auto J2 = build_sl2_comm(2, kQ);
  CHECK(J2.generators[0] == P(J2.ring, "x1*y2 - x2*y1"));
  CHECK(J2.generators[1] == P(J2.ring, "y1*z2 - y2*z1"));
  CHECK(J2.generators[2] == P(J2.ring, "x1*z2 - x2*z1"));
  for (int r = 1; r <= 4; ++r) {
    CHECK(build_sl2_comm(r, kQ).generators == sl2_comm_by_minors(r, kQ).generators);
  }
  CHECK_THROWS_AS(build_sl2_comm(2, FieldSpec::prime(2)), CharacteristicError);
}

TEST_CASE("sl2 nilpotent commuting variety") {
  auto r1 = build_sl2_nilcomm(1, kQ);
  REQUIRE(r1.generators.size() == 1);
  CHECK(r1.generators[0] == P(r1.ring, "x1^2 + y1*z1"));
  CHECK(build_sl2_nilcomm(2, kQ).generators.size() == 5);
  CHECK_FALSE(build_sl2_nilcomm(2, kQ).radical_closure);
  CHECK_THROWS_AS(build_sl2_nilcomm(3, FieldSpec::prime(2)), CharacteristicError);
}

TEST_CASE("gl2: commutator entries and the split maps") {
  auto I = build_gl2_comm(2, kQ);
  CHECK(I.ring.arity() == 8);
  CHECK(I.generators.size() == 3);

  std::vector<Coeff> e11{Coeff(1), Coeff(0), Coeff(0), Coeff(0)};
  auto s = gl2_split(e11, kQ);
  CHECK(s == std::vector<Coeff>{Coeff(1, 2), Coeff(0), Coeff(0), Coeff(1)});
  CHECK(gl2_unsplit(s, kQ) == e11);

  // φ and φ⁻¹ as ring maps compose to the identity.
  auto split = gl2_split_images(2, kQ);
  auto unsplit = gl2_unsplit_images(2, kQ);
  Ring G = gl2_ring(2, kQ);
  for (std::size_t v = 0; v < G.arity(); ++v) {
    auto there = ring_map(Polynomial::variable(G, v), unsplit);
    CHECK(ring_map(there, G, split) == Polynomial::variable(G, v));
  }
  CHECK_THROWS_AS(build_gl2_comm(2, FieldSpec::prime(2)), CharacteristicError);
}

TEST_CASE("sl3 u: generators are the 2-minors of the (x, z) matrix") {
  CHECK(build_sl3_u_comm(1, kQ).generators.empty());
  auto r2 = build_sl3_u_comm(2, kQ);
  REQUIRE(r2.generators.size() == 1);
  CHECK(r2.generators[0] == P(r2.ring, "x1*z2 - x2*z1"));
  for (int r = 1; r <= 4; ++r) {
    CHECK(build_sl3_u_comm(r, kQ).generators == sl3_u_comm_by_minors(r, kQ).generators);
  }
  CHECK_NOTHROW(build_sl3_u_comm(2, FieldSpec::prime(2)));
}

TEST_CASE("sl3 nilpotent commuting variety: counts and small characteristic") {
  auto r1 = build_sl3_nilcomm(1, kFp);
  CHECK(r1.ring.arity() == 8);
  CHECK(r1.generators.size() == 2);
  CHECK(build_sl3_nilcomm(2, kFp).generators.size() == 12);
  CHECK(krull_dimension(r1) == 6);
  CHECK_THROWS_AS(build_sl3_nilcomm(1, FieldSpec::prime(3)), CharacteristicError);
  CHECK_THROWS_AS(build_sl3_nilcomm(1, FieldSpec::prime(2)), CharacteristicError);
  CHECK_NOTHROW(build_sl3_nilcomm(1, FieldSpec::prime(5)));
}

TEST_CASE("mixed varieties") {
  auto m = build_mixed(1, 1, kQ);
  REQUIRE(m.mixed.generators.size() == 4);
  CHECK(m.mixed.generators[0] == P(m.mixed.ring, "x1^2 + y1*z1"));
  CHECK(m.nilpotent_component.radical_closure);
  CHECK(krull_dimension(build_mixed(1, 2, kFp).nilpotent_component) == 4);
  CHECK(krull_dimension(build_mixed(1, 2, kFp).zero_sl2_component) == 4);
  CHECK(krull_dimension(build_mixed(2, 1, kFp).mixed) == 4);
  CHECK_THROWS(build_mixed(0, 1, kQ));
}

TEST_CASE("family F: membership list and flags") {
  auto F = build_family_F(2, kFp);
  std::vector<std::string> labels;
  for (const auto& m : F) labels.push_back(m.label);
  CHECK(labels == std::vector<std::string>{"I_1", "I_2", "P_1", "P_2", "Chain1_1", "Chain1_2",
                                           "Chain2_0", "Chain2_1", "Chain2_2", "MaxIdeal"});
  for (const auto& m : F) {
    const bool expect_radical = m.label[0] == 'I' || m.label.starts_with("Chain");
    CHECK(m.presentation.radical_closure == expect_radical);
  }
  CHECK(build_family_F(3, kFp).size() == 3 + 3 + 3 + 4 + 1);
}

TEST_CASE("family F: quotient dimensions and inclusions") {
  const int r = 3;
  auto F = build_family_F(r, kFp);
  auto get = [&](const std::string& label) {
    for (const auto& m : F) {
      if (m.label == label) return m.presentation;
    }
    FAIL("missing " << label);
    return IdealPresentation();
  };
  for (int m = 1; m <= r; ++m) CHECK(krull_dimension(get("P_" + std::to_string(m))) == r - m);
  CHECK(krull_dimension(get("MaxIdeal")) == 0);
  CHECK(krull_dimension(get("I_" + std::to_string(r))) == r + 1);

  const auto maxideal = get("MaxIdeal");
  auto Gmax = buchberger(maxideal);
  for (const auto& m : F) {
    for (const auto& g : m.presentation.generators) CHECK(ideal_member(g, Gmax));
  }
  for (int m = 1; m < r; ++m) {
    CHECK(contains_generators(get("Chain1_" + std::to_string(m + 1)),
                              get("Chain1_" + std::to_string(m))));
  }
  for (int n = 0; n < r; ++n) {
    CHECK(contains_generators(get("Chain2_" + std::to_string(n + 1)),
                              get("Chain2_" + std::to_string(n))));
  }
}

TEST_CASE("cut components at r = 2") {
  auto c = build_cut_components(2, kFp);
  const Ring& R = c.v1.ring;
  CHECK(c.v1.generators == std::vector<Polynomial>{P(R, "x1"), P(R, "y1"), P(R, "z1"),
                                                   P(R, "x2^2 + y2*z2")});
  auto maxideal = build_family_F(2, kFp).back().presentation;
  CHECK(ideal_equal_radical(c.v2 + c.v3, maxideal));
  auto line = IdealPresentation(R, {P(R, "x1"), P(R, "y1"), P(R, "z1"), P(R, "y2 - x2"),
                                    P(R, "z2 + x2")});
  CHECK(buchberger(c.v1 + c.v2).basis() == buchberger(line).basis());
  CHECK_THROWS(build_cut_components(1, kFp));
}

TEST_CASE("subregular descriptors") {
  auto d = build_subreg_components(2);
  CHECK(d[0].v_sub[1][0] == 1);
  CHECK(d[0].plane[1][2][0] == 1);  // E31
  CHECK(d[1].plane[1][1][2] == 1);  // E23
  auto I = build_sl3_subreg_comm(2, kFp);
  CHECK(I.generators.size() == 8 + 2 * 9);
}

TEST_CASE("appendix obligations: shape at r = 2") {
  auto ob = appendix_cases(2, kFp);
  auto count = [&](ObligationKind k) {
    return std::count_if(ob.begin(), ob.end(), [&](const Obligation& o) { return o.kind == k; });
  };
  // Case 1: 3; Case 2: n = 0 gives 2 reductions, n = 1 gives 3 + 1.
  CHECK(count(ObligationKind::Member) == 3 + 2 + 4);
  CHECK(count(ObligationKind::RadicalMember) == 3);
  CHECK(count(ObligationKind::RadicalNonMember) == 1);
  CHECK(count(ObligationKind::NonMember) == 2);
  for (const auto& o : ob) CHECK(o.f.ring() == o.ideal.ring);
  CHECK_THROWS_AS(appendix_cases(2, FieldSpec::prime(2)), CharacteristicError);
}

TEST_CASE("appendix obligations hold at r = 2") {
  for (const auto& o : appendix_cases(2, kFp)) {
    CAPTURE(o.label);
    switch (o.kind) {
      case ObligationKind::Member: CHECK(ideal_member(o.f, buchberger(o.ideal))); break;
      case ObligationKind::NonMember: CHECK_FALSE(ideal_member(o.f, buchberger(o.ideal))); break;
      case ObligationKind::RadicalMember: CHECK(radical_member(o.f, o.ideal)); break;
      case ObligationKind::RadicalNonMember: CHECK_FALSE(radical_member(o.f, o.ideal)); break;
    }
  }
}

TEST_CASE("build dispatches every family") {
  CHECK(build(VarietyId::parse("mixed:i=1,j=1,component=1"), kFp).radical_closure);
  CHECK(build(VarietyId::parse("family-f:r=2,label=P_1"), kFp).generators.size() == 5);
  CHECK_THROWS(build(VarietyId::parse("family-f:r=2,label=P_3"), kFp));
  CHECK(build(VarietyId::parse("cut:r=2,v=V2"), kFp).generators.size() == 4);
  CHECK(build(VarietyId::parse("subreg:r=1,j=1"), kFp).ring.arity() == 8);
}
