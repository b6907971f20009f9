#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "comvar/errors.hpp"
#include "comvar/groebner.hpp"
#include "comvar/hilbert.hpp"

using namespace comvar;

namespace {

Ring ring_of(std::vector<std::string> names, FieldSpec field = FieldSpec::rationals(),
             MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(std::move(names), field, order);
}

IdealPresentation ideal(const Ring& r, std::vector<std::string_view> gens, bool radical = false) {
  std::vector<Polynomial> out;
  for (auto g : gens) out.push_back(parse_polynomial(r, g));
  return IdealPresentation(r, std::move(out), radical);
}

Polynomial P(const Ring& r, std::string_view text) { return parse_polynomial(r, text); }

bool is_reduced(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[j].terms()) {
        if (G[i].leading_monomial().divides(t.mono)) return false;
      }
    }
  }
  return true;
}

Polynomial random_poly(const Ring& ring, std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, maxdeg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<Exponent> e(ring.arity());
    for (auto& v : e) v = expo(rng);
    out.push_back(Term{Monomial(e), Coeff(coef(rng))});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

// Number of monomials of degree d in n variables outside the monomial ideal.
std::int64_t standard_count(const std::vector<Monomial>& gens, std::size_t n, int d) {
  std::int64_t count = 0;
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      Monomial m(e);
      if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); }))
        ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return count;
}

}  // namespace

TEST_CASE("buchberger: unit ideal collapses to {1}") {
  auto r = ring_of({"x", "y"});
  auto G = buchberger(ideal(r, {"x", "1 - x"}));
  CHECK(G.is_unit());
  REQUIRE(G.basis().size() == 1);
  CHECK(G.basis().front() == P(r, "1"));
}

TEST_CASE("buchberger: zero ideal has an empty basis") {
  auto r = ring_of({"x", "y"});
  auto G = buchberger(IdealPresentation(r, {P(r, "0")}));
  CHECK(G.basis().empty());
  CHECK(ideal_member(P(r, "0"), G));
  CHECK_FALSE(ideal_member(P(r, "x"), G));
  CHECK(krull_dimension(G) == 2);
}

TEST_CASE("buchberger: cyclic-3 reduced grevlex basis") {
  auto r = ring_of({"x", "y", "z"});
  auto G = buchberger(ideal(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}));
  std::vector<Polynomial> expected{P(r, "z^3 - 1"), P(r, "y^2 + y*z + z^2"), P(r, "x + y + z")};
  auto got = G.basis();
  auto sorted = [&](std::vector<Polynomial> v) {
    std::sort(v.begin(), v.end(), [&](const Polynomial& a, const Polynomial& b) {
      return r.order().compare(a.leading_monomial().exponents(),
                               b.leading_monomial().exponents()) < 0;
    });
    return v;
  };
  CHECK(got == sorted(expected));
  CHECK(krull_dimension(G) == 0);
}

TEST_CASE("buchberger: output is a reduced basis, certified by S-pairs") {
  std::mt19937 rng(31);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(32003), FieldSpec::prime(7)}) {
    for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
      // Random lex bases over Q suffer huge coefficient growth.
      if (field.kind() == FieldKind::Rationals && order.kind != OrderKind::GrevLex) continue;
      auto r = ring_of({"x", "y", "z"}, field, order);
      // Lex bases of dense random systems can reach very high degree under the
      // normal strategy, so lex runs use multilinear generators.
      const int maxdeg = order.kind == OrderKind::Lex ? 1 : 2;
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens{random_poly(r, rng, 3, maxdeg),
                                     random_poly(r, rng, 3, maxdeg),
                                     random_poly(r, rng, 2, 2)};
        auto G = buchberger(IdealPresentation(r, gens));
        CHECK(is_groebner_basis(G.basis()));
        CHECK(is_reduced(G.basis()));
        for (const auto& g : gens) CHECK(ideal_member(g, G));
      }
    }
  }
}

TEST_CASE("buchberger: reduced basis does not depend on generator order") {
  std::mt19937 rng(8);
  auto r = ring_of({"a", "b", "c", "d"}, FieldSpec::prime(32003));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_poly(r, rng, 3, 2));
    auto base = buchberger(IdealPresentation(r, gens)).basis();
    for (int perm = 0; perm < 4; ++perm) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(buchberger(IdealPresentation(r, gens)).basis() == base);
    }
  }
}

TEST_CASE("buchberger: prime-field basis matches the rational one reduced mod p") {
  auto q = ring_of({"x", "y", "z"});
  auto p = ring_of({"x", "y", "z"}, FieldSpec::prime(32003));
  std::vector<std::string_view> gens{"x^2 - y*z", "y^2 - x*z", "z^2 - x*y + 3"};
  auto Gq = buchberger(ideal(q, gens)).basis();
  auto Gp = buchberger(ideal(p, gens)).basis();
  REQUIRE(Gq.size() == Gp.size());
  for (std::size_t i = 0; i < Gq.size(); ++i) CHECK(P(p, Gq[i].to_string()) == Gp[i]);
}

TEST_CASE("membership: random combinations are members") {
  std::mt19937 rng(19);
  auto r = ring_of({"x", "y", "z"}, FieldSpec::prime(32003));
  auto I = ideal(r, {"x^2 + y*z", "x*y - z^2", "y^3 - x"});
  auto G = buchberger(I);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f(r);
    for (const auto& g : I.generators) f += random_poly(r, rng, 3, 2) * g;
    CHECK(ideal_member(f, G));
    CHECK(ideal_member(f, I));
  }
  CHECK_FALSE(ideal_member(P(r, "x"), G));
}

TEST_CASE("radical membership") {
  auto r = ring_of({"x", "y", "z"});
  auto sq = ideal(r, {"x^2"});
  CHECK_FALSE(ideal_member(P(r, "x"), buchberger(sq)));
  CHECK(radical_member(P(r, "x"), sq));
  CHECK_FALSE(radical_member(P(r, "y"), sq));

  // Nilcone of sl2 with y = z = 0 forces x into the radical.
  auto cut = ideal(r, {"x^2 + y*z", "y", "z"});
  CHECK(radical_member(P(r, "x"), cut));
  CHECK_FALSE(ideal_member(P(r, "x"), buchberger(cut)));

  // The flag routes ideal_member through the radical test.
  auto flagged = ideal(r, {"x^2"}, true);
  CHECK(ideal_member(P(r, "x"), flagged));

  CHECK_THROWS_AS(radical_member(P(ring_of({"x"}), "x"), sq), RingMismatch);
}

TEST_CASE("eliminate: parametrized curve") {
  auto r = ring_of({"t", "x", "y", "z"});
  auto I = ideal(r, {"x - t", "y - t^2", "z - t^3"});
  std::vector<std::string> drop{"t"};
  auto E = eliminate(I, drop);
  CHECK(E.ring.names() == std::vector<std::string>{"x", "y", "z"});
  auto G = buchberger(E);
  CHECK(ideal_member(P(E.ring, "y - x^2"), G));
  CHECK(ideal_member(P(E.ring, "z - x*y"), G));
  CHECK(ideal_member(P(E.ring, "y^2 - x*z"), G));
  CHECK_FALSE(ideal_member(P(E.ring, "x"), G));
  CHECK(krull_dimension(E) == 1);
}

TEST_CASE("eliminate: variable in the middle of the ring") {
  auto r = ring_of({"x", "s", "y"}, FieldSpec::prime(32003));
  auto I = ideal(r, {"x - s^2", "y - s^3"});
  std::vector<std::string> drop{"s"};
  auto E = eliminate(I, drop);
  auto G = buchberger(E);
  CHECK(ideal_member(P(E.ring, "x^3 - y^2"), G));
  CHECK(G.basis().size() == 1);
}

TEST_CASE("intersect_ideals") {
  auto r = ring_of({"x", "y"});
  auto K = intersect_ideals(ideal(r, {"x"}), ideal(r, {"y"}));
  CHECK(ideal_equal(K, ideal(r, {"x*y"})));
  auto L = intersect_ideals(ideal(r, {"x", "y"}), ideal(r, {"x - 1", "y"}));
  CHECK(ideal_equal(L, ideal(r, {"y", "x^2 - x"})));
  CHECK(L.ring == r);
}

TEST_CASE("ideal_equal_radical") {
  auto r = ring_of({"x", "y", "z"});
  CHECK(ideal_equal_radical(ideal(r, {"x^3", "y^2"}), ideal(r, {"x", "y"})));
  CHECK_FALSE(ideal_equal(ideal(r, {"x^3", "y^2"}), ideal(r, {"x", "y"})));
  CHECK_FALSE(ideal_equal_radical(ideal(r, {"x*y"}), ideal(r, {"x"})));
  // √(I ∩ J) = √I ∩ √J.
  auto I = ideal(r, {"x^2", "y"}), J = ideal(r, {"z"});
  CHECK(ideal_equal_radical(intersect_ideals(I, J), ideal(r, {"x*z", "y*z"})));
}

TEST_CASE("budget: wall-clock cap interrupts a long reduction") {
  auto r = ring_of({"x", "y", "z"}, FieldSpec::rationals(), MonomialOrder::lex());
  auto I = ideal(r, {"2*x^2*y*z^2 - 3*y - 2*z^2", "5*x^2*y^2 - 3*y^2*z", "-4*x^2*z + 5*y^2"});
  GbBudget quick;
  quick.max_seconds = 0.5;
  CHECK_THROWS_AS(buchberger(I, quick), BudgetExceeded);
}

TEST_CASE("budget: exceeding the pair cap throws") {
  auto r = ring_of({"a", "b", "c", "d"}, FieldSpec::prime(32003));
  auto cyclic4 = ideal(r, {"a + b + c + d", "a*b + b*c + c*d + d*a",
                           "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"});
  GbBudget tight;
  tight.max_pairs = 2;
  CHECK_THROWS_AS(buchberger(cyclic4, tight), BudgetExceeded);
  auto G = buchberger(cyclic4);
  CHECK(G.stats().pairs_reduced > 2);
  CHECK(krull_dimension(G) == 1);
}

TEST_CASE("hilbert: numerator recursion against direct counting") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> ex(0, 3), cnt(1, 5);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Monomial> gens;
      int k = cnt(rng);
      for (int i = 0; i < k; ++i) {
        std::vector<Exponent> e(n);
        for (auto& v : e) v = ex(rng);
        gens.push_back(Monomial(e));
      }
      auto num = hilbert_numerator(gens, n);
      auto coeffs = series_coefficients(num, static_cast<int>(n), 9);
      for (int d = 0; d < 9; ++d) CHECK(coeffs[d] == standard_count(gens, n, d));
    }
  }
}

TEST_CASE("hilbert: series and dimension of graded quotients") {
  auto r = ring_of({"x", "y", "z", "w"});
  // Twisted cubic cone: HF(d) = 3d + 1, dimension 2.
  auto tc = buchberger(ideal(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}));
  auto h = hilbert_series(tc, 6);
  CHECK(h.dimension == 2);
  CHECK(h.coefficients == std::vector<std::int64_t>{1, 4, 7, 10, 13, 16});
  CHECK(h.numerator == std::vector<std::int64_t>{1, 2});

  auto unit = buchberger(ideal(r, {"1"}));
  CHECK(hilbert_series(unit, 3).dimension == -1);

  auto free = buchberger(IdealPresentation(r, {}));
  CHECK(hilbert_series(free, 3).coefficients == std::vector<std::int64_t>{1, 4, 10});

  CHECK_THROWS_AS(hilbert_series(buchberger(ideal(r, {"x^2 - y"})), 3), std::invalid_argument);
}

TEST_CASE("krull_dimension: non-homogeneous input and order fallback") {
  auto r = ring_of({"x", "y", "z"}, FieldSpec::rationals(), MonomialOrder::lex());
  auto I = ideal(r, {"x^2 - y", "z - 1"});
  CHECK(krull_dimension(I) == 1);
  CHECK_THROWS_AS(krull_dimension(buchberger(I)), std::invalid_argument);
  CHECK(krull_dimension(ideal(r, {"x - 1", "x"})) == -1);
}
