#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comvar/errors.hpp"
#include "comvar/polynomial.hpp"

using namespace comvar;

namespace {

Ring xyz(FieldSpec field = FieldSpec::rationals(), MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring({"x", "y", "z"}, field, order);
}

Polynomial P(const Ring& ring, std::string_view text) { return parse_polynomial(ring, text); }

Polynomial random_poly(const Ring& ring, std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-9, 9), expo(0, maxdeg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    std::vector<Exponent> e(ring.arity());
    for (auto& v : e) v = expo(rng);
    out.push_back(Term{Monomial(e), Coeff(coef(rng))});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("field: parsing and prime checks") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("p=32003").characteristic() == 32003u);
  CHECK(FieldSpec::parse("mod 7").characteristic() == 7u);
  CHECK_THROWS_AS(FieldSpec::prime(32004), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::prime(4294967311ULL), std::invalid_argument);
  CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647u);
  CHECK_FALSE(FieldSpec::prime(2).allows_sl2());

  auto f = FieldSpec::prime(7);
  Coeff c(1, 3);
  f.normalize(c);
  CHECK(c == 5);  // 3 * 5 = 15 = 1 mod 7
  CHECK(f.display_value(Coeff(6)) == -1);
  Coeff bad(1, 7);
  CHECK_THROWS_AS(f.normalize(bad), std::domain_error);
}

TEST_CASE("orders: lex, grevlex and block on small examples") {
  auto lex = MonomialOrder::lex();
  auto grl = MonomialOrder::grevlex();
  auto blk = MonomialOrder::block(1);
  auto a = mono({1, 0, 2}), b = mono({0, 3, 0});
  CHECK(lex.compare(a.exponents(), b.exponents()) > 0);
  // Same degree: grevlex prefers the smaller last exponent.
  CHECK(grl.compare(a.exponents(), b.exponents()) < 0);
  // x*z^2 vs y^4: degree wins under grevlex, x wins in block(1).
  auto c = mono({0, 4, 0});
  CHECK(grl.compare(a.exponents(), c.exponents()) < 0);
  CHECK(blk.compare(a.exponents(), c.exponents()) > 0);
  CHECK(MonomialOrder::parse("block:2") == MonomialOrder::block(2));
  CHECK(MonomialOrder::parse("lex").to_string() == "lex");
  CHECK_THROWS(MonomialOrder::parse("deglex"));
}

TEST_CASE("orders: total, multiplicative and well founded on random monomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 4);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Exponent> va(4), vb(4), vc(4);
      for (auto* v : {&va, &vb, &vc}) {
        for (auto& x : *v) x = e(rng);
      }
      Monomial a(va), b(vb), c(vc);
      auto ab = order.compare(a.exponents(), b.exponents());
      auto ba = order.compare(b.exponents(), a.exponents());
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
      // Multiplicative: a < b ⇒ ac < bc.
      auto ac = a * c, bc = b * c;
      CHECK((order.compare(ac.exponents(), bc.exponents()) <=> 0) == (ab <=> 0));
      // 1 is the minimum.
      Monomial one(4);
      if (!a.is_one()) CHECK(order.compare(one.exponents(), a.exponents()) < 0);
    }
  }
}

TEST_CASE("ring: validation") {
  CHECK_THROWS_AS(make_ring({}, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"x", "x"}, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"1x"}, FieldSpec::rationals()), std::invalid_argument);
  CHECK_THROWS_AS(make_ring({"x", "y"}, FieldSpec::rationals(), MonomialOrder::block(2)),
                  std::invalid_argument);
  auto r = xyz();
  CHECK(r.require("y") == 1);
  CHECK_FALSE(r.index_of("w").has_value());
  CHECK(r == xyz());
  CHECK_FALSE(r == xyz(FieldSpec::prime(7)));
}

TEST_CASE("polynomial: canonical form and printing") {
  auto r = xyz();
  auto f = P(r, "3*x^2*y - 1/2*z + x^2*y - 2*x^2*y*1");
  CHECK(f.to_string() == "2*x^2*y - 1/2*z");
  CHECK(f.leading_coeff() == 2);
  CHECK(f.total_degree() == 3);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "0").total_degree() == -1);
  CHECK(P(r, "(x + y)^2") == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(P(r, "-(x - y)") == P(r, "y - x"));
  CHECK(P(r, "x*y*z").to_string() == "x*y*z");
  CHECK(P(r, "-1").to_string() == "-1");
}

TEST_CASE("polynomial: prime field reduction and symmetric printing") {
  auto r = xyz(FieldSpec::prime(7));
  auto f = P(r, "8*x + 13*y + 1/2");
  CHECK(f.to_string() == "x - y - 3");
  CHECK(P(r, "7*x").is_zero());
}

TEST_CASE("polynomial: ring algebra on random inputs") {
  std::mt19937 rng(2024);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
      auto r = xyz(field, order);
      for (int trial = 0; trial < 40; ++trial) {
        auto a = random_poly(r, rng, 4, 2), b = random_poly(r, rng, 4, 2),
             c = random_poly(r, rng, 3, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * b - b * a == Polynomial(r));
        CHECK(poly_arith(a, b, ArithOp::Sub) == a - b);
        if (!a.is_zero() && !b.is_zero()) {
          CHECK(a.total_degree() + b.total_degree() == (a * b).total_degree());
        }
        // Terms strictly descending in the ring order.
        auto ab = a * b;
        auto ts = ab.terms();
        for (std::size_t k = 1; k < ts.size(); ++k) {
          CHECK(order.compare(ts[k - 1].mono.exponents(), ts[k].mono.exponents()) > 0);
        }
      }
    }
  }
}

TEST_CASE("polynomial: evaluation is a ring homomorphism") {
  std::mt19937 rng(5);
  auto r = xyz();
  std::vector<Coeff> pt{Coeff(2), Coeff(-1, 3), Coeff(5)};
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(r, rng, 4, 3), b = random_poly(r, rng, 4, 3);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("polynomial: derivative, pow and monic") {
  auto r = xyz();
  CHECK(P(r, "x^3*y + 2*x*z").derivative(0) == P(r, "3*x^2*y + 2*z"));
  CHECK(P(r, "x + 1").pow(3) == P(r, "x^3 + 3*x^2 + 3*x + 1"));
  CHECK(P(r, "x").pow(0) == P(r, "1"));
  CHECK(P(r, "4*x - 2").monic() == P(r, "x - 1/2"));
}

TEST_CASE("polynomial: ring mismatch is rejected") {
  auto r = xyz();
  auto s = make_ring({"x", "y"}, FieldSpec::rationals());
  CHECK_THROWS_AS(P(r, "x") + P(s, "x"), RingMismatch);
  CHECK_THROWS_AS(P(r, "x") * P(xyz(FieldSpec::prime(5)), "x"), RingMismatch);
  std::vector<Polynomial> divs{P(s, "x")};
  CHECK_THROWS_AS(normal_form(P(r, "x"), divs), RingMismatch);
}

TEST_CASE("normal_form: division by a list") {
  auto r = xyz(FieldSpec::rationals(), MonomialOrder::lex());
  // Classic example: x^2*y + x*y^2 + y^2 by (x*y - 1, y^2 - 1).
  std::vector<Polynomial> d1{P(r, "x*y - 1"), P(r, "y^2 - 1")};
  CHECK(normal_form(P(r, "x^2*y + x*y^2 + y^2"), d1) == P(r, "x + y + 1"));
  std::vector<Polynomial> d2{P(r, "y^2 - 1"), P(r, "x*y - 1")};
  CHECK(normal_form(P(r, "x^2*y + x*y^2 + y^2"), d2) == P(r, "2*x + 1"));
}

TEST_CASE("normal_form: remainder has no reducible term and f - rem is in the span") {
  std::mt19937 rng(77);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    auto r = xyz(field);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Polynomial> divs{random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)};
      std::erase_if(divs, [](const Polynomial& p) { return p.is_zero(); });
      if (divs.empty()) continue;
      auto f = random_poly(r, rng, 6, 3);
      auto rem = normal_form(f, divs);
      for (const auto& t : rem.terms()) {
        for (const auto& d : divs) CHECK_FALSE(d.leading_monomial().divides(t.mono));
      }
      // A combination of divisors times any polynomial reduces to zero only
      // for Gröbner bases, so just check the remainder is stable.
      CHECK(normal_form(rem, divs) == rem);
    }
  }
}

TEST_CASE("ring_map and rename_into") {
  auto r = xyz();
  auto s = make_ring({"u", "v"}, FieldSpec::rationals());
  std::vector<Polynomial> images{P(s, "u + v"), P(s, "u - v"), P(s, "2")};
  CHECK(ring_map(P(r, "x*y + z"), images) == P(s, "u^2 - v^2 + 2"));
  CHECK(ring_map(P(r, "0"), s, images).is_zero());

  auto big = make_ring({"w", "z", "y", "x"}, FieldSpec::rationals(), MonomialOrder::lex());
  auto moved = rename_into(P(r, "x^2 - y*z"), big);
  CHECK(moved == P(big, "x^2 - y*z"));
  CHECK_THROWS(rename_into(P(big, "w"), r));
}

TEST_CASE("parser: errors carry line and column") {
  auto r = xyz();
  auto column_of = [&](std::string_view text) {
    try {
      parse_polynomial(r, text);
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      return e.column();
    }
    return std::size_t{0};
  };
  CHECK(column_of("x1^") > 0);
  CHECK(column_of("x^") == 3);
  CHECK(column_of("x + w") == 5);
  CHECK(column_of("(x + y") > 0);
  CHECK(column_of("x ** y") > 0);
  CHECK(column_of("1/0") > 0);
  CHECK(column_of("") > 0);
}

TEST_CASE("parser: round trip through to_string") {
  std::mt19937 rng(99);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    auto r = xyz(field);
    for (int trial = 0; trial < 60; ++trial) {
      auto f = random_poly(r, rng, 5, 3);
      if (field.kind() == FieldKind::Rationals) f = f.scaled(Coeff(3, 7));
      CHECK(parse_polynomial(r, f.to_string()) == f);
    }
  }
}
