#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comvar/character.hpp"
#include "comvar/errors.hpp"
#include "comvar/linalg.hpp"
#include "comvar/oracle.hpp"

using namespace comvar;

namespace {

VarietyId id(std::string_view s) { return VarietyId::parse(s); }

std::vector<Coeff> ints(std::initializer_list<long> v) {
  std::vector<Coeff> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("linalg: Bareiss rank on known matrices") {
  IntMatrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  CHECK(rank_bareiss(a) == 2);
  IntMatrix b{{0, 0}, {0, 0}};
  CHECK(rank_bareiss(b) == 0);
  IntMatrix c{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 2, 2}};
  CHECK(rank_bareiss(c) == 2);
  RatMatrix q{{mpq_class(1, 2), mpq_class(1, 3)}, {mpq_class(3), mpq_class(2)}};
  CHECK(rank_rational(q) == 1);
  ModMatrix m{{1, 2}, {2, 4}};
  CHECK(rank_mod_p(m, 7) == 1);
  CHECK(reduce_mod_p(mpq_class(1, 2), 7) == 4);
  CHECK(reduce_mod_p(mpq_class(-1), 7) == 6);
}

TEST_CASE("linalg: exact and modular ranks agree on random integer matrices") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-3, 3), sz(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = sz(rng), cols = sz(rng), k = sz(rng);
    // Rank at most k: product of rows×k and k×cols.
    IntMatrix A(rows, std::vector<mpz_class>(k)), B(k, std::vector<mpz_class>(cols));
    for (auto& r : A) for (auto& v : r) v = d(rng);
    for (auto& r : B) for (auto& v : r) v = d(rng);
    IntMatrix C(rows, std::vector<mpz_class>(cols, 0));
    ModMatrix Cm(rows, std::vector<std::uint64_t>(cols));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        for (int l = 0; l < k; ++l) C[i][j] += A[i][l] * B[l][j];
        Cm[i][j] = reduce_mod_p(mpq_class(C[i][j]), 1000003);
      }
    }
    auto exact = rank_bareiss(C);
    CHECK(exact <= static_cast<std::size_t>(std::min({rows, cols, k})));
    CHECK(rank_mod_p(Cm, 1000003) <= exact);
  }
}

TEST_CASE("parametrize: sl2 nilpotent examples") {
  auto p = parametrize(id("sl2-nilcomm:r=1"));
  std::vector<long> ab{1, 1, 1};
  CHECK(p.evaluate(ab) == ints({1, -1, 1}));  // [[1,-1],[1,-1]]
  auto p2 = parametrize(id("sl2-nilcomm:r=2"));
  std::vector<long> params{1, 2, 1, 3};
  CHECK(p2.evaluate(params) == ints({2, -1, 4, 6, -3, 12}));
  auto I = build_sl2_nilcomm(2, FieldSpec::rationals());
  auto pt = p2.evaluate(params);
  for (const auto& g : I.generators) CHECK(g.evaluate(pt) == 0);
}

TEST_CASE("parametrize: unsupported and multi-component ids") {
  CHECK_THROWS(parametrize(id("family-f:r=2,label=I_1")));
  CHECK_THROWS(parametrize(id("mixed:i=1,j=1")));
  CHECK(parametrize_components(id("mixed:i=1,j=1")).size() == 2);
  CHECK_NOTHROW(parametrize(id("mixed:i=1,j=1,component=2")));
}

TEST_CASE("samples annihilate the generators of every supported id") {
  for (std::string s : {"sl2-comm:r=3", "sl2-nilcomm:r=3", "gl2-comm:r=2", "sl3-u-comm:r=3",
                        "sl3-nilcomm:r=1", "sl3-nilcomm:r=2", "subreg:r=2,j=1", "subreg:r=2,j=2",
                        "mixed:i=1,j=2", "mixed:i=2,j=1", "cut:r=3,v=V1", "cut:r=3,v=V2",
                        "cut:r=3,v=V3"}) {
    CAPTURE(s);
    // sample() certifies vanishing itself and throws otherwise.
    auto smp = sample(id(s), 20, 42);
    CHECK(smp.size() == 20);
    // Reproducible from the seed.
    CHECK(sample(id(s), 20, 42)[7].point == smp[7].point);
  }
}

TEST_CASE("samples serialize as rational strings") {
  auto s = sample(id("sl2-nilcomm:r=1"), 2, 1);
  auto js = samples_to_json(s);
  CHECK(js.front() == '[');
  CHECK(js.find('"') != std::string::npos);
}

TEST_CASE("jacobian rank dimension matches known dimensions") {
  CHECK(jacobian_rank_dimension(id("sl2-nilcomm:r=1"), 2, 1) == 2);
  CHECK(jacobian_rank_dimension(id("sl2-comm:r=2"), 2, 1) == 4);
  CHECK(jacobian_rank_dimension(id("gl2-comm:r=2"), 2, 1) == 6);
  CHECK(jacobian_rank_dimension(id("sl3-u-comm:r=2"), 2, 1) == 5);
  CHECK(jacobian_rank_dimension(id("sl3-nilcomm:r=2"), 2, 1) == 8);
  CHECK(jacobian_rank_dimension(id("subreg:r=2,j=1"), 2, 1) == 6);
  // Monotone in trials and bounded by the ambient dimension.
  auto one = jacobian_rank_dimension(id("sl3-nilcomm:r=1"), 1, 9);
  auto three = jacobian_rank_dimension(id("sl3-nilcomm:r=1"), 3, 9);
  CHECK(one <= three);
  CHECK(three <= 8);
  CHECK_THROWS(jacobian_rank_dimension(id("sl2-comm:r=2"), 0, 1));
}

TEST_CASE("evaluation Hilbert function") {
  CHECK(hilbert_function_by_evaluation(id("sl3-nilcomm:r=1"), 0, 0, 5) == 1);
  CHECK(hilbert_function_by_evaluation(id("sl2-nilcomm:r=1"), 2, 0, 5) == 5);
  CHECK(hilbert_function_by_evaluation(id("sl2-nilcomm:r=2"), 2, 0, 5) == 15);
  // Gram path agrees with the exact path.
  auto exact = hilbert_rank(id("sl2-nilcomm:r=2"), 3, 11, 0, 1000);
  auto gram = hilbert_rank(id("sl2-nilcomm:r=2"), 3, 11, 0, 0);
  CHECK(exact.exact);
  CHECK_FALSE(gram.exact);
  CHECK(exact.rank == gram.rank);
  // Never above the monomial count.
  auto free = hilbert_rank(id("sl2-comm:r=1"), 3, 2);
  CHECK(free.rank == free.monomials);
}

TEST_CASE("evaluation Hilbert function at n = 1 follows the character prediction") {
  for (int r = 1; r <= 3; ++r) {
    auto v = hilbert_function_by_evaluation(id("sl2-nilcomm:r=" + std::to_string(r)), 1, 0, 17);
    CHECK(v == partition_count(r, 1) * weyl_character(1).dimension());
  }
}

TEST_CASE("component membership") {
  auto mixed = id("mixed:i=1,j=1");
  // (0, A) with A traceless and not nilpotent.
  CHECK(component_membership(ints({0, 0, 0, 1, 2, 3}), mixed) == std::vector<int>{2});
  // (N, 2N) with N nilpotent and nonzero.
  CHECK(component_membership(ints({1, -1, 1, 2, -2, 2}), mixed) == std::vector<int>{1});
  CHECK(component_membership(ints({0, 0, 0, 0, 0, 0}), mixed) == std::vector<int>{1, 2});
  CHECK_THROWS(component_membership(ints({1, 0, 0, 0, 0, 0}), mixed));

  for (int j : {1, 2}) {
    auto sub = id("subreg:r=2,j=" + std::to_string(j));
    for (const auto& s : sample(sub, 10, 3)) {
      CHECK(component_membership(s.point, sub) == std::vector<int>{j});
    }
  }
  auto cut = id("cut:r=2,v=V2");
  for (const auto& s : sample(cut, 5, 3)) {
    CHECK(component_membership(s.point, cut) == std::vector<int>{2});
  }
}
