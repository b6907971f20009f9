#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comvar/character.hpp"
#include "comvar/hilbert.hpp"
#include "comvar/catalog.hpp"

using namespace comvar;

TEST_CASE("partition counts") {
  CHECK(partition_count(1, 0) == 1);
  CHECK(partition_count(5, 0) == 1);
  CHECK(partition_count(2, 3) == 4);
  CHECK(partition_count(3, 2) == 6);
  CHECK_THROWS(partition_count(0, 1));
  CHECK_THROWS(partition_count(2, -1));
}

TEST_CASE("partition counts: closed form, enumeration and Pascal recurrence") {
  for (int r = 1; r <= 6; ++r) {
    for (int n = 0; n <= 20; ++n) {
      CHECK(partition_count(r, n) == partition_count_enumerated(r, n));
      if (r > 1) {
        std::uint64_t sum = 0;
        for (int j = 0; j <= n; ++j) sum += partition_count(r - 1, j);
        CHECK(partition_count(r, n) == sum);
      }
    }
  }
}

TEST_CASE("Weyl characters") {
  CHECK(weyl_character(0).dimension() == 1);
  auto adj = weyl_character(1);
  CHECK(adj.multiplicities == std::map<int, std::uint64_t>{{-2, 1}, {0, 1}, {2, 1}});
  CHECK(weyl_character(2).dimension() == 5);
  for (int n = 0; n <= 10; ++n) {
    CHECK(weyl_character(n).is_symmetric());
    CHECK(weyl_character(n).dimension() == static_cast<std::uint64_t>(2 * n + 1));
  }
}

TEST_CASE("character sums stay symmetric") {
  auto ch = weyl_character(3);
  ch += weyl_character(1).scaled(4);
  CHECK(ch.is_symmetric());
  CHECK(ch.dimension() == 7 + 12);
  CHECK(weyl_character(2).scaled(0).dimension() == 0);
}

TEST_CASE("character series dimensions") {
  CHECK(character_series(1, 3).dimensions() == std::vector<std::uint64_t>{1, 3, 5, 7});
  CHECK(character_series(2, 2).dimensions()[2] == 15);
  CHECK(character_series(3, 1).dimensions()[1] == 9);
  auto s = character_series(4, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(s.degrees[n] == weyl_character(n).scaled(partition_count(4, n)));
  }
}

TEST_CASE("character series for r = 1 matches the Hilbert series of the nilcone") {
  auto G = buchberger(build_sl2_nilcomm(1, FieldSpec::prime(32003)));
  auto h = hilbert_series(G, 12);
  auto dims = character_series(1, 11).dimensions();
  for (int n = 0; n < 12; ++n) CHECK(h.coefficients[n] == static_cast<std::int64_t>(dims[n]));
}

TEST_CASE("good filtration decomposition") {
  auto two = weyl_character(1);
  two += weyl_character(0);
  auto t = decompose_good_filtration({two});
  CHECK(t[0] == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});
  CHECK(decompose_good_filtration({Sl2Character{}}).empty());

  auto table = decompose_good_filtration(character_series(2, 5).degrees);
  CHECK(table[3] == std::map<int, std::uint64_t>{{3, 4}});
  for (int r = 1; r <= 3; ++r) {
    auto totals = total_multiplicities(decompose_good_filtration(character_series(r, 6).degrees));
    for (int m = 0; m <= 6; ++m) CHECK(totals[m] == partition_count(r, m));
  }
}

TEST_CASE("good filtration rejects non-decomposable input") {
  Sl2Character lopsided;
  lopsided.multiplicities = {{2, 1}, {0, 1}};
  CHECK_THROWS_AS(decompose_good_filtration({lopsided}), std::invalid_argument);
  Sl2Character odd;
  odd.multiplicities = {{1, 1}, {-1, 1}};
  CHECK_THROWS_AS(decompose_good_filtration({odd}), std::invalid_argument);
}
