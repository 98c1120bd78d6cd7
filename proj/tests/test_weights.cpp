#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/combinatorics.hpp"
#include "jacring/weights.hpp"

using namespace jacring;

TEST_CASE("wedge weights at n = 1") {
  auto ws = wedge_weights(1);
  CHECK(ws.total == 2);
  REQUIRE(ws.mult.size() == 2);
  CHECK(ws.mult.at({1}) == 1);
  CHECK(ws.mult.at({-1}) == 1);
}

TEST_CASE("wedge weights at n = 2") {
  // Middle wedge of the 4-dimensional module: C(4,2) = 6 sums of two
  // distinct elements of {±L1, ±L2}.
  auto ws = wedge_weights(2);
  CHECK(ws.total == 6);
  CHECK(ws.mult.at({1, 1}) == 1);
  CHECK(ws.mult.at({1, -1}) == 1);
  CHECK(ws.mult.at({-1, 1}) == 1);
  CHECK(ws.mult.at({-1, -1}) == 1);
  CHECK(ws.mult.at({0, 0}) == 2);  // L1 - L1 and L2 - L2
  CHECK(ws.mult.size() == 5);
}

TEST_CASE("symmetry report across small ranks") {
  BinomialTable C;
  for (int n = 1; n <= 10; ++n) {
    auto ws = wedge_weights(n);
    CHECK(ws.total == C.at(2 * n, n));
    auto rep = weight_symmetry_check(ws);
    CHECK(rep.total_matches_binomial);
    CHECK(rep.symmetric);
    CHECK(rep.highest_is_all_ones);
    CHECK(rep.highest_multiplicity == 1);
  }
}

TEST_CASE("zero weight multiplicity matches brute-force enumeration") {
  auto ws = wedge_weights(3);
  std::uint64_t direct = 0;
  // Subsets of size 3 of the 6 symbols {±L_0, ±L_1, ±L_2}; symbol 2i is
  // +L_i and symbol 2i+1 is -L_i.
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        int w[3] = {0, 0, 0};
        for (int sym : {a, b, c}) w[sym / 2] += (sym % 2 == 0) ? 1 : -1;
        if (w[0] == 0 && w[1] == 0 && w[2] == 0) ++direct;
      }
  auto it = ws.mult.find({0, 0, 0});
  std::uint64_t reported = (it == ws.mult.end()) ? 0 : it->second;
  CHECK(reported == direct);
}

TEST_CASE("dimension obstructions") {
  auto rows = dimension_obstructions(1, 30);
  REQUIRE(rows.size() == 30);
  // n = 1: C(2,1) = 2 is a power of two, so it is NOT excluded.
  CHECK(rows[0].binom == 2);
  CHECK(rows[0].even);
  CHECK(rows[0].power_of_two);
  CHECK_FALSE(rows[0].excluded);
  // Every later central binomial coefficient is even and not a power of two.
  BinomialTable C;
  for (int n = 2; n <= 30; ++n) {
    const auto& row = rows[n - 1];
    CHECK(row.n == n);
    CHECK(row.binom == C.at(2 * n, n));
    CHECK(row.even);
    CHECK_FALSE(row.power_of_two);
    CHECK(row.excluded);
  }
}
