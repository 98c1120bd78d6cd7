#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jacring/arrangement.hpp"
#include "jacring/closed_forms.hpp"
#include "jacring/errors.hpp"
#include "jacring/fp.hpp"
#include "jacring/rational.hpp"
#include "jacring/sampling.hpp"

using namespace jacring;

namespace {
ParamMatrix<Rat> small_params() {
  // n = 2, k = 3, r = 2 with distinct interior entries.
  ParamMatrix<Rat> P;
  P.n = 2;
  P.k = 3;
  P.r = 2;
  P.a = {{Rat(2), Rat(3)}, {Rat(5), Rat(7)}};
  return P;
}
}  // namespace

TEST_CASE("parameter matrix border and bounds") {
  auto P = small_params();
  CHECK(P.y_count() == 6);
  CHECK(P.at(0, 0) == Rat(1));
  CHECK(P.at(0, 2) == Rat(1));  // border row
  CHECK(P.at(2, 0) == Rat(1));  // border column
  CHECK(P.at(1, 1) == Rat(2));
  CHECK(P.at(1, 2) == Rat(3));
  CHECK(P.at(2, 1) == Rat(5));
  CHECK(P.at(2, 2) == Rat(7));
  CHECK_THROWS(P.at(-1, 0));
  CHECK_THROWS(P.at(3, 0));
  CHECK_THROWS(P.at(0, 3));
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(validate_params(small_params()));
  auto bad = small_params();
  bad.r = 3;  // n != k(r-1) - 1
  CHECK_THROWS(validate_params(bad));
  bad = small_params();
  bad.a.pop_back();
  CHECK_THROWS(validate_params(bad));
  bad = small_params();
  bad.a[0].push_back(Rat(9));
  CHECK_THROWS(validate_params(bad));
  // General-r shape: k = 2, r = 3 gives n = 3 with one interior column.
  ParamMatrix<Rat> gen;
  gen.n = 3;
  gen.k = 2;
  gen.r = 3;
  gen.a = {{Rat(2)}, {Rat(3)}, {Rat(5)}};
  CHECK_NOTHROW(validate_params(gen));
  gen.n = 2;
  gen.a.pop_back();
  CHECK_THROWS(validate_params(gen));
}

TEST_CASE("canonical arrangement structure") {
  auto P = small_params();
  auto arr = canonical_arrangement(P);
  CHECK(arr.n == 2);
  REQUIRE(arr.m() == 6);  // 2n + 2 for a double cover
  CHECK_NOTHROW(validate_arrangement(arr));
  // Coordinate hyperplanes, then the all-ones hyperplane, then parameters.
  CHECK(arr.cols[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(arr.cols[1] == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
  CHECK(arr.cols[2] == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  CHECK(arr.cols[3] == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  CHECK(arr.cols[4] == std::vector<Rat>{Rat(1), Rat(2), Rat(5)});
  CHECK(arr.cols[5] == std::vector<Rat>{Rat(1), Rat(3), Rat(7)});
}

TEST_CASE("general position detection") {
  CHECK(is_general_position(canonical_arrangement(small_params())));
  // A parameter column equal to the all-ones column is degenerate.
  auto bad = small_params();
  bad.a = {{Rat(1), Rat(3)}, {Rat(1), Rat(7)}};
  CHECK_FALSE(is_general_position(canonical_arrangement(bad)));
  // Two identical parameter columns are degenerate.
  bad.a = {{Rat(2), Rat(2)}, {Rat(5), Rat(5)}};
  CHECK_FALSE(is_general_position(canonical_arrangement(bad)));
  // Zero columns are rejected structurally.
  Arrangement<Rat> z;
  z.n = 1;
  z.cols = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK_THROWS(validate_arrangement(z));
}

TEST_CASE("normalization inverts the canonical embedding") {
  auto P = small_params();
  auto arr = canonical_arrangement(P);
  auto back = normalize_arrangement(arr, 2);
  CHECK(back.n == P.n);
  CHECK(back.k == P.k);
  CHECK(back.a == P.a);
}

TEST_CASE("normalization is invariant under coordinate change and rescaling") {
  auto P = small_params();
  auto arr = canonical_arrangement(P);
  // Apply an invertible change of coordinates to every hyperplane covector
  // and rescale each hyperplane independently; the normal form must recover
  // the original parameters exactly.
  const std::vector<std::vector<Rat>> B = {
      {Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(2)}};
  REQUIRE(det_dense(B) != Rat(0));
  const Rat scales[] = {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)};
  Arrangement<Rat> moved;
  moved.n = arr.n;
  for (int c = 0; c < arr.m(); ++c) {
    std::vector<Rat> col(3, Rat(0));
    for (int rr = 0; rr < 3; ++rr)
      for (int t = 0; t < 3; ++t) col[rr] += B[rr][t] * arr.cols[c][t];
    for (auto& v : col) v *= scales[c];
    moved.cols.push_back(std::move(col));
  }
  auto back = normalize_arrangement(moved, 2);
  CHECK(back.a == P.a);
}

TEST_CASE("normalization error paths") {
  auto arr = canonical_arrangement(small_params());
  CHECK_THROWS_AS(normalize_arrangement(arr, 3), UnsupportedError);
  auto truncated = arr;
  truncated.cols.pop_back();
  CHECK_THROWS_AS(normalize_arrangement(truncated, 2), StructuralError);
  auto degen = small_params();
  degen.a = {{Rat(2), Rat(2)}, {Rat(5), Rat(5)}};
  CHECK_THROWS_AS(normalize_arrangement(canonical_arrangement(degen), 2), PreconditionError);
}

TEST_CASE("genericity screen") {
  auto rep = screen_params(small_params());
  CHECK(rep.ok);
  REQUIRE(rep.items.size() == 5);
  for (const auto& item : rep.items) CHECK(item.pass);

  auto bad = small_params();
  bad.a[0][0] = Rat(1);  // forbidden entry value
  auto rep1 = screen_params(bad);
  CHECK_FALSE(rep1.ok);
  CHECK_FALSE(rep1.items[0].pass);

  bad = small_params();
  bad.a[0][1] = Rat(2);  // duplicate within row 1
  auto rep2 = screen_params(bad);
  CHECK_FALSE(rep2.ok);
  CHECK_FALSE(rep2.items[1].pass);

  bad = small_params();
  bad.a[1][0] = Rat(2);  // duplicate within column 1
  auto rep3 = screen_params(bad);
  CHECK_FALSE(rep3.ok);
  CHECK_FALSE(rep3.items[2].pass);
}

TEST_CASE("entrywise screen is weaker than the full screen") {
  CHECK(entrywise_screen(small_params()));
  auto bad = small_params();
  bad.a[0][0] = Rat(0);
  CHECK_FALSE(entrywise_screen(bad));
  bad = small_params();
  bad.a[0][1] = Rat(2);
  CHECK_FALSE(entrywise_screen(bad));
}

TEST_CASE("samplers are deterministic in the seed") {
  RatSampler draw;
  auto P1 = sample_generic_params<Rat>(3, 4, 2, draw, 42);
  auto P2 = sample_generic_params<Rat>(3, 4, 2, draw, 42);
  CHECK(P1.a == P2.a);
  auto P3 = sample_generic_params<Rat>(3, 4, 2, draw, 43);
  CHECK(P1.a != P3.a);
  CHECK(screen_params(P1).ok);
  for (const auto& row : P1.a)
    for (const auto& v : row) {
      CHECK(v >= Rat(2));
      CHECK(v <= Rat(997));
    }

  FpSampler fdraw{1000003};
  auto Q1 = sample_generic_params<Fp>(3, 4, 2, fdraw, 7);
  auto Q2 = sample_generic_params<Fp>(3, 4, 2, fdraw, 7);
  CHECK(Q1.a == Q2.a);
  CHECK(screen_params(Q1).ok);

  auto E1 = sample_entrywise_params<Fp>(4, 5, 2, fdraw, 11);
  CHECK(entrywise_screen(E1));
  auto E2 = sample_entrywise_params<Fp>(4, 5, 2, fdraw, 11);
  CHECK(E1.a == E2.a);
}

TEST_CASE("displayed coefficient invariants") {
  RatSampler draw;
  auto P = sample_generic_params<Rat>(3, 4, 2, draw, 5);
  auto c = displayed_coefficients(P, 1, 1, 2, 2);
  CHECK(c[kIJ_PQ] == Rat(2));
  CHECK(c[kIQ_PJ] == Rat(2));
  // Tuple bounds are enforced.
  CHECK_THROWS_AS(displayed_coefficients(P, 2, 1, 1, 2), PreconditionError);
  CHECK_THROWS_AS(displayed_coefficients(P, 1, 2, 2, 1), PreconditionError);
  CHECK_THROWS_AS(displayed_coefficients(P, 0, 1, 2, 2), PreconditionError);
  CHECK(coeff_slot_names()[kIJ_IJ] == "lambda_ij^2");
  CHECK(coeff_slot_names()[kIQ_PJ] == "lambda_iq*lambda_pj");
}

TEST_CASE("pair resultant against the classic binary-quadratic formula") {
  // Shared root (x1 : x2) = (1 : 1) forces a zero resultant.
  std::array<Rat, 3> f1 = {Rat(1), Rat(-3), Rat(2)};   // (x1 - x2)(x1 - 2 x2)
  std::array<Rat, 3> f2 = {Rat(1), Rat(4), Rat(-5)};   // (x1 - x2)(x1 + 5 x2)
  CHECK(pair_resultant(f1, f2) == Rat(0));
  // Disjoint root sets give a nonzero resultant.
  std::array<Rat, 3> g1 = {Rat(1), Rat(0), Rat(1)};
  std::array<Rat, 3> g2 = {Rat(1), Rat(0), Rat(-1)};
  CHECK(pair_resultant(g1, g2) == Rat(4));
  // Random agreement with (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1).
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    auto rnd = [&] { return Rat(static_cast<long>(rng() % 19) - 9); };
    std::array<Rat, 3> u = {rnd(), rnd(), rnd()};
    std::array<Rat, 3> v = {rnd(), rnd(), rnd()};
    Rat classic = (u[0] * v[2] - v[0] * u[2]) * (u[0] * v[2] - v[0] * u[2]) -
                  (u[0] * v[1] - v[0] * u[1]) * (u[1] * v[2] - v[1] * u[2]);
    CHECK(pair_resultant(u, v) == classic);
  }
}

TEST_CASE("closed-form resultant families") {
  RatSampler draw;
  auto P3 = sample_generic_params<Rat>(3, 4, 2, draw, 1);
  auto rs3 = closed_form_resultants(P3);
  CHECK(rs3.size() == 2);  // one row pair (2,3), one column pair (2,3)
  auto P4 = sample_generic_params<Rat>(4, 5, 2, draw, 1);
  auto rs4 = closed_form_resultants(P4);
  CHECK(rs4.size() == 6);
  int rows = 0, cols = 0;
  for (const auto& rv : rs4) {
    CHECK_FALSE(is_zero(rv.value));  // the full screen already enforced this
    if (rv.family == 'R') ++rows;
    if (rv.family == 'Q') ++cols;
    CHECK(rv.first < rv.second);
  }
  CHECK(rows == 3);
  CHECK(cols == 3);
  // k = 2 has no admissible pairs at all.
  ParamMatrix<Rat> narrow;
  narrow.n = 3;
  narrow.k = 2;
  narrow.r = 3;
  narrow.a = {{Rat(2)}, {Rat(3)}, {Rat(5)}};
  CHECK(closed_form_resultants(narrow).empty());
}
