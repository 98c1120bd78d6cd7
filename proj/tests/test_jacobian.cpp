#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/combinatorics.hpp"
#include "jacring/errors.hpp"
#include "jacring/jacobian.hpp"
#include "jacring/sampling.hpp"

using namespace jacring;

namespace {

ParamMatrix<Rat> fixed_params() {
  ParamMatrix<Rat> P;
  P.n = 2;
  P.k = 3;
  P.r = 2;
  P.a = {{Rat(2), Rat(3)}, {Rat(5), Rat(7)}};
  return P;
}

// mu_i * y_j^e as a polynomial in the ambient ring of pres.
template <class K>
Polynomial<K> mu_y_power(const JacobianPresentation<K>& pres, int i, int j, int e, K coeff) {
  Monomial m = Monomial::one(pres.k, pres.m);
  m.mu[i] = 1;
  m.y[j] = static_cast<std::int16_t>(e);
  return Polynomial<K>::monomial(m, coeff);
}

}  // namespace

TEST_CASE("presentation shape and generator bidegrees") {
  auto pres = build_presentation(fixed_params());
  CHECK(pres.n == 2);
  CHECK(pres.k == 3);
  CHECK(pres.m == 6);
  CHECK(pres.master.bidegree() == std::pair<int, int>{1, 2});
  REQUIRE(pres.mu_partials.size() == 3);
  REQUIRE(pres.y_partials.size() == 6);
  for (const auto& g : pres.mu_partials) {
    CHECK(g.bidegree() == std::pair<int, int>{0, 2});
    CHECK(g.term_count() == 4);  // y_{n+1+i}^2 minus three branch terms
  }
  for (const auto& g : pres.y_partials) CHECK(g.bidegree() == std::pair<int, int>{1, 1});
  // The mu-partial for sheet i recovers the branch form: for i = 1,
  // F_1 = y_4^2 - y_0^2 - 2 y_1^2 - 5 y_2^2.
  Polynomial<Rat> f1;
  {
    Monomial m = Monomial::one(3, 6);
    m.y[4] = 2;
    f1 += Polynomial<Rat>::monomial(m, Rat(1));
    const long coeffs[] = {-1, -2, -5};
    for (int j = 0; j < 3; ++j) {
      Monomial b = Monomial::one(3, 6);
      b.y[j] = 2;
      f1 += Polynomial<Rat>::monomial(b, Rat(coeffs[j]));
    }
  }
  CHECK(pres.mu_partials[1] == f1);
  // Partials of the master form are consistent with the stored generators.
  for (int i = 0; i < pres.k; ++i) CHECK(pres.master.partial_mu(i) == pres.mu_partials[i]);
  for (int j = 0; j < pres.m; ++j) CHECK(pres.master.partial_y(j) == pres.y_partials[j]);
}

TEST_CASE("residue-constrained exponent enumeration") {
  // Exponents of length 3 with residues (1, 0, 1) mod 2 and total 4:
  // (3,0,1), (1,2,1), (1,0,3).
  std::vector<std::vector<std::int16_t>> seen;
  enumerate_y_exponents_with_residues({1, 0, 1}, 4, 2, [&](const std::vector<std::int16_t>& b) {
    seen.push_back(b);
  });
  CHECK(seen.size() == 3);
  for (const auto& b : seen) {
    CHECK(b[0] + b[1] + b[2] == 4);
    CHECK(b[0] % 2 == 1);
    CHECK(b[1] % 2 == 0);
    CHECK(b[2] % 2 == 1);
  }
  // Infeasible residue/total combinations yield nothing.
  int count = 0;
  enumerate_y_exponents_with_residues({1, 1, 1}, 2, 2, [&](const std::vector<std::int16_t>&) { ++count; });
  CHECK(count == 0);
  enumerate_y_exponents_with_residues({0, 0}, 3, 2, [&](const std::vector<std::int16_t>&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("preferred product lists") {
  auto pres = build_presentation(fixed_params());
  auto first = preferred_products(pres, 1);
  REQUIRE(first.size() == 4);  // (k-1) * n
  // Lexicographic tuple order (i, j): (1,1), (1,2), (2,1), (2,2).
  CHECK(first[0].mu == std::vector<std::int16_t>{0, 1, 0});
  CHECK(first[0].y == std::vector<std::int16_t>{0, 2, 0, 0, 0, 0});
  CHECK(first[1].y == std::vector<std::int16_t>{0, 0, 2, 0, 0, 0});
  CHECK(first[2].mu == std::vector<std::int16_t>{0, 0, 1});
  CHECK(first[3].y == std::vector<std::int16_t>{0, 0, 2, 0, 0, 0});
  auto second = preferred_products(pres, 2);
  REQUIRE(second.size() == 1);  // C(2,2) * C(2,2)
  CHECK(second[0].mu == std::vector<std::int16_t>{0, 1, 1});
  CHECK(second[0].y == std::vector<std::int16_t>{0, 2, 2, 0, 0, 0});
  CHECK_THROWS_AS(preferred_products(pres, 3), UnsupportedError);
}

TEST_CASE("graded piece dimensions at the fixed parameters") {
  auto pres = build_presentation(fixed_params());
  auto piece = graded_piece(pres, 1, 2, 0, BasisStyle::kReductionOrder);
  // Ambient: 3 choices of mu times 6 even y-monomials of degree 2.
  CHECK(piece.ambient_dim() == 18);
  CHECK(piece.dim() == 4);  // C(2,1) * C(2,1)
  CHECK(piece.rank() == 14);
  // Odd eigenclass in y-degree 2 is empty: six variables cannot all carry
  // odd exponents summing to 2.
  auto odd = graded_piece(pres, 1, 2, 1, BasisStyle::kReductionOrder);
  CHECK(odd.ambient_dim() == 0);
  CHECK(odd.dim() == 0);
}

TEST_CASE("reduction oracles at the fixed parameters") {
  // Frozen by hand from the defining relations: in the (1, 2) piece the
  // classes of mu_1 y_1^2, mu_1 y_2^2, mu_2 y_1^2, mu_2 y_2^2 form a basis.
  // Row relation y_1^2 (mu_0 + 2 mu_1 + 3 mu_2) = 0 gives
  //   mu_0 y_1^2 = -2 mu_1 y_1^2 - 3 mu_2 y_1^2,
  // and combining the three column relations
  //   mu_i (y_0^2 + a(1,i) y_1^2 + a(2,i) y_2^2) = 0 with the row relation
  // for y_0^2 gives mu_0 y_0^2 = 2 mu_1 y_1^2 + 5 mu_1 y_2^2 + 3 mu_2 y_1^2
  // + 7 mu_2 y_2^2.
  auto pres = build_presentation(fixed_params());
  auto piece = graded_piece(pres, 1, 2, 0, BasisStyle::kPreferredProducts);
  REQUIRE(piece.dim() == 4);
  // The preferred quotient basis is exactly the product list, in order.
  auto prods = preferred_products(pres, 1);
  CHECK(piece.quotient_basis() == prods);

  auto coords = [&](int i, int j) { return piece.reduce(mu_y_power(pres, i, j, 2, Rat(1))); };
  CHECK(coords(0, 3) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(coords(0, 1) == std::vector<Rat>{Rat(-2), Rat(0), Rat(-3), Rat(0)});
  CHECK(coords(0, 0) == std::vector<Rat>{Rat(2), Rat(5), Rat(3), Rat(7)});
  // Basis vectors reduce to themselves.
  CHECK(coords(1, 1) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(coords(2, 2) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
  // Sheet monomials mu_i y_{n+1+i}^2 lie in the ideal.
  CHECK(coords(1, 4) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(coords(2, 5) == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("reduce validates bidegree and character") {
  auto pres = build_presentation(fixed_params());
  auto piece = graded_piece(pres, 1, 2, 0, BasisStyle::kReductionOrder);
  CHECK_THROWS_AS(piece.reduce(mu_y_power(pres, 0, 1, 4, Rat(1))), PreconditionError);  // wrong degree
  // Wrong character: y-degree 2 with odd exponents on two variables.
  Monomial mixed = Monomial::one(pres.k, pres.m);
  mixed.mu[0] = 1;
  mixed.y[0] = 1;
  mixed.y[1] = 1;
  CHECK_THROWS_AS(piece.reduce(Polynomial<Rat>::monomial(mixed, Rat(1))), PreconditionError);
  // The zero polynomial reduces to the zero vector.
  CHECK(piece.reduce(Polynomial<Rat>::zero()) == std::vector<Rat>(4, Rat(0)));
}

TEST_CASE("ideal membership of generator multiples") {
  // Every multiple of a defining generator lands in the zero class; checked
  // across random multiplier monomials of bidegree (1, 2) - deg(gen) over a
  // prime field for speed.
  FpSampler draw{1000003};
  auto P = sample_generic_params<Fp>(3, 4, 2, draw, 17);
  auto pres = build_presentation(P);
  auto piece = graded_piece(pres, 1, 4, 0, BasisStyle::kReductionOrder);
  const int dim = piece.dim();
  // mu-partials have bidegree (0, 2): multiply by mu_a y_c^2 to land in (1, 4).
  for (int i = 0; i < pres.k; ++i) {
    Polynomial<Fp> g = pres.mu_partials[i];
    Monomial mult = Monomial::one(pres.k, pres.m);
    mult.mu[0] = 1;
    mult.y[0] = 2;
    CHECK(piece.reduce(g.times_monomial(mult)) == std::vector<Fp>(dim, Fp{0, draw.p}));
  }
  // y-partials have bidegree (1, 1): multiply by mu_a y_c to land in (2, 2).
  auto piece22 = graded_piece(pres, 2, 2, 0, BasisStyle::kReductionOrder);
  for (int j = 0; j <= pres.n; ++j) {
    Polynomial<Fp> g = pres.y_partials[j];
    Monomial mult = Monomial::one(pres.k, pres.m);
    mult.mu[1] = 1;
    mult.y[j] = 1;
    CHECK(piece22.reduce(g.times_monomial(mult)) ==
          std::vector<Fp>(piece22.dim(), Fp{0, draw.p}));
  }
}

TEST_CASE("hodge numbers match closed forms across shapes and fields") {
  // Double cover, n = 3 over Q.
  {
    RatSampler draw;
    auto P = sample_generic_params<Rat>(3, 4, 2, draw, 9);
    auto pres = build_presentation(P);
    auto rows = hodge_numbers(pres);
    REQUIRE(rows.size() == 4);
    const long expect[] = {1, 9, 9, 1};  // C(3,q)^2
    for (int q = 0; q <= 3; ++q) {
      CHECK(rows[q].agree);
      CHECK(rows[q].dim == expect[q]);
    }
  }
  // Cyclic cover of degree 3 with k = 2 (n = 3) over F_p.
  {
    FpSampler draw{1000003};
    auto P = sample_generic_params<Fp>(3, 2, 3, draw, 4);
    auto pres = build_presentation(P);
    auto rows = hodge_numbers(pres);
    REQUIRE(rows.size() == 4);
    const long expect[] = {1, 3, 0, 0};  // C(3,q) * C(1,q)
    for (int q = 0; q <= 3; ++q) {
      CHECK(rows[q].dim == expect[q]);
      CHECK(rows[q].agree);
    }
  }
  // q_max truncation.
  {
    FpSampler draw{1000003};
    auto P = sample_generic_params<Fp>(4, 5, 2, draw, 21);
    auto pres = build_presentation(P);
    auto rows = hodge_numbers(pres, 1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].dim == 1);
    CHECK(rows[1].dim == 16);
  }
}

TEST_CASE("preferred basis styles agree with reduction-order dimensions") {
  FpSampler draw{1000003};
  auto P = sample_generic_params<Fp>(3, 4, 2, draw, 33);
  auto pres = build_presentation(P);
  auto a = graded_piece(pres, 1, 2, 0, BasisStyle::kReductionOrder);
  auto b = graded_piece(pres, 1, 2, 0, BasisStyle::kPreferredProducts);
  CHECK(a.dim() == b.dim());
  CHECK(a.ambient_dim() == b.ambient_dim());
  CHECK(b.quotient_basis() == preferred_products(pres, 1));
  auto c = graded_piece(pres, 2, 4, 0, BasisStyle::kPreferredProducts);
  CHECK(c.quotient_basis() == preferred_products(pres, 2));
  // Preferred style only applies to the invariant eigenclass at q = p*r.
  CHECK_THROWS_AS(graded_piece(pres, 1, 3, 0, BasisStyle::kPreferredProducts), UnsupportedError);
  CHECK_THROWS_AS(graded_piece(pres, 1, 2, 1, BasisStyle::kPreferredProducts), UnsupportedError);
}

TEST_CASE("coordinates are independent of the parameter field representative") {
  // Reducing the same integer parameters over Q and over F_p gives the same
  // quotient dimensions and matching reduced coordinates mod p.
  RatSampler draw;
  auto PQ = sample_generic_params<Rat>(2, 3, 2, draw, 51);
  ParamMatrix<Fp> PF;
  PF.n = PQ.n;
  PF.k = PQ.k;
  PF.r = PQ.r;
  const std::uint64_t p = 1000003;
  for (const auto& row : PQ.a) {
    PF.a.emplace_back();
    for (const auto& v : row) PF.a.back().push_back(reduce_mod(v, p));
  }
  auto presQ = build_presentation(PQ);
  auto presF = build_presentation(PF);
  auto pieceQ = graded_piece(presQ, 1, 2, 0, BasisStyle::kPreferredProducts);
  auto pieceF = graded_piece(presF, 1, 2, 0, BasisStyle::kPreferredProducts);
  REQUIRE(pieceQ.dim() == pieceF.dim());
  for (int i = 0; i < presQ.k; ++i)
    for (int j = 0; j < presQ.m; ++j) {
      auto cq = pieceQ.reduce(mu_y_power(presQ, i, j, 2, Rat(1)));
      auto cf = pieceF.reduce(mu_y_power(presF, i, j, 2, Fp{1, p}));
      for (std::size_t t = 0; t < cq.size(); ++t) CHECK(reduce_mod(cq[t], p) == cf[t]);
    }
}
