#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/certificate.hpp"
#include "jacring/charvar.hpp"
#include "jacring/errors.hpp"
#include "jacring/higgs.hpp"
#include "jacring/jacobian.hpp"
#include "jacring/sampling.hpp"

using namespace jacring;

namespace {

const std::uint64_t kP = 1000003;

JacobianPresentation<Fp> sampled(int n, int k, int r, std::uint64_t seed) {
  FpSampler draw{kP};
  return build_presentation(sample_generic_params<Fp>(n, k, r, draw, seed));
}

// Evaluate a lambda polynomial at a point given by its coordinate vector.
Fp eval(const LambdaPoly<Fp>& f, const std::vector<Fp>& x) {
  FpContext F(kP);
  Fp total = F.zero();
  for (const auto& [e, c] : f.terms()) {
    Fp term = c;
    for (std::size_t v = 0; v < x.size(); ++v)
      for (int t = 0; t < e[v]; ++t) term *= x[v];
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("first-order characteristic system generates the quadric ideal") {
  auto pres = sampled(2, 3, 2, 1);
  auto sys = build_quadric_system(pres);
  auto forms = characteristic_system(pres, 1);
  REQUIRE(static_cast<int>(forms.size()) == sys.nquadrics);
  // Same zero set: identical reduced bases.
  std::vector<LambdaPoly<Fp>> from_sys;
  for (const auto& M : sys.mats) from_sys.push_back(quadric_to_poly(M));
  auto gb1 = groebner_basis(from_sys, {});
  auto gb2 = groebner_basis(forms, {});
  REQUIRE(gb1.size() == gb2.size());
  for (std::size_t t = 0; t < gb1.size(); ++t) CHECK(gb1[t].terms() == gb2[t].terms());
}

TEST_CASE("higher characteristic systems have the expected shape") {
  auto pres = sampled(3, 4, 2, 5);
  // q = n - 1 targets the one-dimensional socle: a single nonzero cubic.
  auto f2 = characteristic_system(pres, 2);
  REQUIRE(f2.size() == 1);
  CHECK_FALSE(f2[0].is_zero());
  CHECK(f2[0].degree() == 3);
  // q = n: the target piece vanishes, so the system is empty.
  auto fn = characteristic_system(pres, 3);
  CHECK(fn.empty());
  CHECK_THROWS_AS(characteristic_system(pres, -1), PreconditionError);
}

TEST_CASE("quadric coordinates agree with direct ring arithmetic") {
  // The t-th quadric evaluated at lambda must equal coordinate t of the
  // square of alpha = sum_u lambda_u b_u, computed in the ring itself.
  auto pres = sampled(3, 4, 2, 11);
  auto sys = build_quadric_system(pres);
  auto first = graded_piece(pres, 1, 2, 0, BasisStyle::kPreferredProducts);
  auto second = graded_piece(pres, 2, 4, 0, BasisStyle::kPreferredProducts);
  FpContext F(kP);
  std::vector<Fp> lam(sys.nvars, F.zero());
  for (int t = 0; t < sys.nvars; ++t) lam[t] = F.from_int(2 + 3 * t);
  Polynomial<Fp> alpha;
  for (int u = 0; u < sys.nvars; ++u)
    alpha += Polynomial<Fp>::monomial(first.quotient_basis()[u], lam[u]);
  auto coords = second.reduce(alpha * alpha);
  REQUIRE(static_cast<int>(coords.size()) == sys.nquadrics);
  for (int t = 0; t < sys.nquadrics; ++t) {
    Fp direct = F.zero();
    for (int u = 0; u < sys.nvars; ++u)
      for (int v = 0; v < sys.nvars; ++v) direct += sys.mats[t][u][v] * lam[u] * lam[v];
    CHECK(coords[t] == direct);
  }
  // The same value comes from evaluating the characteristic system's forms
  // written in the reduction-order coordinates of the target piece.
  auto forms = characteristic_system(pres, 1);
  auto target = graded_piece(pres, 2, 4, 0, BasisStyle::kReductionOrder);
  auto coords2 = target.reduce(alpha * alpha);
  REQUIRE(forms.size() == coords2.size());
  for (std::size_t t = 0; t < forms.size(); ++t) CHECK(eval(forms[t], lam) == coords2[t]);
}

TEST_CASE("cone dimension at n = 2 is exactly three") {
  auto res = first_characteristic_dimension(sampled(2, 3, 2, 1), ConeBackend::kGroebner);
  CHECK(res.nvars == 4);
  CHECK(res.nquadrics == 1);
  REQUIRE(res.cone_dim_exact.has_value());
  CHECK(*res.cone_dim_exact == 3);
  CHECK(*res.dim_exact == 2);
  CHECK(res.comparison == 2);
  CHECK(res.verdict == "compatible");
}

TEST_CASE("cone dimension at n = 3 certifies incompatibility") {
  auto res = first_characteristic_dimension(sampled(3, 4, 2, 1), ConeBackend::kBoth);
  CHECK(res.nvars == 9);
  CHECK(res.nquadrics == 9);
  REQUIRE(res.cone_dim_exact.has_value());
  CHECK(*res.cone_dim_exact <= 3);
  REQUIRE(res.cone_dim_bound.has_value());
  CHECK(*res.cone_dim_bound == 3);
  CHECK(res.certificate_ok);
  CHECK(res.comparison == 4);
  CHECK(res.verdict == "incompatible");
  // Reproducible across seeds and primes.
  FpSampler big{2147483647};
  auto pres2 = build_presentation(sample_generic_params<Fp>(3, 4, 2, big, 7));
  auto res2 = first_characteristic_dimension(pres2, ConeBackend::kGroebner);
  CHECK(*res2.cone_dim_exact == *res.cone_dim_exact);
}

TEST_CASE("no quadrics at k = 2 leaves the full cone") {
  auto res = first_characteristic_dimension(sampled(3, 2, 3, 3), ConeBackend::kBoth);
  CHECK(res.nquadrics == 0);
  CHECK(res.nvars == 3);  // (k-1) * n
  REQUIRE(res.cone_dim_exact.has_value());
  CHECK(*res.cone_dim_exact == 3);
  CHECK(*res.dim_exact == 2);
  CHECK(res.comparison == 2);
  CHECK(res.verdict == "compatible");
}

TEST_CASE("certificate grid accounting") {
  {
    auto sys = build_quadric_system(sampled(3, 4, 2, 1));
    auto rep = filtration_certificate(sys);
    CHECK(rep.all_ok);
    CHECK(rep.steps.size() == 4);  // (k-2)(n-1)
    CHECK(rep.vars_total == 9);
    CHECK(rep.polys_total == 6);  // (k-1) n - 3
    CHECK(rep.cone_dim_bound == 3);
    CHECK(rep.projective_dim_bound == 2);
    CHECK(rep.steps[0].kind == "base");
    CHECK(rep.steps[0].vars_after == 4);
    int total_new = 0;
    for (const auto& st : rep.steps) {
      CHECK(st.ok());
      total_new += st.new_vars;
    }
    CHECK(total_new == rep.vars_total);
    CHECK(rep.steps.back().vars_after == rep.vars_total);
  }
  {
    // Non-square grid: general cover degree r = 3, k = 3 gives n = 5.
    auto sys = build_quadric_system(sampled(5, 3, 3, 2));
    auto rep = filtration_certificate(sys);
    CHECK(rep.all_ok);
    CHECK(rep.steps.size() == 4);   // (k-2)(n-1)
    CHECK(rep.vars_total == 10);    // (k-1) n
    CHECK(rep.polys_total == 7);
    // Step kinds: base, then column extensions only (k = 3 has no extra rows
    // beyond the second)... rows are 1..k-1 = 2, so no start-row steps.
    for (const auto& st : rep.steps)
      CHECK((st.kind == "base" || st.kind == "extend-columns"));
  }
  {
    auto sys = build_quadric_system(sampled(5, 6, 2, 4));
    auto rep = filtration_certificate(sys);
    CHECK(rep.all_ok);
    CHECK(rep.steps.size() == 16);
    CHECK(rep.vars_total == 25);
    int starts = 0, extends = 0, cols = 0, bases = 0;
    for (const auto& st : rep.steps) {
      bases += st.kind == "base";
      cols += st.kind == "extend-columns";
      starts += st.kind == "start-row";
      extends += st.kind == "extend-row";
    }
    CHECK(bases == 1);
    CHECK(cols == 3);     // columns 3..5
    CHECK(starts == 3);   // rows 3..5
    CHECK(extends == 9);  // rows 3..5, columns 3..5
  }
  // Too small for the grid construction.
  CHECK_THROWS_AS(filtration_certificate(build_quadric_system(sampled(3, 2, 3, 1))),
                  UnsupportedError);
}

TEST_CASE("certificate and basis agree on the bound ordering") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto res = first_characteristic_dimension(sampled(3, 4, 2, seed), ConeBackend::kBoth);
    REQUIRE(res.cone_dim_exact.has_value());
    REQUIRE(res.cone_dim_bound.has_value());
    CHECK(*res.cone_dim_exact <= *res.cone_dim_bound);
  }
}

TEST_CASE("backend labels") {
  CHECK(to_string(ConeBackend::kGroebner) == "groebner");
  CHECK(to_string(ConeBackend::kCertificate) == "certificate");
  CHECK(to_string(ConeBackend::kBoth) == "both");
  auto res = first_characteristic_dimension(sampled(2, 3, 2, 2), ConeBackend::kCertificate);
  CHECK_FALSE(res.cone_dim_exact.has_value());
  REQUIRE(res.cone_dim_bound.has_value());
  CHECK(*res.cone_dim_bound == 3);
  CHECK(*res.dim_bound == 2);
  // Bound equals the comparison dimension: not enough to conclude.
  CHECK(res.verdict == "inconclusive");
}
