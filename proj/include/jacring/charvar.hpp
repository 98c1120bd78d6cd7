#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacring/certificate.hpp"
#include "jacring/groebner.hpp"
#include "jacring/higgs.hpp"

namespace jacring {

// The degree-(q+1) characteristic system: coordinates of the (q+1)-st power
// of a generic first-piece element sum_{ij} lambda_{ij} b_{ij} inside the
// (q+1, (q+1) r) piece, as forms in the lambda variables.  Coefficients come
// from reducing products of basis monomials (weighted by multinomial
// coefficients); no symbolic lambda arithmetic is involved.  For q = 1 the
// system is the quadric system.
template <class K>
std::vector<LambdaPoly<K>> characteristic_system(const JacobianPresentation<K>& pres, int q) {
  if (q < 0) throw PreconditionError("characteristic system needs q >= 0");
  const int t = q + 1;
  GradedPiece<K> first = graded_piece(pres, 1, pres.r, 0, BasisStyle::kPreferredProducts);
  GradedPiece<K> target = graded_piece(pres, t, t * pres.r, 0);
  const int nvars = first.dim();
  const K one = one_like(pres.params.at(1, 1));

  std::vector<LambdaPoly<K>> forms(target.dim(), LambdaPoly<K>(nvars));
  if (target.dim() == 0 || nvars == 0) return forms;

  // Multisets of size t over the lambda variables, as nondecreasing index
  // tuples; the multinomial coefficient t! / prod(multiplicities!).
  std::vector<int> choice(t, 0);
  mpz_class t_factorial = 1;
  for (int s = 2; s <= t; ++s) t_factorial *= s;
  while (true) {
    Monomial prod = first.quotient_basis()[choice[0]];
    mpz_class denom = 1;
    int run = 1;
    for (int s = 1; s < t; ++s) {
      prod = prod * first.quotient_basis()[choice[s]];
      if (choice[s] == choice[s - 1]) {
        ++run;
        denom *= run;
      } else {
        run = 1;
      }
    }
    mpz_class multinom = t_factorial / denom;
    K weight = from_int_like(one, 1);
    {
      // Build the multinomial coefficient in the scalar field.
      K acc = from_int_like(one, 0);
      const K kone = one;
      mpz_class left = multinom;
      // Horner over the decimal digits keeps this exact for both fields.
      std::string digits = left.get_str();
      const K ten = from_int_like(one, 10);
      for (char d : digits) acc = acc * ten + from_int_like(kone, d - '0');
      weight = acc;
    }
    ExpVec e(nvars, 0);
    for (int s = 0; s < t; ++s) e[choice[s]] = static_cast<std::int16_t>(e[choice[s]] + 1);
    std::vector<K> coords = target.reduce(Polynomial<K>::monomial(prod, one));
    for (int c = 0; c < target.dim(); ++c)
      if (!is_zero(coords[c])) forms[c].add_term(e, weight * coords[c]);

    int pos = t - 1;
    while (pos >= 0 && choice[pos] == nvars - 1) --pos;
    if (pos < 0) break;
    ++choice[pos];
    for (int s = pos + 1; s < t; ++s) choice[s] = choice[pos];
  }
  return forms;
}

enum class ConeBackend { kGroebner, kCertificate, kBoth };

inline std::string to_string(ConeBackend b) {
  switch (b) {
    case ConeBackend::kGroebner:
      return "groebner";
    case ConeBackend::kCertificate:
      return "certificate";
    default:
      return "both";
  }
}

// Dimension analysis of the first characteristic subvariety: the
// projectivized cone cut out by the quadric system in the lambda grid.
struct CharVarResult {
  int n = 0, k = 0, r = 0;
  std::string backend;
  int nvars = 0;
  int nquadrics = 0;
  std::optional<int> cone_dim_exact;    // Krull dimension from a basis computation
  std::optional<int> cone_dim_bound;    // from the filtration certificate
  std::optional<int> dim_exact;         // projective dimension when exact
  std::optional<int> dim_bound;         // projective upper bound
  int comparison = 0;                   // n + k - 3
  std::string verdict;                  // "incompatible" | "compatible" | "inconclusive"
  bool certificate_ok = false;
  std::optional<CertificateReport> certificate;
};

template <class K>
CharVarResult first_characteristic_dimension(const JacobianPresentation<K>& pres,
                                             ConeBackend backend,
                                             const GroebnerBudget& budget = {}) {
  CharVarResult res;
  res.n = pres.n;
  res.k = pres.k;
  res.r = pres.r;
  res.backend = to_string(backend);
  res.comparison = pres.n + pres.k - 3;

  QuadricSystem<K> sys = build_quadric_system(pres);
  res.nvars = sys.nvars;
  res.nquadrics = sys.nquadrics;

  if (sys.nquadrics == 0) {
    // No constraints: the cone is the whole lambda space.
    res.cone_dim_exact = sys.nvars;
    res.dim_exact = sys.nvars - 1;
    res.dim_bound = sys.nvars - 1;
  } else {
    const bool want_gb = backend != ConeBackend::kCertificate;
    const bool want_cert = backend != ConeBackend::kGroebner;
    if (want_gb) {
      std::vector<LambdaPoly<K>> gens;
      for (const auto& M : sys.mats) gens.push_back(quadric_to_poly(M));
      std::vector<LambdaPoly<K>> gb = groebner_basis(std::move(gens), budget);
      const int cone = staircase_dimension(gb, sys.nvars);
      res.cone_dim_exact = cone;
      res.dim_exact = cone - 1;  // empty projectivization reads as dimension -1 or lower
    }
    if (want_cert) {
      res.certificate = filtration_certificate(sys);
      res.certificate_ok = res.certificate->all_ok;
      if (res.certificate_ok) res.cone_dim_bound = res.certificate->cone_dim_bound;
    }
    if (res.cone_dim_exact && res.cone_dim_bound &&
        *res.cone_dim_exact > *res.cone_dim_bound)
      throw InconsistencyError("exact cone dimension exceeds the certified bound");
    if (res.dim_exact)
      res.dim_bound = *res.dim_exact;
    else if (res.cone_dim_bound)
      res.dim_bound = *res.cone_dim_bound - 1;
  }

  if (res.dim_exact)
    res.verdict = *res.dim_exact < res.comparison ? "incompatible" : "compatible";
  else if (res.dim_bound)
    res.verdict = *res.dim_bound < res.comparison ? "incompatible" : "inconclusive";
  else
    res.verdict = "inconclusive";
  return res;
}

}  // namespace jacring
