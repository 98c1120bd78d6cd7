#pragma once

#include <string>
#include <vector>

#include "jacring/higgs.hpp"

namespace jacring {

// Filtration certificate that the cone cut out by the quadric system has
// dimension at most 3 (so the projectivized locus has dimension at most 2).
//
// The lambda grid has rows 1..k-1 and columns 1..n.  Variables are introduced
// in stages; every stage is justified by a scalar nonvanishing that forces
// the projection to the previous stage to have finite fibers:
//   * base: variables (1,1), (1,2), (2,1), (2,2); the single quadric
//     (1,2,1,2) is nonzero, so the first stage is a hypersurface in C^4 of
//     dimension at most 3;
//   * column extension p -> p+1 (p = 2..n-1): new variables (1,p+1) and
//     (2,p+1); quadrics (1,2,1,p+1) and (1,2,p,p+1) restrict on each fiber to
//     two binary quadrics in the new pair whose resultant is the row-family
//     value R_{p,p+1} != 0;
//   * row start R (R = 3..k-1): new variables (R,1) and (R,2); quadrics
//     (1,R,1,2) and (R-1,R,1,2) give the column-family resultant
//     Q_{R-1,R} != 0;
//   * row extension (R, s -> s+1) (s = 2..n-1): new variable (R,s+1); the
//     quadric (R-1,R,s,s+1) is quadratic in it with constant leading
//     coefficient (the lambda_pq^2 slot) != 0.
// Every quadric used must also be supported on its four corner variables, so
// that it involves no variables outside the current stage.

struct CertificateStep {
  std::string kind;  // "base", "extend-columns", "start-row", "extend-row"
  std::string label;
  std::vector<std::string> quadrics_used;
  bool nonzero = false;     // the scalar justification is nonzero
  bool support_ok = false;  // used quadrics confined to their corners
  int new_vars = 0;
  int vars_after = 0;
  bool ok() const { return nonzero && support_ok; }
};

struct CertificateReport {
  int n = 0, k = 0, r = 0;
  std::vector<CertificateStep> steps;
  int vars_total = 0;
  int polys_total = 0;
  bool all_ok = false;
  int cone_dim_bound = -1;        // 3 when the certificate validates
  int projective_dim_bound = -1;  // cone_dim_bound - 1
};

namespace detail {
inline std::string quadric_name(int i, int p, int j, int q) {
  return "f(" + std::to_string(i) + "," + std::to_string(p) + "," + std::to_string(j) + "," +
         std::to_string(q) + ")";
}
}  // namespace detail

template <class K>
CertificateReport filtration_certificate(const QuadricSystem<K>& sys) {
  if (sys.k < 3 || sys.n < 2)
    throw UnsupportedError("filtration certificate needs a grid with at least 2 rows and 2 columns");

  CertificateReport rep;
  rep.n = sys.n;
  rep.k = sys.k;
  rep.r = sys.r;

  int vars = 0;
  int polys = 0;
  auto any_nonzero = [](const std::array<K, 10>& c) {
    for (const auto& v : c)
      if (!is_zero(v)) return true;
    return false;
  };

  {
    CertificateStep st;
    st.kind = "base";
    st.label = "rows 1,2 x columns 1,2";
    st.quadrics_used = {detail::quadric_name(1, 2, 1, 2)};
    st.nonzero = any_nonzero(sys.computed_coefficients(1, 1, 2, 2));
    st.support_ok = sys.support_confined(1, 1, 2, 2);
    st.new_vars = 4;
    vars += 4;
    polys += 1;
    st.vars_after = vars;
    rep.steps.push_back(std::move(st));
  }

  for (int p = 2; p <= sys.n - 1; ++p) {
    CertificateStep st;
    st.kind = "extend-columns";
    st.label = "column " + std::to_string(p + 1);
    st.quadrics_used = {detail::quadric_name(1, 2, 1, p + 1), detail::quadric_name(1, 2, p, p + 1)};
    auto c1 = sys.computed_coefficients(1, 1, 2, p + 1);
    auto c2 = sys.computed_coefficients(1, p, 2, p + 1);
    st.nonzero = !is_zero(pair_resultant(row_direction_triple(c1), row_direction_triple(c2)));
    st.support_ok = sys.support_confined(1, 1, 2, p + 1) && sys.support_confined(1, p, 2, p + 1);
    st.new_vars = 2;
    vars += 2;
    polys += 2;
    st.vars_after = vars;
    rep.steps.push_back(std::move(st));
  }

  for (int R = 3; R <= sys.k - 1; ++R) {
    {
      CertificateStep st;
      st.kind = "start-row";
      st.label = "row " + std::to_string(R) + ", columns 1,2";
      st.quadrics_used = {detail::quadric_name(1, R, 1, 2), detail::quadric_name(R - 1, R, 1, 2)};
      auto c1 = sys.computed_coefficients(1, 1, R, 2);
      auto c2 = sys.computed_coefficients(R - 1, 1, R, 2);
      st.nonzero =
          !is_zero(pair_resultant(column_direction_triple(c1), column_direction_triple(c2)));
      st.support_ok = sys.support_confined(1, 1, R, 2) && sys.support_confined(R - 1, 1, R, 2);
      st.new_vars = 2;
      vars += 2;
      polys += 2;
      st.vars_after = vars;
      rep.steps.push_back(std::move(st));
    }
    for (int s = 2; s <= sys.n - 1; ++s) {
      CertificateStep st;
      st.kind = "extend-row";
      st.label = "row " + std::to_string(R) + ", column " + std::to_string(s + 1);
      st.quadrics_used = {detail::quadric_name(R - 1, R, s, s + 1)};
      auto c = sys.computed_coefficients(R - 1, s, R, s + 1);
      st.nonzero = !is_zero(c[kPQ_PQ]);
      st.support_ok = sys.support_confined(R - 1, s, R, s + 1);
      st.new_vars = 1;
      vars += 1;
      polys += 1;
      st.vars_after = vars;
      rep.steps.push_back(std::move(st));
    }
  }

  rep.vars_total = vars;
  rep.polys_total = polys;
  if (vars != sys.nvars)
    throw InconsistencyError("certificate stages do not exhaust the lambda grid");

  rep.all_ok = true;
  for (const auto& st : rep.steps) rep.all_ok = rep.all_ok && st.ok();
  rep.cone_dim_bound = rep.all_ok ? 3 : -1;
  rep.projective_dim_bound = rep.all_ok ? 2 : -1;
  return rep;
}

}  // namespace jacring
