#pragma once

#include <array>
#include <string>
#include <vector>

#include "jacring/arrangement.hpp"
#include "jacring/errors.hpp"
#include "jacring/linalg.hpp"

namespace jacring {

// The ten lambda-monomials a quadric indexed by (i, j, p, q) can involve:
// its four corner variables lambda_ij, lambda_iq, lambda_pj, lambda_pq in
// squares and pairwise products.  Fixed slot order used everywhere.
enum CoeffSlot : int {
  kIJ_IJ = 0,  // lambda_ij^2
  kIQ_IQ,      // lambda_iq^2
  kPJ_PJ,      // lambda_pj^2
  kPQ_PQ,      // lambda_pq^2
  kIJ_IQ,      // lambda_ij lambda_iq
  kPJ_PQ,      // lambda_pj lambda_pq
  kIJ_PJ,      // lambda_ij lambda_pj
  kIQ_PQ,      // lambda_iq lambda_pq
  kIJ_PQ,      // lambda_ij lambda_pq
  kIQ_PJ,      // lambda_iq lambda_pj
};

inline const std::array<std::string, 10>& coeff_slot_names() {
  static const std::array<std::string, 10> names = {
      "lambda_ij^2",        "lambda_iq^2",        "lambda_pj^2",        "lambda_pq^2",
      "lambda_ij*lambda_iq", "lambda_pj*lambda_pq", "lambda_ij*lambda_pj", "lambda_iq*lambda_pq",
      "lambda_ij*lambda_pq", "lambda_iq*lambda_pj"};
  return names;
}

template <class K>
void validate_coeff_tuple(const ParamMatrix<K>& P, int i, int j, int p, int q) {
  if (!(1 <= i && i < p && p <= P.k - 1))
    throw PreconditionError("coefficient tuple needs 1 <= i < p <= k-1");
  if (!(1 <= j && j < q && q <= P.n))
    throw PreconditionError("coefficient tuple needs 1 <= j < q <= n");
}

// The closed-form expressions for the ten coefficients of the quadric
// indexed by (i, j, p, q), as displayed; all denominators are pairwise
// differences (or entries, or entries minus one) that the genericity screen
// keeps nonzero.
template <class K>
std::array<K, 10> displayed_coefficients(const ParamMatrix<K>& P, int i, int j, int p, int q) {
  validate_coeff_tuple(P, i, j, p, q);
  const K aji = P.at(j, i), aqi = P.at(q, i), ajp = P.at(j, p), aqp = P.at(q, p);
  const K one = one_like(aji);
  const K two = one + one;
  std::array<K, 10> c;
  c[kIJ_PQ] = two;
  c[kIQ_PJ] = two;
  c[kIJ_IQ] = two * (ajp - aqp) / (aqi - aji);
  c[kPJ_PQ] = two * (aji - aqi) / (aqp - ajp);
  c[kIJ_PJ] = two * (aqi - aqp) / (ajp - aji);
  c[kIQ_PQ] = two * (aji - ajp) / (aqp - aqi);
  c[kIJ_IJ] = (one / aji) * ((ajp - one) / (aji - one)) * (ajp * (aqp - aqi) / (ajp - aji) - aqp) +
              (aqi / aji) * ((aqp - ajp) / (aqi - aji));
  c[kIQ_IQ] = (one / aqi) * ((aqp - one) / (aqi - one)) * (aqp * (ajp - aji) / (aqp - aqi) - ajp) +
              (aji / aqi) * ((ajp - aqp) / (aji - aqi));
  c[kPJ_PJ] = (one / ajp) * ((aji - one) / (ajp - one)) * (aji * (aqi - aqp) / (aji - ajp) - aqi) +
              (aqp / ajp) * ((aqi - aji) / (aqp - ajp));
  c[kPQ_PQ] = (one / aqp) * ((aqi - one) / (aqp - one)) * (aqi * (aji - ajp) / (aqi - aqp) - aji) +
              (ajp / aqp) * ((aji - aqi) / (ajp - aqp));
  return c;
}

// Resultant of two quadrics in two distinguished variables x1, x2 with
// coefficient triples (a, b, c) on x1^2, x1 x2, x2^2: the 4x4 determinant
// whose vanishing detects a common solution in x1 after eliminating x2.
template <class K>
K pair_resultant(const std::array<K, 3>& f1, const std::array<K, 3>& f2) {
  const K zero = from_int_like(f1[0], 0);
  std::vector<std::vector<K>> m = {
      {f1[0], zero, f2[0], zero},
      {f1[1], f1[0], f2[1], f2[0]},
      {f1[2], f1[1], f2[2], f2[1]},
      {zero, f1[2], zero, f2[2]},
  };
  return det_dense(m);
}

template <class K>
struct ResultantValue {
  char family = '?';  // 'R' = row pair (j, q), 'Q' = column pair (i, p)
  int first = 0, second = 0;
  K value;
};

// Coefficient triple of the quadric (i,j,p,q) on the variable pair
// (lambda_iq, lambda_pq): used by the row-family resultants.
template <class K>
std::array<K, 3> row_direction_triple(const std::array<K, 10>& c) {
  return {c[kIQ_IQ], c[kIQ_PQ], c[kPQ_PQ]};
}

// Coefficient triple on (lambda_pj, lambda_pq): used by the column family.
template <class K>
std::array<K, 3> column_direction_triple(const std::array<K, 10>& c) {
  return {c[kPJ_PJ], c[kPJ_PQ], c[kPQ_PQ]};
}

// All row-family resultants R_{j,q} (2 <= j < q <= n, from quadrics (1,1,2,q)
// and (1,j,2,q)) and column-family resultants Q_{i,p} (2 <= i < p <= k-1,
// from quadrics (1,1,p,2) and (i,1,p,2)), evaluated from the displayed
// closed forms.
template <class K>
std::vector<ResultantValue<K>> closed_form_resultants(const ParamMatrix<K>& P) {
  std::vector<ResultantValue<K>> out;
  if (P.k - 1 >= 2) {
    for (int j = 2; j <= P.n; ++j)
      for (int q = j + 1; q <= P.n; ++q) {
        auto f1 = row_direction_triple(displayed_coefficients(P, 1, 1, 2, q));
        auto f2 = row_direction_triple(displayed_coefficients(P, 1, j, 2, q));
        out.push_back({'R', j, q, pair_resultant(f1, f2)});
      }
  }
  if (P.n >= 2) {
    for (int i = 2; i <= P.k - 1; ++i)
      for (int p = i + 1; p <= P.k - 1; ++p) {
        auto f1 = column_direction_triple(displayed_coefficients(P, 1, 1, p, 2));
        auto f2 = column_direction_triple(displayed_coefficients(P, i, 1, p, 2));
        out.push_back({'Q', i, p, pair_resultant(f1, f2)});
      }
  }
  return out;
}

}  // namespace jacring
