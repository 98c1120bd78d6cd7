#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "jacring/closed_forms.hpp"
#include "jacring/jacobian.hpp"

namespace jacring {

// ---------------------------------------------------------------------------
// Multiplication structure between graded pieces.
// ---------------------------------------------------------------------------

// Rank of the t-fold multiplication map Sym^t(first piece) -> (t, t*r) piece.
// Both pieces use the canonical reduction-order bases; products of basis
// monomials are reduced and the resulting coordinate matrix is eliminated.
template <class K>
int iterated_multiplication_rank(const JacobianPresentation<K>& pres, int t) {
  if (t < 0) throw PreconditionError("multiplication depth must be nonnegative");
  GradedPiece<K> target = graded_piece(pres, t, t * pres.r, 0);
  if (t == 0) return target.dim() > 0 ? 1 : 0;
  GradedPiece<K> first = graded_piece(pres, 1, pres.r, 0);
  const int nvars = first.dim();

  std::vector<SparseVec<K>> rows;
  std::vector<int> choice(t, 0);
  // Multisets of size t from the first-piece basis, nondecreasing indices.
  while (true) {
    Monomial prod = first.quotient_basis()[choice[0]];
    for (int s = 1; s < t; ++s) prod = prod * first.quotient_basis()[choice[s]];
    Polynomial<K> f = Polynomial<K>::monomial(prod, one_like(pres.params.at(1, 1)));
    std::vector<K> coords = target.reduce(f);
    SparseVec<K> row;
    for (int c = 0; c < static_cast<int>(coords.size()); ++c)
      if (!is_zero(coords[c])) row.emplace_back(c, coords[c]);
    if (!row.empty()) rows.push_back(std::move(row));
    int pos = t - 1;
    while (pos >= 0 && choice[pos] == nvars - 1) --pos;
    if (pos < 0) break;
    ++choice[pos];
    for (int s = pos + 1; s < t; ++s) choice[s] = choice[pos];
  }
  SparseRref<K> rref;
  rref.build(std::move(rows), target.dim());
  return rref.rank();
}

// ---------------------------------------------------------------------------
// Relation checks in the quotient ring.
// ---------------------------------------------------------------------------

struct RelationCheck {
  std::string name;
  bool ok = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  int failures = 0;
  bool all_ok() const { return failures == 0; }
  void add(std::string name, bool ok) {
    if (!ok) ++failures;
    checks.push_back({std::move(name), ok});
  }
};

// The two basic relation families in the (1, r) piece:
//   column family, one per mu-index i:  sum_j a_{ji} mu_i y_j^r  ->  0
//   row family, one per y-index j <= n: sum_i a_{ji} mu_i y_j^r  ->  0
template <class K>
RelationReport verify_basic_relations(const JacobianPresentation<K>& pres) {
  GradedPiece<K> piece = graded_piece(pres, 1, pres.r, 0);
  RelationReport rep;
  auto all_zero = [](const std::vector<K>& v) {
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  };
  for (int i = 0; i < pres.k; ++i) {
    Polynomial<K> f;
    for (int j = 0; j <= pres.n; ++j) {
      Monomial m = Monomial::one(pres.k, pres.m);
      m.mu[i] = 1;
      m.y[j] = static_cast<std::int16_t>(pres.r);
      f.add_term(m, pres.params.at(j, i));
    }
    rep.add("column relation i=" + std::to_string(i), all_zero(piece.reduce(f)));
  }
  for (int j = 0; j <= pres.n; ++j) {
    Polynomial<K> f;
    for (int i = 0; i < pres.k; ++i) {
      Monomial m = Monomial::one(pres.k, pres.m);
      m.mu[i] = 1;
      m.y[j] = static_cast<std::int16_t>(pres.r);
      f.add_term(m, pres.params.at(j, i));
    }
    rep.add("row relation j=" + std::to_string(j), all_zero(piece.reduce(f)));
  }
  return rep;
}

// Derived relation families in the (2, 4) piece of the square-root cover
// (r = 2, where the mu-index range 0..k-1 equals the y-index range 0..n):
//   (D1) column relation times mu_p y_q^2, all (i, p, q);
//   (D2) row relation times mu_p y_q^2, all (j, p, q);
//   (D3) denominators cleared:
//        (a_{0i}a_{qp} - a_{0p}a_{qi}) mu_p mu_i y_q^4
//          - sum_{j >= 1, j != q} (a_{0p}a_{ji} - a_{0i}a_{jp}) mu_p mu_i y_j^2 y_q^2,
//        all p != i in 0..n, q in 1..n;
//   (D4) denominators cleared:
//        (a_{j0}a_{qp} - a_{q0}a_{jp}) mu_p^2 y_j^2 y_q^2
//          - sum_{i >= 1, i != p} (a_{q0}a_{ji} - a_{j0}a_{qi}) mu_i mu_p y_j^2 y_q^2,
//        all p in 1..n, j != q in 0..n.
template <class K>
RelationReport verify_derived_relations(const JacobianPresentation<K>& pres) {
  if (pres.r != 2)
    throw UnsupportedError("derived relation families are specific to the square-root cover");
  GradedPiece<K> piece = graded_piece(pres, 2, 4, 0);
  RelationReport rep;
  auto all_zero = [](const std::vector<K>& v) {
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  };
  auto mono22 = [&](int i, int p, int j, int q) {
    Monomial m = Monomial::one(pres.k, pres.m);
    m.mu[i] = static_cast<std::int16_t>(m.mu[i] + 1);
    m.mu[p] = static_cast<std::int16_t>(m.mu[p] + 1);
    m.y[j] = static_cast<std::int16_t>(m.y[j] + 2);
    m.y[q] = static_cast<std::int16_t>(m.y[q] + 2);
    return m;
  };

  for (int i = 0; i < pres.k; ++i)
    for (int p = 0; p < pres.k; ++p)
      for (int q = 0; q <= pres.n; ++q) {
        Polynomial<K> f;
        for (int j = 0; j <= pres.n; ++j) f.add_term(mono22(i, p, j, q), pres.params.at(j, i));
        rep.add("column relation i=" + std::to_string(i) + " times mu_" + std::to_string(p) +
                    "*y_" + std::to_string(q) + "^2",
                all_zero(piece.reduce(f)));
      }
  for (int j = 0; j <= pres.n; ++j)
    for (int p = 0; p < pres.k; ++p)
      for (int q = 0; q <= pres.n; ++q) {
        Polynomial<K> f;
        for (int i = 0; i < pres.k; ++i) f.add_term(mono22(i, p, j, q), pres.params.at(j, i));
        rep.add("row relation j=" + std::to_string(j) + " times mu_" + std::to_string(p) + "*y_" +
                    std::to_string(q) + "^2",
                all_zero(piece.reduce(f)));
      }

  for (int p = 0; p < pres.k; ++p)
    for (int i = 0; i < pres.k; ++i) {
      if (i == p) continue;
      for (int q = 1; q <= pres.n; ++q) {
        Polynomial<K> f;
        f.add_term(mono22(p, i, q, q),
                   pres.params.at(0, i) * pres.params.at(q, p) -
                       pres.params.at(0, p) * pres.params.at(q, i));
        for (int j = 1; j <= pres.n; ++j) {
          if (j == q) continue;
          f.add_term(mono22(p, i, j, q),
                     from_int_like(pres.params.at(1, 1), 0) -
                         (pres.params.at(0, p) * pres.params.at(j, i) -
                          pres.params.at(0, i) * pres.params.at(j, p)));
        }
        rep.add("eliminated column pair p=" + std::to_string(p) + " i=" + std::to_string(i) +
                    " q=" + std::to_string(q),
                all_zero(piece.reduce(f)));
      }
    }

  for (int p = 1; p <= pres.n && p < pres.k; ++p)
    for (int j = 0; j <= pres.n; ++j)
      for (int q = 0; q <= pres.n; ++q) {
        if (j == q) continue;
        Polynomial<K> f;
        f.add_term(mono22(p, p, j, q),
                   pres.params.at(j, 0) * pres.params.at(q, p) -
                       pres.params.at(q, 0) * pres.params.at(j, p));
        for (int i = 1; i < pres.k; ++i) {
          if (i == p) continue;
          f.add_term(mono22(i, p, j, q),
                     from_int_like(pres.params.at(1, 1), 0) -
                         (pres.params.at(q, 0) * pres.params.at(j, i) -
                          pres.params.at(j, 0) * pres.params.at(q, i)));
        }
        rep.add("eliminated row pair p=" + std::to_string(p) + " j=" + std::to_string(j) +
                    " q=" + std::to_string(q),
                all_zero(piece.reduce(f)));
      }
  return rep;
}

// ---------------------------------------------------------------------------
// The quadric system cutting out the tangent-cone locus.
// ---------------------------------------------------------------------------

// For the preferred bases b_{ij} = mu_i y_j^r of the (1, r) piece and
// b_{ipjq} = mu_i mu_p y_j^r y_q^r of the (2, 2r) piece, the square of a
// generic element sum lambda_{ij} b_{ij} has coordinates that are quadrics in
// lambda.  mats[t] is the symmetric matrix of coordinate t: the quadric is
// lambda^T mats[t] lambda.
template <class K>
struct QuadricSystem {
  int n = 0, k = 0, r = 0;
  int nvars = 0;    // (k-1) * n lambda variables
  int nquadrics = 0;  // C(k-1,2) * C(n,2) coordinates
  std::vector<std::array<int, 4>> quadric_keys;  // (i, p, j, q) per coordinate
  std::vector<std::vector<std::vector<K>>> mats;

  int lambda_index(int i, int j) const {
    if (i < 1 || i > k - 1 || j < 1 || j > n)
      throw PreconditionError("lambda index out of range");
    return (i - 1) * n + (j - 1);
  }
  int quadric_index(int i, int p, int j, int q) const {
    auto it = quadric_pos_.find(std::array<int, 4>{i, p, j, q});
    if (it == quadric_pos_.end()) throw PreconditionError("quadric index out of range");
    return it->second;
  }

  // The ten coefficients of quadric (i, p, j, q) in the fixed slot order:
  // squares read directly off the diagonal, mixed products twice the
  // off-diagonal entry.
  std::array<K, 10> computed_coefficients(int i, int j, int p, int q) const {
    const int t = quadric_index(i, p, j, q);
    const int uij = lambda_index(i, j), uiq = lambda_index(i, q);
    const int upj = lambda_index(p, j), upq = lambda_index(p, q);
    const auto& M = mats[t];
    const K two = from_int_like(M[0][0], 2);
    std::array<K, 10> c;
    c[kIJ_IJ] = M[uij][uij];
    c[kIQ_IQ] = M[uiq][uiq];
    c[kPJ_PJ] = M[upj][upj];
    c[kPQ_PQ] = M[upq][upq];
    c[kIJ_IQ] = two * M[uij][uiq];
    c[kPJ_PQ] = two * M[upj][upq];
    c[kIJ_PJ] = two * M[uij][upj];
    c[kIQ_PQ] = two * M[uiq][upq];
    c[kIJ_PQ] = two * M[uij][upq];
    c[kIQ_PJ] = two * M[uiq][upj];
    return c;
  }

  // Whether quadric (i, p, j, q)'s matrix is supported entirely on its four
  // corner variables lambda_ij, lambda_iq, lambda_pj, lambda_pq.
  bool support_confined(int i, int j, int p, int q) const {
    const int t = quadric_index(i, p, j, q);
    std::array<int, 4> corners = {lambda_index(i, j), lambda_index(i, q), lambda_index(p, j),
                                  lambda_index(p, q)};
    auto is_corner = [&](int u) {
      return u == corners[0] || u == corners[1] || u == corners[2] || u == corners[3];
    };
    for (int u = 0; u < nvars; ++u)
      for (int v = 0; v < nvars; ++v)
        if (!is_zero(mats[t][u][v]) && (!is_corner(u) || !is_corner(v))) return false;
    return true;
  }

  std::map<std::array<int, 4>, int> quadric_pos_;
};

template <class K>
QuadricSystem<K> build_quadric_system(const JacobianPresentation<K>& pres) {
  GradedPiece<K> first = graded_piece(pres, 1, pres.r, 0, BasisStyle::kPreferredProducts);
  GradedPiece<K> second = graded_piece(pres, 2, 2 * pres.r, 0, BasisStyle::kPreferredProducts);

  QuadricSystem<K> sys;
  sys.n = pres.n;
  sys.k = pres.k;
  sys.r = pres.r;
  sys.nvars = first.dim();
  sys.nquadrics = second.dim();
  for (int i = 1; i <= pres.k - 1; ++i)
    for (int p = i + 1; p <= pres.k - 1; ++p)
      for (int j = 1; j <= pres.n; ++j)
        for (int q = j + 1; q <= pres.n; ++q) {
          sys.quadric_pos_.emplace(std::array<int, 4>{i, p, j, q},
                                   static_cast<int>(sys.quadric_keys.size()));
          sys.quadric_keys.push_back({i, p, j, q});
        }
  if (static_cast<int>(sys.quadric_keys.size()) != sys.nquadrics)
    throw InconsistencyError("second-piece dimension disagrees with the pair count");

  const K zero = from_int_like(pres.params.at(1, 1), 0);
  sys.mats.assign(sys.nquadrics,
                  std::vector<std::vector<K>>(sys.nvars, std::vector<K>(sys.nvars, zero)));
  const K one = one_like(pres.params.at(1, 1));
  for (int u = 0; u < sys.nvars; ++u)
    for (int v = u; v < sys.nvars; ++v) {
      Monomial prod = first.quotient_basis()[u] * first.quotient_basis()[v];
      std::vector<K> coords = second.reduce(Polynomial<K>::monomial(prod, one));
      for (int t = 0; t < sys.nquadrics; ++t) {
        if (is_zero(coords[t])) continue;
        sys.mats[t][u][v] = coords[t];
        sys.mats[t][v][u] = coords[t];
      }
    }
  return sys;
}

// ---------------------------------------------------------------------------
// Computed vs displayed coefficients, and resultants from computed quadrics.
// ---------------------------------------------------------------------------

template <class K>
struct CoefficientComparison {
  int i = 0, j = 0, p = 0, q = 0;
  std::array<K, 10> computed;
  std::array<K, 10> displayed;
  bool support_ok = false;     // quadric lives on its four corner variables
  bool slotwise_match = false;  // computed[s] == displayed[s] for every slot
  bool bijective_match = false;  // some bijection of slots matches all values
};

template <class K>
bool multiset_equal(const std::array<K, 10>& a, const std::array<K, 10>& b) {
  std::array<bool, 10> used{};
  for (int s = 0; s < 10; ++s) {
    bool found = false;
    for (int t = 0; t < 10 && !found; ++t) {
      if (!used[t] && a[s] == b[t]) {
        used[t] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

template <class K>
std::vector<CoefficientComparison<K>> compare_displayed_coefficients(
    const JacobianPresentation<K>& pres, const QuadricSystem<K>& sys) {
  std::vector<CoefficientComparison<K>> out;
  for (const auto& key : sys.quadric_keys) {
    const int i = key[0], p = key[1], j = key[2], q = key[3];
    CoefficientComparison<K> cmp;
    cmp.i = i;
    cmp.j = j;
    cmp.p = p;
    cmp.q = q;
    cmp.computed = sys.computed_coefficients(i, j, p, q);
    cmp.displayed = displayed_coefficients(pres.params, i, j, p, q);
    cmp.support_ok = sys.support_confined(i, j, p, q);
    cmp.slotwise_match = (cmp.computed == cmp.displayed);
    cmp.bijective_match = multiset_equal(cmp.computed, cmp.displayed);
    out.push_back(std::move(cmp));
  }
  return out;
}

// Row- and column-family resultants evaluated from the computed quadrics
// (same pairs as the closed-form evaluation, for cross-checking).
template <class K>
std::vector<ResultantValue<K>> resultants_from_quadrics(const QuadricSystem<K>& sys) {
  std::vector<ResultantValue<K>> out;
  if (sys.k - 1 >= 2) {
    for (int j = 2; j <= sys.n; ++j)
      for (int q = j + 1; q <= sys.n; ++q) {
        auto f1 = row_direction_triple(sys.computed_coefficients(1, 1, 2, q));
        auto f2 = row_direction_triple(sys.computed_coefficients(1, j, 2, q));
        out.push_back({'R', j, q, pair_resultant(f1, f2)});
      }
  }
  if (sys.n >= 2) {
    for (int i = 2; i <= sys.k - 1; ++i)
      for (int p = i + 1; p <= sys.k - 1; ++p) {
        auto f1 = column_direction_triple(sys.computed_coefficients(1, 1, p, 2));
        auto f2 = column_direction_triple(sys.computed_coefficients(i, 1, p, 2));
        out.push_back({'Q', i, p, pair_resultant(f1, f2)});
      }
  }
  return out;
}

}  // namespace jacring
