#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacring/arrangement.hpp"
#include "jacring/combinatorics.hpp"
#include "jacring/errors.hpp"
#include "jacring/linalg.hpp"
#include "jacring/polynomial.hpp"

namespace jacring {

// Jacobian presentation of the invariant ring of a degree-r cyclic cover of
// P^n branched along m = n + k + 1 general hyperplanes: the master polynomial
// F = sum_i mu_i (y_{n+1+i}^r - sum_j a_{ji} y_j^r) and its partial
// derivatives, which generate the defining ideal.
template <class K>
struct JacobianPresentation {
  ParamMatrix<K> params;
  int n = 0, k = 0, r = 0, m = 0;
  Polynomial<K> master;                  // F, bidegree (1, r)
  std::vector<Polynomial<K>> mu_partials;  // dF/dmu_i, bidegree (0, r)
  std::vector<Polynomial<K>> y_partials;   // dF/dy_j, bidegree (1, r-1)
};

template <class K>
JacobianPresentation<K> build_presentation(const ParamMatrix<K>& params) {
  validate_params(params);
  JacobianPresentation<K> pres;
  pres.params = params;
  pres.n = params.n;
  pres.k = params.k;
  pres.r = params.r;
  pres.m = params.y_count();

  const K one = one_like(params.at(1, 1));
  for (int i = 0; i < pres.k; ++i) {
    Monomial lead = Monomial::one(pres.k, pres.m);
    lead.mu[i] = 1;
    lead.y[pres.n + 1 + i] = static_cast<std::int16_t>(pres.r);
    pres.master.add_term(lead, one);
    for (int j = 0; j <= pres.n; ++j) {
      Monomial t = Monomial::one(pres.k, pres.m);
      t.mu[i] = 1;
      t.y[j] = static_cast<std::int16_t>(pres.r);
      pres.master.add_term(t, from_int_like(one, 0) - params.at(j, i));
    }
  }
  for (int i = 0; i < pres.k; ++i) pres.mu_partials.push_back(pres.master.partial_mu(i));
  for (int j = 0; j < pres.m; ++j) pres.y_partials.push_back(pres.master.partial_y(j));
  return pres;
}

// y-exponent vectors with prescribed residues mod r and prescribed total.
template <class Visit>
void enumerate_y_exponents_with_residues(const std::vector<int>& rho, int total, int r, Visit&& visit) {
  const int m = static_cast<int>(rho.size());
  int base = 0;
  for (int v : rho) base += v;
  if (total < base || (total - base) % r != 0) return;
  const int t_total = (total - base) / r;
  enumerate_exponents(t_total, m, [&](const std::vector<std::int16_t>& t) {
    std::vector<std::int16_t> beta(m);
    for (int j = 0; j < m; ++j) beta[j] = static_cast<std::int16_t>(rho[j] + r * t[j]);
    visit(beta);
  });
}

// Basis flavor of a graded piece: the canonical reduction-order basis
// (non-pivot monomials under graded-lex row reduction), or the preferred
// basis of distinct-index products, realized by ordering those product
// monomials last so that — exactly when they form a basis — they are the
// non-pivot columns.
enum class BasisStyle { kReductionOrder, kPreferredProducts };

// The degree-t preferred products: mu_{i_1}..mu_{i_t} y_{j_1}^r..y_{j_t}^r
// over strictly increasing index tuples 1 <= i_1 < ... <= k-1, 1 <= j_1 < ... <= n,
// enumerated in lexicographic tuple order.
template <class K>
std::vector<Monomial> preferred_products(const JacobianPresentation<K>& pres, int t) {
  if (t < 1 || t > 2)
    throw UnsupportedError("preferred product basis implemented for first and second degrees only");
  std::vector<Monomial> out;
  if (t == 1) {
    for (int i = 1; i <= pres.k - 1; ++i)
      for (int j = 1; j <= pres.n; ++j) {
        Monomial m = Monomial::one(pres.k, pres.m);
        m.mu[i] = 1;
        m.y[j] = static_cast<std::int16_t>(pres.r);
        out.push_back(std::move(m));
      }
  } else {
    for (int i = 1; i <= pres.k - 1; ++i)
      for (int p = i + 1; p <= pres.k - 1; ++p)
        for (int j = 1; j <= pres.n; ++j)
          for (int q = j + 1; q <= pres.n; ++q) {
            Monomial m = Monomial::one(pres.k, pres.m);
            m.mu[i] = 1;
            m.mu[p] = 1;
            m.y[j] = static_cast<std::int16_t>(pres.r);
            m.y[q] = static_cast<std::int16_t>(pres.r);
            out.push_back(std::move(m));
          }
  }
  return out;
}

// One bigraded, character-selected piece of the quotient ring, presented as
// the RREF of the ideal's span inside the ambient monomial space.
template <class K>
class GradedPiece {
 public:
  int p = 0, q = 0;
  int eigenclass = 0;  // 0..r-1; -1 selects the full semi-invariant span
  int r = 2;

  const std::vector<Monomial>& ambient() const { return ambient_; }
  const std::vector<Monomial>& quotient_basis() const { return quotient_; }
  int dim() const { return static_cast<int>(quotient_.size()); }
  int ambient_dim() const { return static_cast<int>(ambient_.size()); }
  int rank() const { return rref_.rank(); }
  const SparseRref<K>& rref() const { return rref_; }

  int column_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  // Coordinates of f's class in the quotient basis.  f must be
  // bihomogeneous of bidegree (p, q) with the piece's character.
  std::vector<K> reduce(const Polynomial<K>& f) const {
    std::vector<K> coords(quotient_.size(), zero_);
    if (f.is_zero()) return coords;
    auto deg = f.bidegree();
    if (!deg || deg->first != p || deg->second != q)
      throw PreconditionError("reduction requires a bihomogeneous element of bidegree (" +
                              std::to_string(p) + "," + std::to_string(q) + ")");
    SparseVec<K> vec;
    vec.reserve(f.term_count());
    for (const auto& [mono, coeff] : f.terms()) {
      auto cls = uniform_eigenclass(mono, r);
      if (!cls || (eigenclass >= 0 && *cls != eigenclass))
        throw PreconditionError("reduction requires the piece's character: offending monomial " +
                                to_string(mono));
      auto it = index_.find(mono);
      if (it == index_.end())
        throw InconsistencyError("monomial of correct degree and character missing from ambient space");
      vec.emplace_back(it->second, coeff);
    }
    std::sort(vec.begin(), vec.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<K> red = rref_.reduce(vec);
    for (const auto& [col, val] : red) coords[quotient_pos_.at(col)] = val;
    return coords;
  }

  template <class K2>
  friend GradedPiece<K2> graded_piece(const JacobianPresentation<K2>&, int, int, int, BasisStyle);

 private:
  std::vector<Monomial> ambient_;
  std::vector<Monomial> quotient_;
  std::map<Monomial, int, GrlexGreater> index_;
  std::map<int, int> quotient_pos_;  // ambient column -> quotient position
  SparseRref<K> rref_;
  K zero_;
};

template <class K>
GradedPiece<K> graded_piece(const JacobianPresentation<K>& pres, int p, int q, int eigenclass,
                            BasisStyle style = BasisStyle::kReductionOrder) {
  if (p < 0 || q < 0) throw PreconditionError("bidegree must be nonnegative");
  if (eigenclass < -1 || eigenclass >= pres.r)
    throw PreconditionError("eigenclass must lie in 0..r-1 (or -1 for the full span)");

  GradedPiece<K> piece;
  piece.p = p;
  piece.q = q;
  piece.eigenclass = eigenclass;
  piece.r = pres.r;
  piece.zero_ = from_int_like(pres.params.at(1, 1), 0);

  std::vector<int> classes;
  if (eigenclass >= 0)
    classes.push_back(eigenclass);
  else
    for (int e = 0; e < pres.r; ++e) classes.push_back(e);

  // Ambient monomials: all (p, q)-bidegree monomials whose y-exponents lie in
  // one residue class from `classes`.
  std::vector<Monomial> ambient;
  for (int e : classes) {
    std::vector<int> rho(pres.m, e);
    enumerate_exponents(p, pres.k, [&](const std::vector<std::int16_t>& alpha) {
      enumerate_y_exponents_with_residues(rho, q, pres.r, [&](const std::vector<std::int16_t>& beta) {
        ambient.emplace_back(alpha, beta);
      });
    });
  }
  std::sort(ambient.begin(), ambient.end(), GrlexGreater{});

  std::vector<Monomial> preferred;
  if (style == BasisStyle::kPreferredProducts) {
    if (eigenclass != 0)
      throw UnsupportedError("preferred product bases live in the invariant eigenclass");
    if (q != p * pres.r)
      throw UnsupportedError("preferred product bases live in the bidegrees (t, t*r)");
    preferred = preferred_products(pres, p);
    // Stable partition: non-preferred first (graded-lex order kept), then the
    // preferred products in their canonical tuple order.
    std::map<Monomial, int, GrlexGreater> pref_index;
    for (int i = 0; i < static_cast<int>(preferred.size()); ++i) pref_index.emplace(preferred[i], i);
    std::vector<Monomial> head;
    head.reserve(ambient.size());
    for (auto& m : ambient)
      if (!pref_index.count(m)) head.push_back(std::move(m));
    if (head.size() + preferred.size() != ambient.size())
      throw InconsistencyError("preferred products missing from the ambient monomial space");
    ambient = std::move(head);
    for (const auto& m : preferred) ambient.push_back(m);
  }

  piece.ambient_ = std::move(ambient);
  for (int c = 0; c < static_cast<int>(piece.ambient_.size()); ++c)
    piece.index_.emplace(piece.ambient_[c], c);

  // Ideal rows: generator times complementary monomial, restricted to the
  // characters that land in the selected classes.  Each generator is
  // semi-invariant, so whole products land in a single class.
  std::vector<SparseVec<K>> rows;
  auto add_rows_for = [&](const Polynomial<K>& gen) {
    if (gen.is_zero()) return;
    auto gdeg = gen.bidegree();
    if (!gdeg) throw InconsistencyError("ideal generator is not bihomogeneous");
    const int cp = p - gdeg->first, cq = q - gdeg->second;
    if (cp < 0 || cq < 0) return;
    const std::vector<int> chi = y_character(gen.terms().begin()->first, pres.r);
    for (int e : classes) {
      std::vector<int> rho(pres.m);
      for (int j = 0; j < pres.m; ++j) rho[j] = ((e - chi[j]) % pres.r + pres.r) % pres.r;
      enumerate_exponents(cp, pres.k, [&](const std::vector<std::int16_t>& alpha) {
        enumerate_y_exponents_with_residues(rho, cq, pres.r, [&](const std::vector<std::int16_t>& beta) {
          Monomial shift(alpha, beta);
          SparseVec<K> row;
          row.reserve(gen.term_count());
          for (const auto& [mono, coeff] : gen.terms()) {
            auto it = piece.index_.find(mono * shift);
            if (it == piece.index_.end())
              throw InconsistencyError("ideal row leaves the ambient monomial space");
            row.emplace_back(it->second, coeff);
          }
          std::sort(row.begin(), row.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          rows.push_back(std::move(row));
        });
      });
    }
  };
  for (const auto& g : pres.mu_partials) add_rows_for(g);
  for (const auto& g : pres.y_partials) add_rows_for(g);

  piece.rref_.build(std::move(rows), static_cast<int>(piece.ambient_.size()));

  for (int col : piece.rref_.nonpivots()) {
    piece.quotient_pos_.emplace(col, static_cast<int>(piece.quotient_.size()));
    piece.quotient_.push_back(piece.ambient_[col]);
  }

  if (style == BasisStyle::kPreferredProducts) {
    const std::size_t head = piece.ambient_.size() - preferred.size();
    bool ok = piece.quotient_.size() == preferred.size();
    if (ok)
      for (int col : piece.rref_.nonpivots())
        if (col < static_cast<int>(head)) ok = false;
    if (!ok)
      throw GenericityError("preferred products do not form a basis of the (" + std::to_string(p) +
                            "," + std::to_string(q) + ") piece at these parameters");
  }
  return piece;
}

// Graded dimensions of the invariant eigenclass against the closed form
// C(n, q) * C(k-1, q).
struct HodgeRow {
  int q = 0;
  long long dim = 0;
  long long closed = 0;
  bool agree = false;
};

template <class K>
std::vector<HodgeRow> hodge_numbers(const JacobianPresentation<K>& pres, int q_max = -1) {
  if (q_max < 0 || q_max > pres.n) q_max = pres.n;
  BinomialTable C;
  std::vector<HodgeRow> rows;
  for (int q = 0; q <= q_max; ++q) {
    GradedPiece<K> piece = graded_piece(pres, q, q * pres.r, 0);
    HodgeRow row;
    row.q = q;
    row.dim = piece.dim();
    row.closed = mpz_class(C.at(pres.n, q) * C.at(pres.k - 1, q)).get_si();
    row.agree = (row.dim == row.closed);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jacring
