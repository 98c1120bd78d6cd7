#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacring/fp.hpp"
#include "jacring/rational.hpp"

namespace jacring {

// Sparse row: (column, coefficient) pairs sorted by column, no zero entries.
template <class K>
using SparseVec = std::vector<std::pair<std::int32_t, K>>;

// Row normalization keeps elimination fraction-free and deterministic.
// Over F_p rows are made monic.
inline void normalize_row(SparseVec<Fp>& row) {
  if (row.empty()) return;
  Fp lead = row.front().second;
  if (lead.v == 1) return;
  Fp inv = inverse(lead);
  for (auto& [c, v] : row) v = v * inv;
}

// Over Q rows are scaled to integer entries with content 1 and positive lead.
inline void normalize_row(SparseVec<Rat>& row) {
  if (row.empty()) return;
  mpz_class l(1);
  for (auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> nums;
  nums.reserve(row.size());
  mpz_class g(0);
  for (auto& [c, v] : row) {
    mpz_class t = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    nums.push_back(std::move(t));
  }
  if (sgn(nums.front()) < 0) g = -g;
  for (std::size_t i = 0; i < row.size(); ++i) row[i].second = Rat(nums[i] / g);
}

// lp*r - lr*p as a sorted merge; drops cancelled entries.
template <class K>
SparseVec<K> row_combine(const SparseVec<K>& r, const SparseVec<K>& p, const K& lr, const K& lp) {
  SparseVec<K> out;
  out.reserve(r.size() + p.size());
  auto ir = r.begin();
  auto ip = p.begin();
  while (ir != r.end() || ip != p.end()) {
    if (ip == p.end() || (ir != r.end() && ir->first < ip->first)) {
      out.emplace_back(ir->first, lp * ir->second);
      ++ir;
    } else if (ir == r.end() || ip->first < ir->first) {
      out.emplace_back(ip->first, from_int_like(lr, 0) - lr * ip->second);
      ++ip;
    } else {
      K v = lp * ir->second - lr * ip->second;
      if (!is_zero(v)) out.emplace_back(ir->first, std::move(v));
      ++ir;
      ++ip;
    }
  }
  return out;
}

template <class K>
const K* row_entry(const SparseVec<K>& row, std::int32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::int32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Reduced row echelon form of a sparse exact matrix.  Pivot selection is a
// fill-avoiding heuristic (singleton sweep, then sparsest row per leading
// column); the resulting RREF, pivot set and reduced coordinates are the
// canonical ones for the given column order, independent of that heuristic.
template <class K>
class SparseRref {
 public:
  void build(std::vector<SparseVec<K>> rows, int ncols) {
    ncols_ = ncols;
    pivot_rows_.clear();
    pivots_.clear();
    nonpivots_.clear();

    for (auto& r : rows) normalize_row(r);

    // Phase 1: repeatedly pivot on single-entry rows; removing their column
    // from every other row is an exact row operation with zero fill-in.  A
    // normalized singleton row is exactly {col: 1}.
    std::vector<char> is_pivot_col(ncols, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& r : rows) {
        if (r.size() != 1) continue;
        int col = r.front().first;
        if (!is_pivot_col[col]) {
          is_pivot_col[col] = 1;
          pivot_rows_.emplace(col, std::move(r));
          changed = true;
        }
        r.clear();
      }
      if (!changed) continue;
      for (auto& r : rows) {
        if (r.empty()) continue;
        auto keep = std::remove_if(r.begin(), r.end(),
                                   [&](const auto& e) { return is_pivot_col[e.first] != 0; });
        if (keep != r.end()) {
          r.erase(keep, r.end());
          normalize_row(r);
        }
      }
    }

    // Phase 2: leading-column buckets, sparsest row as pivot.
    std::map<std::int32_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].empty()) buckets[rows[i].front().first].push_back(i);

    while (!buckets.empty()) {
      auto it = buckets.begin();
      std::int32_t col = it->first;
      std::vector<std::size_t> members = std::move(it->second);
      buckets.erase(it);
      std::size_t best = members.front();
      for (std::size_t idx : members)
        if (rows[idx].size() < rows[best].size() || (rows[idx].size() == rows[best].size() && idx < best))
          best = idx;
      SparseVec<K> pivot = std::move(rows[best]);  // rows may reallocate below
      for (std::size_t idx : members) {
        if (idx == best) continue;
        SparseVec<K> combined =
            row_combine(rows[idx], pivot, rows[idx].front().second, pivot.front().second);
        rows[idx].clear();
        if (combined.empty()) continue;
        normalize_row(combined);
        std::int32_t lead = combined.front().first;
        rows.push_back(std::move(combined));
        buckets[lead].push_back(rows.size() - 1);
      }
      pivot_rows_.emplace(col, std::move(pivot));
    }

    // Phase 3: scale pivots to one and back-substitute, descending, so every
    // pivot row ends supported on its pivot column plus non-pivot columns.
    for (auto& [col, row] : pivot_rows_) {
      K lead = row.front().second;
      if (!(lead == one_like(lead))) {
        for (auto& [c, v] : row) v = v / lead;
      }
    }
    for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
      const std::int32_t col = it->first;
      const SparseVec<K> resolved = it->second;
      for (auto jt = pivot_rows_.begin(); jt->first != col; ++jt) {
        const K* coeff = row_entry(jt->second, col);
        if (!coeff) continue;
        K c = *coeff;
        jt->second = row_combine(jt->second, resolved, c, one_like(c));
      }
    }

    pivots_.reserve(pivot_rows_.size());
    for (const auto& [c, r] : pivot_rows_) pivots_.push_back(c);
    std::vector<char> piv(ncols, 0);
    for (int c : pivots_) piv[c] = 1;
    for (int c = 0; c < ncols; ++c)
      if (!piv[c]) nonpivots_.push_back(c);
  }

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<int>& nonpivots() const { return nonpivots_; }

  const SparseVec<K>* row_for_pivot(int col) const {
    auto it = pivot_rows_.find(col);
    return it == pivot_rows_.end() ? nullptr : &it->second;
  }

  // Canonical representative of v modulo the row space: eliminates every
  // pivot-column entry; the result is supported on non-pivot columns only.
  SparseVec<K> reduce(const SparseVec<K>& v) const {
    std::map<std::int32_t, K> acc;
    for (const auto& [c, x] : v) {
      auto [it, inserted] = acc.emplace(c, x);
      if (!inserted) it->second += x;
    }
    for (auto it = acc.begin(); it != acc.end();) {
      auto pr = pivot_rows_.find(it->first);
      if (pr == pivot_rows_.end()) {
        ++it;
        continue;
      }
      K coeff = it->second;
      it = acc.erase(it);
      if (is_zero(coeff)) continue;
      for (const auto& [c, x] : pr->second) {
        if (c == pr->first) continue;
        auto [jt, inserted] = acc.emplace(c, from_int_like(coeff, 0) - coeff * x);
        if (!inserted) {
          jt->second -= coeff * x;
          if (is_zero(jt->second)) acc.erase(jt);
        }
      }
      it = acc.upper_bound(pr->first);
    }
    SparseVec<K> out;
    out.reserve(acc.size());
    for (auto& [c, x] : acc)
      if (!is_zero(x)) out.emplace_back(c, std::move(x));
    return out;
  }

 private:
  int ncols_ = 0;
  std::map<std::int32_t, SparseVec<K>> pivot_rows_;
  std::vector<int> pivots_;
  std::vector<int> nonpivots_;
};

// Exact determinant of a small dense matrix by Gaussian elimination.
template <class K>
K det_dense(std::vector<std::vector<K>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  K det = one_like(a[0][0]);
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return from_int_like(det, 0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      negate = !negate;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a[r][col])) continue;
      K f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return negate ? from_int_like(det, 0) - det : det;
}

// Exact inverse of a small dense matrix; nullopt when singular.
template <class K>
std::optional<std::vector<std::vector<K>>> invert_dense(std::vector<std::vector<K>> a) {
  const std::size_t n = a.size();
  if (n == 0) return std::vector<std::vector<K>>{};
  const K zero = from_int_like(a[0][0], 0);
  const K one = one_like(a[0][0]);
  std::vector<std::vector<K>> inv(n, std::vector<K>(n, zero));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = one;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    K d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      K f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace jacring
