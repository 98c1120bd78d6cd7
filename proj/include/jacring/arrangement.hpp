#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jacring/errors.hpp"
#include "jacring/linalg.hpp"

namespace jacring {

// Parameter matrix for a cyclic cover of P^n of degree r branched along
// m = n + k + 1 hyperplanes: an n x (k-1) block of scalars, with the border
// row 0 / column 0 implicitly all ones.  at(j, i) takes border-aware indices
// j in 0..n (hyperplane rows) and i in 0..k-1 (moduli columns).
template <class K>
struct ParamMatrix {
  int n = 0, k = 0, r = 0;
  std::vector<std::vector<K>> a;  // a[j-1][i-1] for 1 <= j <= n, 1 <= i <= k-1

  int y_count() const { return n + k + 1; }

  K at(int j, int i) const {
    if (j < 0 || j > n || i < 0 || i >= k)
      throw PreconditionError("parameter index out of range: a(" + std::to_string(j) + "," +
                              std::to_string(i) + ")");
    if (j == 0 || i == 0) {
      if (n >= 1 && k >= 2) return one_like(a[0][0]);
      return K{};  // unreachable for validated shapes with k >= 2, n >= 1
    }
    return a[j - 1][i - 1];
  }
};

template <class K>
void validate_params(const ParamMatrix<K>& p) {
  if (p.n < 1 || p.k < 2 || p.r < 2)
    throw StructuralError("parameter shape needs n >= 1, k >= 2, r >= 2");
  if (p.n != p.k * p.r - p.k - 1)
    throw StructuralError("parameter shape violates n = k(r-1) - 1: n=" + std::to_string(p.n) +
                          " k=" + std::to_string(p.k) + " r=" + std::to_string(p.r));
  if (static_cast<int>(p.a.size()) != p.n)
    throw StructuralError("parameter block must have n rows");
  for (const auto& row : p.a)
    if (static_cast<int>(row.size()) != p.k - 1)
      throw StructuralError("parameter block must have k-1 columns");
}

// Hyperplane arrangement in P^n as an (n+1) x m matrix whose columns are the
// hyperplane coefficient vectors; columns must be nonzero.
template <class K>
struct Arrangement {
  int n = 0;  // ambient projective dimension
  std::vector<std::vector<K>> cols;

  int m() const { return static_cast<int>(cols.size()); }
};

template <class K>
void validate_arrangement(const Arrangement<K>& arr) {
  if (arr.n < 1) throw StructuralError("arrangement needs ambient dimension >= 1");
  for (const auto& col : arr.cols) {
    if (static_cast<int>(col.size()) != arr.n + 1)
      throw StructuralError("arrangement column has wrong height");
    bool nonzero = false;
    for (const auto& v : col) nonzero = nonzero || !is_zero(v);
    if (!nonzero) throw StructuralError("arrangement contains a zero column");
  }
}

// Every (n+1) x (n+1) column minor must be nonzero.
template <class K>
bool is_general_position(const Arrangement<K>& arr) {
  validate_arrangement(arr);
  const int h = arr.n + 1;
  if (arr.m() < h) throw PreconditionError("too few hyperplanes for a general-position test");
  std::vector<int> pick(h);
  for (int i = 0; i < h; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<K>> minor(h, std::vector<K>(h, K{}));
    for (int c = 0; c < h; ++c)
      for (int rr = 0; rr < h; ++rr) minor[rr][c] = arr.cols[pick[c]][rr];
    if (is_zero(det_dense(minor))) return false;
    int pos = h - 1;
    while (pos >= 0 && pick[pos] == arr.m() - h + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < h; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

// The arrangement in normal form determined by a parameter block: identity
// columns, the all-ones column, then one column (1, a_{1i}, ..., a_{ni})^T
// per moduli direction.
template <class K>
Arrangement<K> canonical_arrangement(const ParamMatrix<K>& p) {
  validate_params(p);
  Arrangement<K> arr;
  arr.n = p.n;
  const K one = one_like(p.a[0][0]);
  const K zero = from_int_like(one, 0);
  for (int c = 0; c <= p.n; ++c) {
    std::vector<K> col(p.n + 1, zero);
    col[c] = one;
    arr.cols.push_back(std::move(col));
  }
  arr.cols.emplace_back(p.n + 1, one);
  for (int i = 1; i <= p.k - 1; ++i) {
    std::vector<K> col;
    col.reserve(p.n + 1);
    for (int j = 0; j <= p.n; ++j) col.push_back(p.at(j, i));
    arr.cols.push_back(std::move(col));
  }
  return arr;
}

// Inverse of canonical_arrangement for double covers (m = 2n + 2): applies
// the unique projective change of coordinates and column rescaling that fixes
// the first n+2 hyperplanes to normal form, and reads the parameters off the
// remaining columns.  Requires general position.
template <class K>
ParamMatrix<K> normalize_arrangement(const Arrangement<K>& arr, int r) {
  validate_arrangement(arr);
  if (r != 2)
    throw UnsupportedError("arrangement normalization is only defined for cover degree r = 2");
  const int n = arr.n;
  if (arr.m() != 2 * n + 2)
    throw StructuralError("double-cover normalization needs m = 2n + 2 hyperplanes");
  if (!is_general_position(arr))
    throw PreconditionError("arrangement normalization requires general position");

  const int h = n + 1;
  std::vector<std::vector<K>> b(h, std::vector<K>(h, K{}));
  for (int c = 0; c < h; ++c)
    for (int rr = 0; rr < h; ++rr) b[rr][c] = arr.cols[c][rr];
  auto binv = invert_dense(b);
  if (!binv) throw PreconditionError("leading columns are degenerate");  // unreachable: general position

  auto apply = [&](const std::vector<K>& col) {
    std::vector<K> out(h, from_int_like(col[0], 0));
    for (int rr = 0; rr < h; ++rr)
      for (int c = 0; c < h; ++c) out[rr] += (*binv)[rr][c] * col[c];
    return out;
  };

  std::vector<K> ones_col = apply(arr.cols[h]);  // row scalings sending it to (1,...,1)
  ParamMatrix<K> p;
  p.n = n;
  p.k = n + 1;
  p.r = 2;
  p.a.assign(n, std::vector<K>(n, K{}));
  for (int i = 1; i <= n; ++i) {
    std::vector<K> w = apply(arr.cols[h + i]);
    for (int rr = 0; rr < h; ++rr) w[rr] /= ones_col[rr];
    // column scaling: top entry becomes the implicit border 1
    for (int j = 1; j <= n; ++j) p.a[j - 1][i - 1] = w[j] / w[0];
  }
  return p;
}

// Deterministic bounded uniform draw (avoids distribution-object variance
// across standard libraries).
inline std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("uniform draw from empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

struct ScreenItem {
  std::string condition;
  bool pass = false;
};

struct ScreenReport {
  std::vector<ScreenItem> items;
  bool ok = true;
  void add(std::string condition, bool pass) {
    ok = ok && pass;
    items.push_back({std::move(condition), pass});
  }
};

}  // namespace jacring
