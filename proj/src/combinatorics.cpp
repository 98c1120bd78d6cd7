#include "jacring/combinatorics.hpp"

#include <stdexcept>

namespace jacring {

const mpz_class& BinomialTable::at(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial with negative upper index");
  if (k < 0 || k > n) return zero_;
  while (static_cast<int>(rows_.size()) <= n) {
    int row = static_cast<int>(rows_.size());
    std::vector<mpz_class> next(row + 1, 1);
    for (int j = 1; j < row; ++j) next[j] = rows_[row - 1][j - 1] + rows_[row - 1][j];
    rows_.push_back(std::move(next));
  }
  return rows_[n][k];
}

mpz_class chi_wedge_twisted(int n, int k, int d) {
  BinomialTable C;
  mpz_class total = 0;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= i; ++j) {
      mpz_class term = C.at(2 * n + 2, j) * C.at(n + 1, k - i) * C.at(n + (k - i) + d, n);
      if ((i + j) % 2 == 0)
        total += term;
      else
        total -= term;
    }
  return total;
}

EulerIdentityResult euler_characteristic_identity(int n, int p) {
  if (n < 0 || p < 0 || p > n)
    throw std::invalid_argument("identity stages need 0 <= p <= n");
  BinomialTable C;
  EulerIdentityResult out;
  out.n = n;
  out.p = p;

  mpz_class triple = 0;
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p - i; ++j)
      for (int k = 0; k <= p - i - j; ++k) {
        mpz_class term =
            C.at(2 * n + 1 + i, i) * C.at(n + 1, j) * C.at(n + i + j, i + j) * C.at(2 * n + 2, p - i - j - k);
        if ((i + k) % 2 == 0)
          triple += term;
        else
          triple -= term;
      }
  out.stages.push_back({"triple_sum", triple});

  mpz_class dbl = 0;
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= p - i; ++j) {
      mpz_class term =
          C.at(2 * n + 1 + i, i) * C.at(n + 1, j) * C.at(n + i + j, i + j) * C.at(2 * n + 1, p - i - j);
      if (i % 2 == 0)
        dbl += term;
      else
        dbl -= term;
    }
  out.stages.push_back({"double_sum", dbl});

  mpz_class grouped = 0;
  for (int l = 0; l <= p; ++l)
    for (int i = 0; i <= l; ++i) {
      mpz_class term = C.at(2 * n + 1 + i, i) * C.at(n + 1, l - i) * C.at(n + l, n) * C.at(2 * n + 1, p - l);
      if (i % 2 == 0)
        grouped += term;
      else
        grouped -= term;
    }
  out.stages.push_back({"grouped_double_sum", grouped});

  mpz_class single = 0;
  for (int l = 0; l <= p; ++l) {
    mpz_class term = C.at(n + l, l) * C.at(n + l, l) * C.at(2 * n + 1, p - l);
    if (l % 2 == 0)
      single += term;
    else
      single -= term;
  }
  out.stages.push_back({"single_sum", single});

  mpz_class closed = C.at(n, p) * C.at(n, p);
  if (p % 2 != 0) closed = -closed;
  out.stages.push_back({"closed_form", closed});

  out.all_equal = true;
  for (const auto& s : out.stages)
    if (s.value != out.stages.front().value) out.all_equal = false;
  return out;
}

HodgeClosedForms hodge_closed_forms(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("closed forms need n >= 0, k >= 1");
  BinomialTable C;
  HodgeClosedForms out;
  out.n = n;
  out.k = k;
  out.h.resize(n + 1);
  mpz_class total = 0;
  out.p_sig = 0;
  out.q_sig = 0;
  for (int q = 0; q <= n; ++q) {
    out.h[q] = C.at(n, q) * C.at(k - 1, q);
    total += out.h[q];
    if (q % 2 == 0)
      out.p_sig += out.h[q];
    else
      out.q_sig += out.h[q];
  }
  out.totals_match = (out.p_sig + out.q_sig == total);
  out.palindromic = true;
  for (int q = 0; q <= n; ++q)
    if (out.h[q] != out.h[n - q]) out.palindromic = false;
  return out;
}

}  // namespace jacring
