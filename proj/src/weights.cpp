#include "jacring/weights.hpp"

#include <stdexcept>

#include "jacring/combinatorics.hpp"

namespace jacring {

WeightMultiset wedge_weights(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("wedge weights supported for 1 <= n <= 16");
  WeightMultiset out;
  out.n = n;
  out.total = 0;
  // Choose n of the 2n symbols +L_1..+L_n, -L_1..-L_n (bit i < n: +L_{i+1},
  // bit n+i: -L_{i+1}); enumerate n-subsets of 2n bits.
  const int twon = 2 * n;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    WeightVector w(n, 0);
    for (int i : pick) {
      if (i < n)
        w[i] += 1;
      else
        w[i - n] -= 1;
    }
    ++out.mult[w];
    out.total += 1;
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == twon - n + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

WeightSymmetryReport weight_symmetry_check(const WeightMultiset& ws) {
  WeightSymmetryReport rep;
  BinomialTable C;
  rep.total_matches_binomial = (ws.total == C.at(2 * ws.n, ws.n));

  rep.symmetric = true;
  for (const auto& [w, m] : ws.mult) {
    WeightVector neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    auto it = ws.mult.find(neg);
    if (it == ws.mult.end() || it->second != m) {
      rep.symmetric = false;
      break;
    }
  }

  // Dominant members: weakly decreasing, nonnegative.  (1,...,1) must occur
  // and coordinatewise dominate every other dominant member, making it the
  // unique maximum.
  WeightVector all_ones(ws.n, 1);
  bool dominates_all = true;
  for (const auto& [w, m] : ws.mult) {
    bool dominant = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0 || (i + 1 < w.size() && w[i] < w[i + 1])) {
        dominant = false;
        break;
      }
    }
    if (!dominant) continue;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] > all_ones[i]) dominates_all = false;
  }
  auto it = ws.mult.find(all_ones);
  rep.highest_multiplicity = it == ws.mult.end() ? 0 : it->second;
  rep.highest_is_all_ones = dominates_all && rep.highest_multiplicity == 1;
  return rep;
}

std::vector<ObstructionRow> dimension_obstructions(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad obstruction range");
  BinomialTable C;
  std::vector<ObstructionRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    ObstructionRow row;
    row.n = n;
    row.binom = C.at(2 * n, n);
    row.even = mpz_even_p(row.binom.get_mpz_t()) != 0;
    row.power_of_two =
        mpz_popcount(row.binom.get_mpz_t()) == 1 && sgn(row.binom) > 0;
    row.excluded = row.even && !row.power_of_two;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jacring
