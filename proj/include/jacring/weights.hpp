#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace jacring {

// Weight of the rank-2n symplectic/orthogonal torus written in the L_i
// coordinate basis; entries land in {-1, 0, 1} for middle wedge powers.
using WeightVector = std::vector<int>;

struct WeightMultiset {
  int n = 0;
  std::map<WeightVector, std::uint64_t> mult;
  mpz_class total;  // sum of multiplicities; equals C(2n, n)
};

// Weights of the n-th wedge power of the standard 2n-dimensional module:
// all sums of n distinct elements of {±L_1, ..., ±L_n}.
WeightMultiset wedge_weights(int n);

struct WeightSymmetryReport {
  bool total_matches_binomial = false;   // total == C(2n, n)
  bool symmetric = false;                // mult(w) == mult(-w) for all w
  bool highest_is_all_ones = false;      // unique dominant maximum is (1,...,1)
  std::uint64_t highest_multiplicity = 0;
};

WeightSymmetryReport weight_symmetry_check(const WeightMultiset& ws);

// Parity/power-of-two facts about C(2n, n) that exclude candidate module
// dimensions: even but not a power of two rules the dimension out.
struct ObstructionRow {
  int n = 0;
  mpz_class binom;        // C(2n, n)
  bool even = false;
  bool power_of_two = false;
  bool excluded = false;  // even && !power_of_two
};

std::vector<ObstructionRow> dimension_obstructions(int n_min, int n_max);

}  // namespace jacring
