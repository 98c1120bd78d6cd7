#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace jacring {

// Exact binomial coefficients via a per-instance Pascal triangle; safe for
// concurrent use as long as each thread owns its table.
class BinomialTable {
 public:
  const mpz_class& at(int n, int k);

 private:
  std::vector<std::vector<mpz_class>> rows_;
  mpz_class zero_;
};

// One displayed stage of the alternating-sum identity chain that collapses an
// Euler-characteristic expansion to a squared binomial.
struct EulerStage {
  std::string name;
  mpz_class value;
};

struct EulerIdentityResult {
  int n = 0;
  int p = 0;
  std::vector<EulerStage> stages;  // triple sum ... closed form, in display order
  bool all_equal = false;
};

// Evaluates every displayed summation stage exactly and compares them.
EulerIdentityResult euler_characteristic_identity(int n, int p);

// chi of the k-th wedge of the rank-(2n+1) kernel bundle on P^n (twist d).
mpz_class chi_wedge_twisted(int n, int k, int d);
inline mpz_class chi_wedge(int n, int k) { return chi_wedge_twisted(n, k, 0); }

// Closed-form graded dimensions h_q = C(n,q) C(k-1,q) plus the signature
// split into even and odd q, with internal consistency checks.
struct HodgeClosedForms {
  int n = 0;
  int k = 0;
  std::vector<mpz_class> h;  // q = 0..n
  mpz_class p_sig;           // sum over even q
  mpz_class q_sig;           // sum over odd q
  bool totals_match = false;     // p_sig + q_sig == sum h
  bool palindromic = false;      // h reversed equals h (holds when k - 1 == n)
};

HodgeClosedForms hodge_closed_forms(int n, int k);

}  // namespace jacring
