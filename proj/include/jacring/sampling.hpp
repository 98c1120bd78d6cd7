#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "jacring/arrangement.hpp"
#include "jacring/closed_forms.hpp"
#include "jacring/errors.hpp"

namespace jacring {

// Scalar draw used for generic parameters: small positive integers over Q,
// uniform nonzero non-one residues over F_p.
struct RatSampler {
  Rat operator()(std::mt19937_64& rng) const {
    return Rat(static_cast<long>(2 + uniform_u64(rng, 996)));  // [2, 997]
  }
};

struct FpSampler {
  std::uint64_t p;
  Fp operator()(std::mt19937_64& rng) const {
    if (p < 4) throw PreconditionError("field too small to sample generic entries");
    return Fp{2 + uniform_u64(rng, p - 2), p};  // [2, p-1]
  }
};

// The genericity screen: every displayed-coefficient denominator is nonzero
// (entries avoid {0,1} and are distinct along rows and columns), every
// closed-form resultant is nonzero, and the induced arrangement is in
// general position.
template <class K>
ScreenReport screen_params(const ParamMatrix<K>& P) {
  validate_params(P);
  ScreenReport rep;
  const K one = one_like(P.at(1, 1));
  const K zero = from_int_like(one, 0);

  bool entries_ok = true;
  for (int j = 1; j <= P.n; ++j)
    for (int i = 1; i <= P.k - 1; ++i)
      if (P.at(j, i) == zero || P.at(j, i) == one) entries_ok = false;
  rep.add("entries avoid 0 and 1", entries_ok);

  bool rows_ok = true;
  for (int j = 1; j <= P.n; ++j)
    for (int i = 1; i <= P.k - 1; ++i)
      for (int p = i + 1; p <= P.k - 1; ++p)
        if (P.at(j, i) == P.at(j, p)) rows_ok = false;
  rep.add("entries distinct within each row", rows_ok);

  bool cols_ok = true;
  for (int i = 1; i <= P.k - 1; ++i)
    for (int j = 1; j <= P.n; ++j)
      for (int q = j + 1; q <= P.n; ++q)
        if (P.at(j, i) == P.at(q, i)) cols_ok = false;
  rep.add("entries distinct within each column", cols_ok);

  bool resultants_ok = true;
  if (entries_ok && rows_ok && cols_ok) {
    for (const auto& rv : closed_form_resultants(P))
      if (is_zero(rv.value)) resultants_ok = false;
  } else {
    resultants_ok = false;  // closed forms would divide by zero
  }
  rep.add("all pair resultants nonzero", resultants_ok);

  bool gp = false;
  if (entries_ok) gp = is_general_position(canonical_arrangement(P));
  rep.add("induced arrangement in general position", gp);
  return rep;
}

struct SampleResult {
  int tries = 0;
  ScreenReport screen;
};

// Entrywise conditions alone: entries avoid 0 and 1 and are distinct within
// each row and each column.  Exactly what makes every displayed closed-form
// denominator nonzero, without presupposing anything about the resultants.
template <class K>
bool entrywise_screen(const ParamMatrix<K>& P) {
  validate_params(P);
  const K zero = from_int_like(P.at(1, 1), 0);
  const K one = one_like(P.at(1, 1));
  for (int j = 1; j <= P.n; ++j)
    for (int i = 1; i <= P.k - 1; ++i)
      if (P.at(j, i) == zero || P.at(j, i) == one) return false;
  for (int j = 1; j <= P.n; ++j)
    for (int i = 1; i <= P.k - 1; ++i)
      for (int p = i + 1; p <= P.k - 1; ++p)
        if (P.at(j, i) == P.at(j, p)) return false;
  for (int i = 1; i <= P.k - 1; ++i)
    for (int j = 1; j <= P.n; ++j)
      for (int q = j + 1; q <= P.n; ++q)
        if (P.at(j, i) == P.at(q, i)) return false;
  return true;
}

// Draws parameter blocks until the entrywise screen passes.  Used by
// evaluation-style commands where screening on derived quantities would beg
// the question.
template <class K, class Sampler>
ParamMatrix<K> sample_entrywise_params(int n, int k, int r, const Sampler& draw,
                                       std::uint64_t seed, int budget = 64) {
  ParamMatrix<K> P;
  P.n = n;
  P.k = k;
  P.r = r;
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    P.a.assign(n, {});
    for (int j = 0; j < n; ++j) {
      P.a[j].clear();
      P.a[j].reserve(k - 1);
      for (int i = 0; i < k - 1; ++i) P.a[j].push_back(draw(rng));
    }
    if (entrywise_screen(P)) return P;
  }
  throw GenericityError("no entrywise-generic parameter block found within " +
                        std::to_string(budget) + " draws (seed " + std::to_string(seed) + ")");
}

// Draws parameter blocks from the given scalar sampler until the screen
// passes; deterministic in the seed.  Throws GenericityError after the
// retry budget.
template <class K, class Sampler>
ParamMatrix<K> sample_generic_params(int n, int k, int r, const Sampler& draw, std::uint64_t seed,
                                     SampleResult* result = nullptr, int budget = 64) {
  ParamMatrix<K> P;
  P.n = n;
  P.k = k;
  P.r = r;
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    P.a.assign(n, {});
    for (int j = 0; j < n; ++j) {
      P.a[j].clear();
      P.a[j].reserve(k - 1);
      for (int i = 0; i < k - 1; ++i) P.a[j].push_back(draw(rng));
    }
    ScreenReport rep = screen_params(P);
    if (rep.ok) {
      if (result) {
        result->tries = attempt;
        result->screen = std::move(rep);
      }
      return P;
    }
  }
  throw GenericityError("no generic parameter block found within " + std::to_string(budget) +
                        " draws (seed " + std::to_string(seed) + ")");
}

}  // namespace jacring
