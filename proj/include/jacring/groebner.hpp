#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jacring/errors.hpp"
#include "jacring/fp.hpp"

namespace jacring {

// Polynomial ring in the lambda coordinates, graded reverse lexicographic
// order.  Exponent vectors are dense.
using ExpVec = std::vector<std::int16_t>;

inline int exp_degree(const ExpVec& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

// +1 when a is grevlex-larger than b: larger total degree, ties broken by the
// rightmost differing exponent being smaller.
inline int grevlex_cmp(const ExpVec& a, const ExpVec& b) {
  const int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

struct GrevlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grevlex_cmp(a, b) > 0; }
};

inline bool exp_divides(const ExpVec& a, const ExpVec& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline ExpVec exp_mul(const ExpVec& a, const ExpVec& b) {
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return out;
}

inline ExpVec exp_div(const ExpVec& a, const ExpVec& b) {  // a / b, assumes b | a
  ExpVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::int16_t>(a[i] - b[i]);
  return out;
}

inline bool exp_coprime(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

template <class K>
class LambdaPoly {
 public:
  using TermMap = std::map<ExpVec, K, GrevlexGreater>;

  LambdaPoly() = default;
  explicit LambdaPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ExpVec& e, const K& c) {
    if (jacring::is_zero(c)) return;
    if (static_cast<int>(e.size()) != nvars_) throw StructuralError("exponent length mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (jacring::is_zero(it->second)) terms_.erase(it);
    }
  }

  const ExpVec& leading_exp() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.begin()->first;
  }
  const K& leading_coeff() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.begin()->second;
  }
  void pop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }
  int degree() const { return terms_.empty() ? -1 : exp_degree(leading_exp()); }

  void make_monic() {
    if (terms_.empty()) return;
    const K inv = one_like(leading_coeff()) / leading_coeff();
    for (auto& [e, c] : terms_) c = c * inv;
  }

  // this -= (scale * x^shift) * g
  void submul(const K& scale, const ExpVec& shift, const LambdaPoly& g) {
    for (const auto& [e, c] : g.terms_) {
      ExpVec target = exp_mul(e, shift);
      K delta = scale * c;
      auto it = terms_.find(target);
      if (it == terms_.end()) {
        terms_.emplace(std::move(target), from_int_like(delta, 0) - delta);
      } else {
        it->second -= delta;
        if (jacring::is_zero(it->second)) terms_.erase(it);
      }
    }
  }

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

// Symmetric coefficient matrix -> the quadric lambda^T M lambda.
template <class K>
LambdaPoly<K> quadric_to_poly(const std::vector<std::vector<K>>& M) {
  const int n = static_cast<int>(M.size());
  LambdaPoly<K> f(n);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      const K c = (u == v) ? M[u][u] : M[u][v] + M[v][u];
      if (is_zero(c)) continue;
      ExpVec e(n, 0);
      e[u] = static_cast<std::int16_t>(e[u] + 1);
      e[v] = static_cast<std::int16_t>(e[v] + 1);
      f.add_term(e, c);
    }
  return f;
}

// Remainder of f modulo the marked set G (full multivariate division).
template <class K>
LambdaPoly<K> normal_form(LambdaPoly<K> f, const std::vector<LambdaPoly<K>>& G) {
  LambdaPoly<K> rem(f.nvars());
  while (!f.is_zero()) {
    const ExpVec& lead = f.leading_exp();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero() || !exp_divides(g.leading_exp(), lead)) continue;
      const K scale = f.leading_coeff() / g.leading_coeff();
      f.submul(scale, exp_div(lead, g.leading_exp()), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lead, f.leading_coeff());
      f.pop_leading();
    }
  }
  return rem;
}

struct GroebnerBudget {
  long long max_pair_reductions = 2'000'000;
  long long max_basis_size = 50'000;
};

// Buchberger's algorithm, normal selection strategy (smallest lcm in the
// order first), Gebauer–Moeller pair elimination, final auto-reduction to the
// unique reduced basis.  Throws ResourceError when the budget is exhausted.
template <class K>
std::vector<LambdaPoly<K>> groebner_basis(std::vector<LambdaPoly<K>> gens,
                                          const GroebnerBudget& budget = {}) {
  std::vector<LambdaPoly<K>> G;
  int nvars = 0;
  for (auto& g : gens) {
    nvars = g.nvars();
    if (!g.is_zero()) {
      g.make_monic();
      G.push_back(std::move(g));
    }
  }
  if (G.empty()) return G;

  struct Pair {
    ExpVec lcm;
    int i, j;
  };
  auto pair_less = [](const Pair& a, const Pair& b) {
    const int c = grevlex_cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;  // smaller lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pairs;

  auto gm_update = [&](int t) {
    // Gebauer–Moeller update on arrival of G[t].
    const ExpVec& lt = G[t].leading_exp();
    std::vector<Pair> fresh;
    for (int i = 0; i < t; ++i) fresh.push_back({exp_lcm(G[i].leading_exp(), lt), i, t});
    // Drop old pairs whose lcm is strictly reduced through lt.
    std::vector<Pair> kept;
    for (auto& pr : pairs) {
      const bool killable = exp_divides(lt, pr.lcm) &&
                            grevlex_cmp(exp_lcm(G[pr.i].leading_exp(), lt), pr.lcm) != 0 &&
                            grevlex_cmp(exp_lcm(G[pr.j].leading_exp(), lt), pr.lcm) != 0;
      if (!killable) kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);
    // Among the fresh pairs: keep one representative per lcm that is a
    // proper multiple of another fresh lcm (criterion M / F), and drop
    // coprime-lead pairs (Buchberger's first criterion).
    std::sort(fresh.begin(), fresh.end(), pair_less);
    std::vector<Pair> selected;
    for (std::size_t s = 0; s < fresh.size(); ++s) {
      bool dominated = false;
      for (const auto& kept_pair : selected)
        if (exp_divides(kept_pair.lcm, fresh[s].lcm)) {
          dominated = true;  // proper multiple, or an equal-lcm representative exists
          break;
        }
      if (!dominated) selected.push_back(std::move(fresh[s]));
    }
    for (auto& pr : selected)
      if (!exp_coprime(G[pr.i].leading_exp(), G[pr.j].leading_exp()))
        pairs.push_back(std::move(pr));
  };

  for (int t = 0; t < static_cast<int>(G.size()); ++t) gm_update(t);

  long long reductions = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = std::move(*best);
    pairs.erase(best);
    if (++reductions > budget.max_pair_reductions)
      throw ResourceError("basis computation exceeded the pair-reduction budget");

    const auto& f = G[pr.i];
    const auto& g = G[pr.j];
    LambdaPoly<K> s = f;
    {
      // S-polynomial: (lcm/lt(f)) f - (lcm/lt(g)) g for monic f, g.
      LambdaPoly<K> shifted(f.nvars());
      const ExpVec sf = exp_div(pr.lcm, f.leading_exp());
      for (const auto& [e, c] : f.terms()) shifted.add_term(exp_mul(e, sf), c);
      s = std::move(shifted);
      s.submul(one_like(g.leading_coeff()), exp_div(pr.lcm, g.leading_exp()), g);
    }
    LambdaPoly<K> rem = normal_form(std::move(s), G);
    if (rem.is_zero()) continue;
    rem.make_monic();
    G.push_back(std::move(rem));
    if (static_cast<long long>(G.size()) > budget.max_basis_size)
      throw ResourceError("basis computation exceeded the basis-size budget");
    gm_update(static_cast<int>(G.size()) - 1);
  }

  // Minimalize: drop members whose lead is divisible by another lead.
  std::vector<LambdaPoly<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (exp_divides(G[j].leading_exp(), G[i].leading_exp())) {
        const int c = grevlex_cmp(G[j].leading_exp(), G[i].leading_exp());
        redundant = (c != 0) || (j < i);  // equal leads: keep the earliest
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Auto-reduce the tails against the other members.
  std::vector<LambdaPoly<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<LambdaPoly<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    LambdaPoly<K> r = normal_form(minimal[i], others);
    if (!r.is_zero()) {
      r.make_monic();
      reduced.push_back(std::move(r));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [](const LambdaPoly<K>& a, const LambdaPoly<K>& b) {
    return grevlex_cmp(a.leading_exp(), b.leading_exp()) > 0;
  });
  return reduced;
}

// Krull dimension of the quotient by the ideal with the given reduced basis:
// the largest cardinality of a variable subset S such that no leading
// monomial is supported entirely inside S (staircase criterion).  Returns -1
// for the unit ideal.
template <class K>
int staircase_dimension(const std::vector<LambdaPoly<K>>& gb, int nvars) {
  if (nvars > 30) throw UnsupportedError("staircase dimension supports at most 30 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    if (g.degree() == 0) return -1;  // unit ideal
    std::uint32_t mask = 0;
    const ExpVec& e = g.leading_exp();
    for (int v = 0; v < nvars; ++v)
      if (e[v] > 0) mask |= (1u << v);
    supports.push_back(mask);
  }
  int best = -1;
  const std::uint32_t limit = nvars >= 32 ? 0xFFFFFFFFu : ((1u << nvars) - 1);
  for (std::uint32_t s = 0;; ++s) {
    bool independent = true;
    for (std::uint32_t m : supports)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(s)));
    if (s == limit) break;
  }
  return best;
}

}  // namespace jacring
