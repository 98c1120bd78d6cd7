#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacring {

// Monomial in two blocks of variables, mu_0..mu_{k-1} and y_0..y_{m-1},
// stored as dense exponent vectors.  The bidegree is (mu-degree, y-degree).
struct Monomial {
  std::vector<std::int16_t> mu;
  std::vector<std::int16_t> y;

  Monomial() = default;
  Monomial(std::vector<std::int16_t> mu_exps, std::vector<std::int16_t> y_exps)
      : mu(std::move(mu_exps)), y(std::move(y_exps)) {}

  static Monomial one(int k_vars, int m_vars) {
    return Monomial(std::vector<std::int16_t>(k_vars, 0), std::vector<std::int16_t>(m_vars, 0));
  }

  int mu_degree() const { return std::accumulate(mu.begin(), mu.end(), 0); }
  int y_degree() const { return std::accumulate(y.begin(), y.end(), 0); }
  int total_degree() const { return mu_degree() + y_degree(); }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.mu.size() != b.mu.size() || a.y.size() != b.y.size())
    throw std::invalid_argument("monomial product across different variable shapes");
  Monomial out = a;
  for (std::size_t i = 0; i < b.mu.size(); ++i) out.mu[i] = static_cast<std::int16_t>(out.mu[i] + b.mu[i]);
  for (std::size_t j = 0; j < b.y.size(); ++j) out.y[j] = static_cast<std::int16_t>(out.y[j] + b.y[j]);
  return out;
}

// Graded-lexicographic comparison on the concatenated (mu, y) exponent
// vector: higher total degree first, ties broken lexicographically.
// Returns +1 when a is larger, -1 when smaller, 0 when equal.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.mu.size(); ++i)
    if (a.mu[i] != b.mu[i]) return a.mu[i] < b.mu[i] ? -1 : 1;
  for (std::size_t j = 0; j < a.y.size(); ++j)
    if (a.y[j] != b.y[j]) return a.y[j] < b.y[j] ? -1 : 1;
  return 0;
}

// Descending graded-lex: the map comparator that puts leading terms first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

// Exponent residues of the y-block modulo the cover degree r: the character
// by which the diagonal torus of r-th roots acting on each y_j scales the
// monomial.
inline std::vector<int> y_character(const Monomial& mono, int r) {
  std::vector<int> chi(mono.y.size());
  for (std::size_t j = 0; j < mono.y.size(); ++j) chi[j] = mono.y[j] % r;
  return chi;
}

// When all y-exponents share one residue class c mod r the monomial is
// semi-invariant under the subgroup fixing the ambient coordinates, with
// eigenclass label c; otherwise nullopt.
inline std::optional<int> uniform_eigenclass(const Monomial& mono, int r) {
  if (mono.y.empty()) return 0;
  int c = mono.y[0] % r;
  for (std::size_t j = 1; j < mono.y.size(); ++j)
    if (mono.y[j] % r != c) return std::nullopt;
  return c;
}

inline std::string to_string(const Monomial& mono) {
  std::string s;
  auto emit = [&s](const char* name, std::size_t idx, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    s += std::to_string(idx);
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < mono.mu.size(); ++i) emit("mu", i, mono.mu[i]);
  for (std::size_t j = 0; j < mono.y.size(); ++j) emit("y", j, mono.y[j]);
  return s.empty() ? "1" : s;
}

// All exponent vectors of the given length with the given total degree, in
// lexicographically descending order of the vector itself.
template <class Visit>
void enumerate_exponents(int degree, int length, Visit&& visit) {
  std::vector<std::int16_t> cur(length, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == length - 1) {
      cur[pos] = static_cast<std::int16_t>(remaining);
      visit(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = static_cast<std::int16_t>(e);
      self(self, pos + 1, remaining - e);
    }
  };
  if (length == 0) {
    if (degree == 0) visit(cur);
    return;
  }
  rec(rec, 0, degree);
}

}  // namespace jacring
