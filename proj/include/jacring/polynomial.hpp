#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jacring/fp.hpp"
#include "jacring/monomial.hpp"
#include "jacring/rational.hpp"

namespace jacring {

// Multivariate polynomial over an exact scalar type K (Rat or Fp), with terms
// kept in descending graded-lex order so iteration starts at the leading term.
template <class K>
class Polynomial {
 public:
  using Terms = std::map<Monomial, K, GrlexGreater>;

  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }

  static Polynomial monomial(Monomial m, K coeff) {
    Polynomial f;
    f.add_term(std::move(m), std::move(coeff));
    return f;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Monomial m, K coeff) {
    if (is_zero_coeff(coeff)) return;
    check_shape(m);
    auto [it, inserted] = terms_.emplace(std::move(m), coeff);
    if (!inserted) {
      it->second += coeff;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& g) {
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& g) {
    for (const auto& [m, c] : g.terms_) add_term(m, negate(c));
    return *this;
  }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { f += g; return f; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { f -= g; return f; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial out;
    for (const auto& [mf, cf] : f.terms_)
      for (const auto& [mg, cg] : g.terms_) out.add_term(mf * mg, cf * cg);
    return out;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial out;
    for (const auto& [mf, cf] : terms_) out.terms_.emplace_hint(out.terms_.end(), mf * m, cf);
    return out;
  }

  Polynomial scaled(const K& s) const {
    Polynomial out;
    if (is_zero_coeff(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * s);
    return out;
  }

  // d/d mu_i and d/d y_j with exact integer exponent factors.
  Polynomial partial_mu(int i) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m.mu[i] == 0) continue;
      Monomial d = m;
      d.mu[i] = static_cast<std::int16_t>(d.mu[i] - 1);
      out.add_term(std::move(d), c * from_int_like(c, m.mu[i]));
    }
    return out;
  }

  Polynomial partial_y(int j) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      if (m.y[j] == 0) continue;
      Monomial d = m;
      d.y[j] = static_cast<std::int16_t>(d.y[j] - 1);
      out.add_term(std::move(d), c * from_int_like(c, m.y[j]));
    }
    return out;
  }

  // Keeps exactly the terms whose y-exponent residues mod r equal chi.
  Polynomial character_projection(int r, const std::vector<int>& chi) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
      if (y_character(m, r) == chi) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  // Keeps the terms whose y-exponents all lie in one residue class e mod r.
  Polynomial eigenclass_projection(int r, int e) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      auto cls = uniform_eigenclass(m, r);
      if (cls && *cls == ((e % r) + r) % r) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  // Bidegree when bihomogeneous; nullopt otherwise (zero counts as any degree).
  std::optional<std::pair<int, int>> bidegree() const {
    std::optional<std::pair<int, int>> deg;
    for (const auto& [m, c] : terms_) {
      std::pair<int, int> d{m.mu_degree(), m.y_degree()};
      if (!deg) deg = d;
      else if (*deg != d) return std::nullopt;
    }
    return deg;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  static bool is_zero_coeff(const K& c) { return jacring::is_zero(c); }
  static K negate(const K& c) { return from_int_like(c, 0) - c; }

  void check_shape(const Monomial& m) const {
    if (terms_.empty()) return;
    const Monomial& first = terms_.begin()->first;
    if (first.mu.size() != m.mu.size() || first.y.size() != m.y.size())
      throw std::invalid_argument("polynomial term with mismatched variable shape");
  }

  Terms terms_;
};

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")*" + to_string(m);
  }
  return s;
}

}  // namespace jacring
