// Copyright 2026 The sigpoly Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact commutative multivariate polynomials over the rationals, and the
// embedding phi of the polynomial ring into the shuffle algebra.

#ifndef SIGPOLY_POLY_HPP_
#define SIGPOLY_POLY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigpoly/error.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"

namespace sigpoly {

using Exponents = std::vector<std::uint32_t>;

inline std::size_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

// Graded lexicographic monomial order: by total degree, then x_1 before
// x_2 and so on (x^2 < xy < y^2), matching the word order 11 < 12 < 22.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const std::size_t da = total_degree(a);
    const std::size_t db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

class Poly {
 public:
  using Terms = std::map<Exponents, Rational, MonomialOrder>;

  explicit Poly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw DomainError("polynomial needs at least one variable");
  }

  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  // The coordinate function x_j, 1-based.
  static Poly variable(std::size_t nvars, std::size_t j) {
    if (j < 1 || j > nvars) {
      throw DomainError("variable index " + std::to_string(j) + " out of range");
    }
    Exponents e(nvars, 0);
    e[j - 1] = 1;
    Poly p(nvars);
    p.add_term(e, Rational(1));
    return p;
  }

  static Poly monomial(const Exponents& e, const Rational& c = Rational(1)) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
  }

  // Univariate polynomial from coefficients of t^0, t^1, ...
  static Poly univariate(std::span<const Rational> coeffs) {
    Poly p(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      p.add_term(Exponents{static_cast<std::uint32_t>(k)}, coeffs[k]);
    }
    return p;
  }
  static Poly univariate(std::initializer_list<Rational> coeffs) {
    return univariate(std::span<const Rational>(coeffs.begin(), coeffs.size()));
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.rbegin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) ==
           total_degree(terms_.rbegin()->first);
  }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  Rational coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coeff(Exponents(nvars_, 0)); }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) {
      throw DimensionMismatch("monomial has " + std::to_string(e.size()) +
                              " exponents, polynomial has " +
                              std::to_string(nvars_) + " variables");
    }
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    require_same_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_nvars(b);
    Poly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void require_same_nvars(const Poly& o) const {
    if (nvars_ != o.nvars_) {
      throw DimensionMismatch("polynomials in " + std::to_string(nvars_) +
                              " and " + std::to_string(o.nvars_) +
                              " variables");
    }
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

inline Poly pow(const Poly& a, std::uint32_t n) {
  Poly result = Poly::constant(a.nvars(), Rational(1));
  Poly base = a;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

// Formal partial derivative with respect to x_j (1-based).
inline Poly partial(const Poly& a, std::size_t j) {
  if (j < 1 || j > a.nvars()) {
    throw DomainError("partial: variable index " + std::to_string(j) +
                      " out of range 1.." + std::to_string(a.nvars()));
  }
  Poly out(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    const std::uint32_t k = e[j - 1];
    if (k == 0) continue;
    Exponents d = e;
    d[j - 1] = k - 1;
    out.add_term(d, c * k);
  }
  return out;
}

// Antiderivative in x_j vanishing on x_j = 0.
inline Poly antiderivative(const Poly& a, std::size_t j) {
  if (j < 1 || j > a.nvars()) {
    throw DomainError("antiderivative: variable index out of range");
  }
  Poly out(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    Exponents d = e;
    d[j - 1] += 1;
    out.add_term(d, c / Rational(d[j - 1]));
  }
  return out;
}

// q(p_1, ..., p_m) for q in m variables and p_l sharing nvars = d.
inline Poly compose(const Poly& q, std::span<const Poly> p) {
  if (p.size() != q.nvars()) {
    throw DimensionMismatch("compose: polynomial in " +
                            std::to_string(q.nvars()) + " variables, " +
                            std::to_string(p.size()) + " substitutions");
  }
  const std::size_t d = p.front().nvars();
  for (const Poly& pl : p) {
    if (pl.nvars() != d) {
      throw DimensionMismatch("compose: substituted polynomials disagree on nvars");
    }
  }
  // powers[l][k] = p_l^k, filled on demand.
  std::vector<std::vector<Poly>> powers(p.size());
  auto power = [&](std::size_t l, std::uint32_t k) -> const Poly& {
    auto& cache = powers[l];
    if (cache.empty()) cache.push_back(Poly::constant(d, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * p[l]);
    return cache[k];
  };
  Poly out(d);
  for (const auto& [e, c] : q.terms()) {
    Poly term = Poly::constant(d, c);
    for (std::size_t l = 0; l < e.size(); ++l) {
      if (e[l] != 0) term *= power(l, e[l]);
    }
    out += term;
  }
  return out;
}

inline Poly compose(const Poly& q, const std::vector<Poly>& p) {
  return compose(q, std::span<const Poly>(p));
}

inline Rational eval(const Poly& a, std::span<const Rational> point) {
  if (point.size() != a.nvars()) {
    throw DimensionMismatch("eval: point has " + std::to_string(point.size()) +
                            " coordinates, polynomial has " +
                            std::to_string(a.nvars()) + " variables");
  }
  Rational total(0);
  Rational term;
  for (const auto& [e, c] : a.terms()) {
    term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (std::uint32_t r = 0; r < e[k]; ++r) term *= point[k];
    }
    total += term;
  }
  return total;
}

inline Rational eval(const Poly& a, const std::vector<Rational>& point) {
  return eval(a, std::span<const Rational>(point));
}

// phi: x_{i_1} ... x_{i_l} -> i_1 ⧢ ... ⧢ i_l, extended linearly; a
// constant c maps to c e. The image lives over the alphabet {1..nvars}.
inline TensorElem phi(const Poly& a) {
  const std::size_t d = a.nvars();
  TensorElem out(d);
  // Shuffle powers of single letters are reused across monomials.
  std::vector<std::vector<TensorElem>> letter_powers(d);
  auto letter_power = [&](std::size_t j, std::uint32_t k) -> const TensorElem& {
    auto& cache = letter_powers[j];
    if (cache.empty()) cache.push_back(TensorElem::unit(d));
    while (cache.size() <= k) {
      cache.push_back(shuffle(cache.back(), TensorElem::word(
                                                d, Word::letter(j + 1))));
    }
    return cache[k];
  };
  for (const auto& [e, c] : a.terms()) {
    TensorElem term = TensorElem::word(d, Word(), c);
    for (std::size_t j = 0; j < d; ++j) {
      if (e[j] != 0) term = shuffle(term, letter_power(j, e[j]));
    }
    out += term;
  }
  return out;
}

}  // namespace sigpoly

#endif  // SIGPOLY_POLY_HPP_
