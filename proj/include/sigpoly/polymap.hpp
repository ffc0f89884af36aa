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

// Polynomial maps p: R^d -> R^m and the shuffle-algebra homomorphism
//
//   M_p(e)   = e,
//   M_p(w i) = sum_j (M_p(w) ⧢ k_p^{ij}) j,    k_p^{ij} = phi(d_j p_i),
//
// whose adjoint carries the signature of a path X to the signature of p(X).

#ifndef SIGPOLY_POLYMAP_HPP_
#define SIGPOLY_POLYMAP_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigpoly/error.hpp"
#include "sigpoly/poly.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"

namespace sigpoly {

class PolynomialMap {
 public:
  PolynomialMap(std::size_t domain_dim, std::vector<Poly> components)
      : domain_dim_(domain_dim), components_(std::move(components)) {
    if (domain_dim_ == 0 || domain_dim_ > kMaxAlphabet) {
      throw DomainError("domain dimension must be in 1.." +
                        std::to_string(kMaxAlphabet));
    }
    if (components_.empty() || components_.size() > kMaxAlphabet) {
      throw DomainError("codomain dimension must be in 1.." +
                        std::to_string(kMaxAlphabet));
    }
    for (const Poly& c : components_) {
      if (c.nvars() != domain_dim_) {
        throw DimensionMismatch("map component in " + std::to_string(c.nvars()) +
                                " variables, domain dimension is " +
                                std::to_string(domain_dim_));
      }
    }
  }

  static PolynomialMap identity(std::size_t d) {
    std::vector<Poly> comps;
    for (std::size_t i = 1; i <= d; ++i) comps.push_back(Poly::variable(d, i));
    return PolynomialMap(d, std::move(comps));
  }

  // x -> A x for an m x d matrix given row by row.
  static PolynomialMap linear(const std::vector<std::vector<Rational>>& a) {
    const std::size_t d = a.at(0).size();
    std::vector<Poly> comps;
    for (const auto& row : a) {
      if (row.size() != d) throw DimensionMismatch("ragged matrix");
      Poly c(d);
      for (std::size_t j = 0; j < d; ++j) {
        c += Poly::variable(d, j + 1) * row[j];
      }
      comps.push_back(std::move(c));
    }
    return PolynomialMap(d, std::move(comps));
  }

  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t codomain_dim() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

  // max_i deg(p_i); zero components are ignored and the zero map has
  // degree 0.
  std::size_t degree() const {
    std::size_t deg = 0;
    for (const Poly& c : components_) {
      if (auto dc = c.degree()) deg = std::max(deg, *dc);
    }
    return deg;
  }

  bool vanishes_at_origin() const {
    for (const Poly& c : components_) {
      if (sgn(c.constant_term()) != 0) return false;
    }
    return true;
  }

  // All nonzero components homogeneous of one common degree.
  bool is_homogeneous() const {
    std::optional<std::size_t> common;
    for (const Poly& c : components_) {
      if (c.is_zero()) continue;
      if (!c.is_homogeneous()) return false;
      if (common && *common != *c.degree()) return false;
      common = c.degree();
    }
    return true;
  }

  std::vector<Rational> operator()(std::span<const Rational> x) const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const Poly& c : components_) out.push_back(eval(c, x));
    return out;
  }

  friend bool operator==(const PolynomialMap&, const PolynomialMap&) = default;

 private:
  std::size_t domain_dim_;
  std::vector<Poly> components_;
};

// m x d matrix of partial derivatives d_j p_i.
inline std::vector<std::vector<Poly>> jacobian(const PolynomialMap& p) {
  std::vector<std::vector<Poly>> jac;
  jac.reserve(p.codomain_dim());
  for (const Poly& pi : p.components()) {
    std::vector<Poly> row;
    row.reserve(p.domain_dim());
    for (std::size_t j = 1; j <= p.domain_dim(); ++j) {
      row.push_back(partial(pi, j));
    }
    jac.push_back(std::move(row));
  }
  return jac;
}

// Tensor-valued Jacobian k_p^{ij} = phi(d_j p_i) over the alphabet {1..d}.
struct KMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<TensorElem>> entries;

  const TensorElem& operator()(std::size_t i, std::size_t j) const {
    return entries[i][j];
  }
};

inline KMatrix k_matrix(const PolynomialMap& p) {
  KMatrix k{p.codomain_dim(), p.domain_dim(), {}};
  for (const auto& row : jacobian(p)) {
    std::vector<TensorElem> krow;
    krow.reserve(row.size());
    for (const Poly& entry : row) krow.push_back(phi(entry));
    k.entries.push_back(std::move(krow));
  }
  return k;
}

// M_p evaluated word by word. M_p(w) is cached for every word evaluated,
// so M_p(w i) reuses the stored prefix M_p(w).
class MpMap {
 public:
  explicit MpMap(const PolynomialMap& p)
      : source_dim_(p.codomain_dim()), target_dim_(p.domain_dim()) {
    if (!p.vanishes_at_origin()) {
      throw NotVanishingAtOrigin(
          "M_p requires p(0) = 0; shift the map to the path start first");
    }
    k_ = k_matrix(p);
    cache_.emplace(Word(), TensorElem::unit(target_dim_));
  }

  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  const KMatrix& k() const { return k_; }

  const TensorElem& operator()(const Word& w) {
    check_word(w, source_dim_);
    return eval_word(w);
  }

  TensorElem operator()(const TensorElem& a) {
    if (a.dim() != source_dim_) {
      throw DimensionMismatch("M_p: input over alphabet " +
                              std::to_string(a.dim()) + ", map expects " +
                              std::to_string(source_dim_));
    }
    TensorElem out(target_dim_);
    for (const auto& [w, c] : a.terms()) out += c * eval_word(w);
    return out;
  }

 private:
  const TensorElem& eval_word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    const TensorElem& head = eval_word(w.prefix());
    const std::size_t i = w.back() - 1;
    // M_p(w i) = sum_j T^+_j(M_p(w) ⧢ k^{ij}).
    detail::ShuffleAccumulator acc(target_dim_);
    for (std::size_t j = 0; j < target_dim_; ++j) {
      const Letter letter = static_cast<Letter>(j + 1);
      for (const auto& [u, cu] : head.terms()) {
        for (const auto& [v, cv] : k_(i, j).terms()) acc.add(u, v, cu * cv, letter);
      }
    }
    return cache_.emplace(w, acc.take()).first->second;
  }

  std::size_t source_dim_;
  std::size_t target_dim_;
  KMatrix k_;
  std::unordered_map<Word, TensorElem, WordHash> cache_;
};

inline TensorElem m_p(const PolynomialMap& p, const TensorElem& a) {
  MpMap mp(p);
  return mp(a);
}

inline TensorElem m_p(const PolynomialMap& p, const Word& w) {
  MpMap mp(p);
  return mp(w);
}

// p~(y) = p(y + x0) - p(x0), which vanishes at the origin.
inline PolynomialMap shift_map(const PolynomialMap& p,
                               std::span<const Rational> x0) {
  const std::size_t d = p.domain_dim();
  if (x0.size() != d) {
    throw DimensionMismatch("shift point has " + std::to_string(x0.size()) +
                            " coordinates, map domain has " +
                            std::to_string(d));
  }
  std::vector<Poly> shifted_vars;
  for (std::size_t j = 0; j < d; ++j) {
    shifted_vars.push_back(Poly::variable(d, j + 1) + Poly::constant(d, x0[j]));
  }
  std::vector<Poly> comps;
  for (const Poly& pi : p.components()) {
    Poly c = compose(pi, shifted_vars);
    c -= Poly::constant(d, c.constant_term());
    comps.push_back(std::move(c));
  }
  return PolynomialMap(d, std::move(comps));
}

inline PolynomialMap shift_map(const PolynomialMap& p,
                               const std::vector<Rational>& x0) {
  return shift_map(p, std::span<const Rational>(x0));
}

// (q o p)(x) = q(p(x)).
inline PolynomialMap compose_maps(const PolynomialMap& q,
                                  const PolynomialMap& p) {
  if (q.domain_dim() != p.codomain_dim()) {
    throw DimensionMismatch("compose_maps: q expects " +
                            std::to_string(q.domain_dim()) +
                            " inputs, p produces " +
                            std::to_string(p.codomain_dim()));
  }
  std::vector<Poly> comps;
  for (const Poly& qi : q.components()) comps.push_back(compose(qi, p.components()));
  return PolynomialMap(p.domain_dim(), std::move(comps));
}

// Change-of-coordinates matrix between level k of sigma(p(X)) and level
// n k of sigma(X) for p homogeneous of degree n. Row w holds the
// coefficients of M_p(w); rows and columns are in lexicographic word order.
struct LevelMatrix {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Word> row_words;
  std::vector<Word> col_words;
  std::vector<std::vector<Rational>> rows;
};

inline LevelMatrix level_matrix(const PolynomialMap& p, std::size_t k) {
  if (!p.vanishes_at_origin()) {
    throw NotVanishingAtOrigin("level_matrix requires p(0) = 0");
  }
  if (!p.is_homogeneous()) {
    throw NonHomogeneousMap(
        "level_matrix requires all components homogeneous of one degree; "
        "otherwise M_p(w) spreads over several word lengths");
  }
  const std::size_t n = p.degree();
  LevelMatrix out;
  out.source_dim = p.codomain_dim();
  out.target_dim = p.domain_dim();
  out.row_words = words_of_length(out.source_dim, k);
  out.col_words = words_of_length(out.target_dim, n * k);
  std::unordered_map<Word, std::size_t, WordHash> col_index;
  for (std::size_t c = 0; c < out.col_words.size(); ++c) {
    col_index.emplace(out.col_words[c], c);
  }
  MpMap mp(p);
  for (const Word& w : out.row_words) {
    std::vector<Rational> row(out.col_words.size());
    for (const auto& [v, c] : mp(w).terms()) row[col_index.at(v)] = c;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace sigpoly

#endif  // SIGPOLY_POLYMAP_HPP_
