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

// The free tensor algebra T(R^d) over exact rationals: finitely supported
// linear combinations of words, with the concatenation, shuffle and right
// half-shuffle products, the T^+_i / T^-_i operators and the dual pairing.

#ifndef SIGPOLY_TENSOR_HPP_
#define SIGPOLY_TENSOR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigpoly/error.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/word.hpp"

namespace sigpoly {

// Element of T(R^d) in canonical sparse form: no stored coefficient is zero
// and terms iterate in graded-lex order.
namespace detail {
class ShuffleAccumulator;
}  // namespace detail

class TensorElem {
 public:
  using Terms = std::map<Word, Rational>;

  explicit TensorElem(std::size_t dim) : dim_(dim) {
    if (dim == 0 || dim > kMaxAlphabet) {
      throw DomainError("alphabet size must be in 1.." +
                        std::to_string(kMaxAlphabet));
    }
  }

  // The empty word e with coefficient 1.
  static TensorElem unit(std::size_t dim) { return word(dim, Word()); }

  static TensorElem word(std::size_t dim, const Word& w,
                         const Rational& c = Rational(1)) {
    TensorElem t(dim);
    t.add_term(w, c);
    return t;
  }

  // Builds an element from (word, coefficient) pairs; repeated words add up.
  static TensorElem from_terms(
      std::size_t dim, std::initializer_list<std::pair<Word, Rational>> terms) {
    TensorElem t(dim);
    for (const auto& [w, c] : terms) t.add_term(w, c);
    return t;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Longest word carrying a nonzero coefficient; 0 for the zero element.
  std::size_t max_level() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
  }
  std::size_t min_level() const {
    return terms_.empty() ? 0 : terms_.begin()->first.size();
  }

  bool has_empty_word_component() const {
    return terms_.count(Word()) != 0;
  }

  void add_term(const Word& w, const Rational& c) {
    check_word(w, dim_);
    accumulate(w, c);
  }

  // Like add_term but without the alphabet check; callers guarantee that
  // every letter of w lies in 1..dim.
  void accumulate(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    if (terms_.empty() || terms_.rbegin()->first < w) {
      terms_.emplace_hint(terms_.end(), w, c);
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  TensorElem& operator+=(const TensorElem& other) {
    require_same_dim(other, "+");
    for (const auto& [w, c] : other.terms_) accumulate(w, c);
    return *this;
  }
  TensorElem& operator-=(const TensorElem& other) {
    require_same_dim(other, "-");
    for (const auto& [w, c] : other.terms_) accumulate(w, -c);
    return *this;
  }
  TensorElem& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend TensorElem operator+(TensorElem a, const TensorElem& b) {
    return a += b;
  }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) {
    return a -= b;
  }
  friend TensorElem operator-(TensorElem a) { return a *= Rational(-1); }
  friend TensorElem operator*(const Rational& s, TensorElem a) {
    return a *= s;
  }
  friend TensorElem operator*(TensorElem a, const Rational& s) {
    return a *= s;
  }

  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void require_same_dim(const TensorElem& other, const char* op) const {
    if (dim_ != other.dim_) {
      throw DimensionMismatch(std::string("tensor ") + op + ": alphabet " +
                              std::to_string(dim_) + " vs " +
                              std::to_string(other.dim_));
    }
  }

 private:
  friend class detail::ShuffleAccumulator;

  std::size_t dim_;
  Terms terms_;
};

namespace detail {

// Shuffle of two words with multiplicities. prefix(a,i) ⧢ prefix(b,j) is
// memoized in a rolling table; the recurrence
//   (u a') ⧢ (v b') = (u ⧢ v b') a' + (u a' ⧢ v) b'
// only ever refers to prefix pairs, so the table covers every subcall.
// Multiplicities are bounded by binomial(|a|+|b|, |a|), which fits in 64
// bits for |a|+|b| <= 62.
using WordCounts = std::map<Word, std::uint64_t>;

inline WordCounts shuffle_word_counts(const Word& a, const Word& b) {
  if (a.size() + b.size() > 62) {
    throw DomainError("shuffle of words with total length > 62 unsupported");
  }
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // row[j] = prefix(a,i) ⧢ prefix(b,j) for the current i.
  std::vector<WordCounts> row(m + 1);
  row[0][Word()] = 1;
  for (std::size_t j = 1; j <= m; ++j) row[j][b.prefix(j)] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<WordCounts> next(m + 1);
    next[0][a.prefix(i)] = 1;
    for (std::size_t j = 1; j <= m; ++j) {
      WordCounts& cell = next[j];
      for (const auto& [w, c] : row[j]) cell[w.appended(a[i - 1])] += c;
      for (const auto& [w, c] : next[j - 1]) cell[w.appended(b[j - 1])] += c;
    }
    row = std::move(next);
  }
  return std::move(row[m]);
}

// Collects sums of c * (u ⧢ v), optionally followed by a fixed last letter,
// in a hash table before the result is put in canonical order. Short pairs
// are expanded interleaving by interleaving; longer ones, whose shuffles
// repeat words heavily, go through shuffle_word_counts.
class ShuffleAccumulator {
 public:
  explicit ShuffleAccumulator(std::size_t dim) : dim_(dim), denom_(1) {}

  void add(const Word& u, const Word& v, const Rational& c, Letter last = 0) {
    if (sgn(c) == 0) return;
    const mpz_class scaled = scaled_numerator(c);
    if (interleavings_at_most(u.size(), v.size(), kEnumerationLimit)) {
      buf_ = Word();
      expand(u, 0, v, 0, scaled, last);
      return;
    }
    for (const auto& [w, k] : shuffle_word_counts(u, v)) {
      Word z = w;
      if (last != 0) z.push_back(last);
      add_word(z, scaled * static_cast<unsigned long>(k));
    }
  }

  TensorElem take() {
    std::vector<std::pair<const Word, mpz_class>*> live;
    live.reserve(acc_.size());
    for (auto& entry : acc_) {
      if (sgn(entry.second) != 0) live.push_back(&entry);
    }
    std::sort(live.begin(), live.end(),
              [](const auto* x, const auto* y) { return x->first < y->first; });
    TensorElem out(dim_);
    for (auto* entry : live) {
      Rational c(entry->second, denom_);
      c.canonicalize();
      out.terms_.emplace_hint(out.terms_.end(), entry->first, std::move(c));
    }
    acc_.clear();
    denom_ = 1;
    return out;
  }

 private:
  static constexpr std::uint64_t kEnumerationLimit = 2048;

  static bool interleavings_at_most(std::size_t n, std::size_t m, std::uint64_t limit) {
    std::uint64_t c = 1;
    const std::size_t k = std::min(n, m);
    for (std::size_t r = 1; r <= k; ++r) {
      c = c * (n + m - k + r) / r;
      if (c > limit) return false;
    }
    return true;
  }

  // Sums are kept as integers over the common denominator denom_, which is
  // enlarged (rescaling what is stored) when c needs a new factor.
  mpz_class scaled_numerator(const Rational& c) {
    const mpz_class& q = c.get_den();
    if (!mpz_divisible_p(denom_.get_mpz_t(), q.get_mpz_t())) {
      mpz_class g;
      mpz_lcm(g.get_mpz_t(), denom_.get_mpz_t(), q.get_mpz_t());
      const mpz_class factor = g / denom_;
      for (auto& entry : acc_) entry.second *= factor;
      denom_ = g;
    }
    return c.get_num() * (denom_ / q);
  }

  void add_word(const Word& w, const mpz_class& c) {
    auto [it, inserted] = acc_.try_emplace(w, c);
    if (!inserted) it->second += c;
  }

  void expand(const Word& u, std::size_t i, const Word& v, std::size_t j,
              const mpz_class& c, Letter last) {
    if (i == u.size() || j == v.size()) {
      const Word& rest = i == u.size() ? v : u;
      const std::size_t from = i == u.size() ? j : i;
      for (std::size_t r = from; r < rest.size(); ++r) buf_.push_back(rest[r]);
      if (last != 0) buf_.push_back(last);
      add_word(buf_, c);
      if (last != 0) buf_.pop_back();
      for (std::size_t r = from; r < rest.size(); ++r) buf_.pop_back();
      return;
    }
    buf_.push_back(u[i]);
    expand(u, i + 1, v, j, c, last);
    buf_.pop_back();
    buf_.push_back(v[j]);
    expand(u, i, v, j + 1, c, last);
    buf_.pop_back();
  }

  std::size_t dim_;
  mpz_class denom_;
  std::unordered_map<Word, mpz_class, WordHash> acc_;
  Word buf_;
};

}  // namespace detail

// Concatenation product (bilinear juxtaposition).
inline TensorElem concat(const TensorElem& a, const TensorElem& b) {
  a.require_same_dim(b, "concat");
  TensorElem out(a.dim());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) out.accumulate(u * v, cu * cv);
  }
  return out;
}

namespace detail {

// Position of w among the words of its length in lexicographic order.
inline std::size_t word_index(const Word& w, std::size_t dim) {
  std::size_t idx = 0;
  for (Letter l : w) idx = idx * dim + (l - 1);
  return idx;
}

inline Word word_at(std::size_t idx, std::size_t length, std::size_t dim) {
  std::vector<Letter> letters(length);
  for (std::size_t r = length; r-- > 0;) {
    letters[r] = static_cast<Letter>(idx % dim + 1);
    idx /= dim;
  }
  return Word(std::move(letters));
}

// Number of words of length <= level, or limit + 1 if that exceeds limit.
inline std::size_t words_up_to_count(std::size_t dim, std::size_t level,
                                     std::size_t limit) {
  std::size_t total = 0, layer = 1;
  for (std::size_t k = 0; k <= level; ++k) {
    total += layer;
    if (total > limit) return limit + 1;
    if (k < level && layer > limit / dim) return limit + 1;
    layer *= dim;
  }
  return total;
}

}  // namespace detail

// a • b with every word longer than level dropped.
inline TensorElem concat_truncated(const TensorElem& a, const TensorElem& b,
                                   std::size_t level) {
  a.require_same_dim(b, "concat");
  const std::size_t d = a.dim();
  constexpr std::size_t kDenseLimit = std::size_t{1} << 20;
  if (detail::words_up_to_count(d, level, kDenseLimit) > kDenseLimit) {
    TensorElem out(d);
    for (const auto& [u, cu] : a.terms()) {
      if (u.size() > level) break;
      const std::size_t room = level - u.size();
      for (const auto& [v, cv] : b.terms()) {
        if (v.size() > room) break;
        out.accumulate(u * v, cu * cv);
      }
    }
    return out;
  }
  // Words of one length, as (lexicographic index, coefficient), per length.
  using Layer = std::vector<std::pair<std::size_t, const Rational*>>;
  auto layers = [&](const TensorElem& t) {
    std::vector<Layer> out(level + 1);
    for (const auto& [w, c] : t.terms()) {
      if (w.size() > level) break;
      out[w.size()].emplace_back(detail::word_index(w, d), &c);
    }
    return out;
  };
  const std::vector<Layer> la = layers(a);
  const std::vector<Layer> lb = layers(b);
  TensorElem out(d);
  std::vector<std::size_t> power{1};
  for (std::size_t k = 1; k <= level; ++k) power.push_back(power.back() * d);
  for (std::size_t k = 0; k <= level; ++k) {
    std::vector<Rational> dense(power[k]);
    bool any = false;
    for (std::size_t j = 0; j <= k; ++j) {
      for (const auto& [iu, cu] : la[j]) {
        for (const auto& [iv, cv] : lb[k - j]) {
          dense[iu * power[k - j] + iv] += *cu * *cv;
          any = true;
        }
      }
    }
    if (!any) continue;
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      if (sgn(dense[idx]) != 0) out.accumulate(detail::word_at(idx, k, d), dense[idx]);
    }
  }
  return out;
}

inline TensorElem shuffle(const Word& a, const Word& b, std::size_t dim) {
  TensorElem out(dim);
  for (const auto& [w, c] : detail::shuffle_word_counts(a, b)) {
    out.accumulate(w, Rational(static_cast<unsigned long>(c)));
  }
  return out;
}

// Shuffle product, the bilinear extension of
//   e ⧢ w = w ⧢ e = w,
//   (u a) ⧢ (v b) = (u ⧢ v b) a + (u a ⧢ v) b.
inline TensorElem shuffle(const TensorElem& a, const TensorElem& b) {
  a.require_same_dim(b, "shuffle");
  detail::ShuffleAccumulator acc(a.dim());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) acc.add(u, v, cu * cv);
  }
  return acc.take();
}

// Right half-shuffle on T^{>=1}: u ≻ (v i) = (u ⧢ v) i, so in particular
// u ≻ i = u i.
inline TensorElem half_shuffle(const TensorElem& a, const TensorElem& b) {
  a.require_same_dim(b, "half_shuffle");
  if (a.has_empty_word_component() || b.has_empty_word_component()) {
    throw DomainError("half_shuffle requires arguments in T^{>=1}");
  }
  detail::ShuffleAccumulator acc(a.dim());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) acc.add(u, v.prefix(), cu * cv, v.back());
  }
  return acc.take();
}

inline void check_letter(std::size_t i, std::size_t dim) {
  if (i < 1 || i > dim) {
    throw DomainError("letter " + std::to_string(i) + " outside alphabet {1.." +
                      std::to_string(dim) + "}");
  }
}

// T^+_i: appends letter i to every word.
inline TensorElem t_plus(std::size_t i, const TensorElem& a) {
  check_letter(i, a.dim());
  TensorElem out(a.dim());
  for (const auto& [w, c] : a.terms()) {
    out.accumulate(w.appended(static_cast<Letter>(i)), c);
  }
  return out;
}

// T^-_i: strips a trailing letter i; words ending otherwise, and e, map to 0.
inline TensorElem t_minus(std::size_t i, const TensorElem& a) {
  check_letter(i, a.dim());
  TensorElem out(a.dim());
  for (const auto& [w, c] : a.terms()) {
    if (!w.empty() && w.back() == i) out.accumulate(w.prefix(), c);
  }
  return out;
}

// <series, w>: the coefficient of w.
inline Rational pairing(const TensorElem& series, const Word& w) {
  check_word(w, series.dim());
  return series.coeff(w);
}

// <series, x> extended linearly in x.
inline Rational pairing(const TensorElem& series, const TensorElem& x) {
  series.require_same_dim(x, "pairing");
  Rational total(0);
  for (const auto& [w, c] : x.terms()) {
    auto it = series.terms().find(w);
    if (it != series.terms().end()) total += c * it->second;
  }
  return total;
}

// Homogeneous component of word length exactly n.
inline TensorElem project_level(const TensorElem& a, std::size_t n) {
  TensorElem out(a.dim());
  for (const auto& [w, c] : a.terms()) {
    if (w.size() == n) out.accumulate(w, c);
  }
  return out;
}

// Sum of the components of word length <= n.
inline TensorElem truncate(const TensorElem& a, std::size_t n) {
  TensorElem out(a.dim());
  for (const auto& [w, c] : a.terms()) {
    if (w.size() > n) break;
    out.accumulate(w, c);
  }
  return out;
}

}  // namespace sigpoly

#endif  // SIGPOLY_TENSOR_HPP_
