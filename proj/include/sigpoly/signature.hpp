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

// Exact truncated signatures of piecewise-polynomial paths.
//
// Each segment is a vector of univariate polynomials on t in [0, 1]. For a
// segment the iterated integrals are polynomials in t,
//
//   F_e(t) = 1,   F_{w i}(t) = \int_0^t F_w(s) (X^i)'(s) ds,
//
// and <sigma, w> = F_w(1). Segments are glued with Chen's identity, each one
// translated to start where the previous one ended.

#ifndef SIGPOLY_SIGNATURE_HPP_
#define SIGPOLY_SIGNATURE_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sigpoly/error.hpp"
#include "sigpoly/poly.hpp"
#include "sigpoly/polymap.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"

namespace sigpoly {

class PathSegment {
 public:
  explicit PathSegment(std::vector<Poly> components)
      : components_(std::move(components)) {
    if (components_.empty() || components_.size() > kMaxAlphabet) {
      throw DomainError("segment dimension must be in 1.." +
                        std::to_string(kMaxAlphabet));
    }
    for (const Poly& c : components_) {
      if (c.nvars() != 1) {
        throw DimensionMismatch("segment components must be univariate");
      }
    }
  }

  // Straight line from a to b.
  static PathSegment linear(std::span<const Rational> a,
                            std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("endpoint dimensions differ");
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < a.size(); ++i) {
      comps.push_back(Poly::univariate({a[i], b[i] - a[i]}));
    }
    return PathSegment(std::move(comps));
  }

  std::size_t dimension() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }

  std::vector<Rational> point_at(const Rational& t) const {
    std::vector<Rational> x;
    const Rational at[1] = {t};
    for (const Poly& c : components_) x.push_back(eval(c, at));
    return x;
  }
  std::vector<Rational> start() const { return point_at(Rational(0)); }
  std::vector<Rational> end() const { return point_at(Rational(1)); }

  // Same segment with every component reparameterized by t -> r(t).
  PathSegment reparameterized(const Poly& r) const {
    std::vector<Poly> comps;
    const Poly sub[1] = {r};
    for (const Poly& c : components_) comps.push_back(compose(c, sub));
    return PathSegment(std::move(comps));
  }

  // Traversed backwards: t -> 1 - t.
  PathSegment reversed() const {
    return reparameterized(Poly::univariate({Rational(1), Rational(-1)}));
  }

  // The piece over [a, b], rescaled to [0, 1].
  PathSegment restricted(const Rational& a, const Rational& b) const {
    return reparameterized(Poly::univariate({a, b - a}));
  }

  PathSegment translated(std::span<const Rational> offset) const {
    if (offset.size() != dimension()) {
      throw DimensionMismatch("translation has wrong dimension");
    }
    std::vector<Poly> comps = components_;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      comps[i] += Poly::constant(1, offset[i]);
    }
    return PathSegment(std::move(comps));
  }

  friend bool operator==(const PathSegment&, const PathSegment&) = default;

 private:
  std::vector<Poly> components_;
};

class PiecewisePolyPath {
 public:
  explicit PiecewisePolyPath(std::vector<PathSegment> segments)
      : segments_(std::move(segments)) {
    if (segments_.empty()) throw DomainError("a path needs at least one segment");
    for (const PathSegment& s : segments_) {
      if (s.dimension() != segments_.front().dimension()) {
        throw DimensionMismatch("path segments disagree on dimension");
      }
    }
  }

  std::size_t dimension() const { return segments_.front().dimension(); }
  const std::vector<PathSegment>& segments() const { return segments_; }

  std::vector<Rational> start_point() const { return segments_.front().start(); }

  // End point of the glued path: start plus the sum of segment increments.
  std::vector<Rational> end_point() const {
    std::vector<Rational> x = start_point();
    for (const PathSegment& s : segments_) {
      auto a = s.start();
      auto b = s.end();
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += b[i] - a[i];
    }
    return x;
  }

  // The glued path: every segment translated to start where the previous
  // one ends. Signatures are unchanged; point values are those of the
  // path the signature describes.
  PiecewisePolyPath continuous() const {
    std::vector<PathSegment> out;
    out.reserve(segments_.size());
    out.push_back(segments_.front());
    for (std::size_t k = 1; k < segments_.size(); ++k) {
      auto prev_end = out.back().end();
      auto start = segments_[k].start();
      for (std::size_t i = 0; i < start.size(); ++i) prev_end[i] -= start[i];
      out.push_back(segments_[k].translated(prev_end));
    }
    return PiecewisePolyPath(std::move(out));
  }

  // X ⊔ Y.
  PiecewisePolyPath concatenated(const PiecewisePolyPath& other) const {
    if (other.dimension() != dimension()) {
      throw DimensionMismatch("cannot concatenate paths of different dimension");
    }
    std::vector<PathSegment> out = segments_;
    out.insert(out.end(), other.segments_.begin(), other.segments_.end());
    return PiecewisePolyPath(std::move(out));
  }

  // The path run backwards.
  PiecewisePolyPath reversed() const {
    std::vector<PathSegment> out;
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
      out.push_back(it->reversed());
    }
    return PiecewisePolyPath(std::move(out));
  }

  friend bool operator==(const PiecewisePolyPath&,
                         const PiecewisePolyPath&) = default;

 private:
  std::vector<PathSegment> segments_;
};

// sigma(X) modulo words longer than level. The coefficient of e is 1.
class TruncatedSignature {
 public:
  TruncatedSignature(std::size_t level, TensorElem data)
      : level_(level), data_(std::move(data)) {
    if (data_.max_level() > level_) {
      throw DomainError("signature data exceeds its truncation level");
    }
    if (data_.coeff(Word()) != 1) {
      throw DomainError("signature must have coefficient 1 on the empty word");
    }
  }

  static TruncatedSignature trivial(std::size_t dim, std::size_t level) {
    return TruncatedSignature(level, TensorElem::unit(dim));
  }

  std::size_t dimension() const { return data_.dim(); }
  std::size_t level() const { return level_; }
  const TensorElem& data() const { return data_; }
  Rational coeff(const Word& w) const { return pairing(data_, w); }

  friend bool operator==(const TruncatedSignature&,
                         const TruncatedSignature&) = default;

 private:
  std::size_t level_;
  TensorElem data_;
};

namespace detail {

// Dense univariate polynomial, coefficient of t^k at index k.
using Dense = std::vector<Rational>;
using IntDense = std::vector<mpz_class>;

inline Dense to_dense(const Poly& p) {
  Dense out;
  for (const auto& [e, c] : p.terms()) {
    if (out.size() <= e[0]) out.resize(e[0] + 1);
    out[e[0]] = c;
  }
  return out;
}

inline Dense derivative(const Dense& p) {
  Dense out(p.size() > 1 ? p.size() - 1 : 0);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * k;
  while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
  return out;
}

// Iterated integrals of one segment, level by level. At level n every F_w
// is stored as an integer polynomial over the shared denominator of that
// level, which keeps the inner loops free of rational normalization.
class IteratedIntegrals {
 public:
  explicit IteratedIntegrals(const PathSegment& seg) : dim_(seg.dimension()) {
    std::vector<Dense> deriv;
    for (const Poly& c : seg.components()) deriv.push_back(derivative(to_dense(c)));
    for (const Dense& dp : deriv) {
      for (const Rational& c : dp) {
        mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), c.get_den().get_mpz_t());
      }
      max_deriv_degree_ = std::max(max_deriv_degree_, dp.size());
    }
    for (const Dense& dp : deriv) {
      IntDense g;
      for (const Rational& c : dp) g.push_back(c.get_num() * (scale_ / c.get_den()));
      deriv_.push_back(std::move(g));
    }
  }

  // Visits (word, numerator, denominator) for every word of length <= level
  // in graded lexicographic order.
  template <typename Visit>
  void for_each(std::size_t level, Visit&& visit) const {
    std::vector<Word> words{Word()};
    std::vector<IntDense> current{IntDense{mpz_class(1)}};
    mpz_class denom(1);
    visit(words[0], current[0], denom);
    std::size_t degree_bound = 0;
    for (std::size_t n = 1; n <= level; ++n) {
      degree_bound += max_deriv_degree_;
      // Integration divides t^k by k + 1 <= degree_bound.
      mpz_class e(1);
      for (unsigned long k = 2; k <= degree_bound; ++k) {
        mpz_lcm_ui(e.get_mpz_t(), e.get_mpz_t(), k);
      }
      denom *= scale_ * e;
      std::vector<Word> next_words;
      std::vector<IntDense> next;
      next_words.reserve(words.size() * dim_);
      next.reserve(words.size() * dim_);
      for (std::size_t idx = 0; idx < words.size(); ++idx) {
        for (std::size_t i = 0; i < dim_; ++i) {
          next_words.push_back(words[idx].appended(static_cast<Letter>(i + 1)));
          next.push_back(integrate_product(current[idx], deriv_[i], e));
          visit(next_words.back(), next.back(), denom);
        }
      }
      words = std::move(next_words);
      current = std::move(next);
    }
  }

 private:
  // e * \int_0^t f(s) g(s) ds, exact in integers because k + 1 divides e.
  static IntDense integrate_product(const IntDense& f, const IntDense& g,
                                    const mpz_class& e) {
    if (f.empty() || g.empty()) return {};
    IntDense prod(f.size() + g.size() - 1);
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (sgn(f[a]) == 0) continue;
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (sgn(g[b]) != 0) mpz_addmul(prod[a + b].get_mpz_t(), f[a].get_mpz_t(), g[b].get_mpz_t());
      }
    }
    IntDense out(prod.size() + 1);
    mpz_class factor;
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (sgn(prod[k]) == 0) continue;
      mpz_divexact_ui(factor.get_mpz_t(), e.get_mpz_t(), k + 1);
      out[k + 1] = prod[k] * factor;
    }
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return out;
  }

  std::size_t dim_;
  mpz_class scale_{1};
  std::size_t max_deriv_degree_ = 0;
  std::vector<IntDense> deriv_;
};

inline Rational value_at_one(const IntDense& num, const mpz_class& den) {
  mpz_class s(0);
  for (const mpz_class& c : num) s += c;
  Rational out(s, den);
  out.canonicalize();
  return out;
}

inline Dense to_rational(const IntDense& num, const mpz_class& den) {
  Dense out;
  out.reserve(num.size());
  for (const mpz_class& c : num) {
    Rational r(c, den);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline TruncatedSignature segment_signature(const PathSegment& seg,
                                            std::size_t level) {
  TensorElem data(seg.dimension());
  detail::IteratedIntegrals(seg).for_each(
      level, [&](const Word& w, const detail::IntDense& f, const mpz_class& den) {
        data.accumulate(w, detail::value_at_one(f, den));
      });
  return TruncatedSignature(level, std::move(data));
}

// F_w(t) = <sigma(X|[0,t]), w> as polynomials in t, for every word of
// length <= level (zero polynomials omitted).
inline std::map<Word, Poly> iterated_integral_polys(const PathSegment& seg,
                                                    std::size_t level) {
  std::map<Word, Poly> out;
  detail::IteratedIntegrals(seg).for_each(
      level, [&](const Word& w, const detail::IntDense& f, const mpz_class& den) {
        if (!f.empty()) out.emplace(w, Poly::univariate(detail::to_rational(f, den)));
      });
  return out;
}

// Chen's identity: sigma(X ⊔ Y) = sigma(X) • sigma(Y), truncated at the
// smaller of the two levels.
inline TruncatedSignature chen_concat(const TruncatedSignature& a,
                                      const TruncatedSignature& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("chen_concat: signatures of dimension " +
                            std::to_string(a.dimension()) + " and " +
                            std::to_string(b.dimension()));
  }
  const std::size_t level = std::min(a.level(), b.level());
  return TruncatedSignature(
      level, concat_truncated(a.data(), b.data(), level));
}

inline TruncatedSignature path_signature(const PiecewisePolyPath& path,
                                         std::size_t level) {
  TruncatedSignature sig = segment_signature(path.segments().front(), level);
  for (std::size_t k = 1; k < path.segments().size(); ++k) {
    sig = chen_concat(sig, segment_signature(path.segments()[k], level));
  }
  return sig;
}

// exp_•(a) = sum_n a^{•n} / n!, truncated at level. Requires <a, e> = 0.
inline TruncatedSignature exp_concat(const TensorElem& a, std::size_t level) {
  if (a.has_empty_word_component()) {
    throw DomainError("exp_concat requires a zero coefficient on e");
  }
  TensorElem sum = TensorElem::unit(a.dim());
  TensorElem term = TensorElem::unit(a.dim());
  // a has no e-component, so a^{•n} starts at word length n.
  for (std::size_t n = 1; n <= level; ++n) {
    term = concat_truncated(term, a, level);
    term *= Rational(1, n);
    if (term.is_zero()) break;
    sum += term;
  }
  return TruncatedSignature(level, std::move(sum));
}

// p(X) as a piecewise-polynomial path: p composed with each segment of the
// glued path.
inline PiecewisePolyPath image_path(const PolynomialMap& p,
                                    const PiecewisePolyPath& path) {
  if (p.domain_dim() != path.dimension()) {
    throw DimensionMismatch("map domain " + std::to_string(p.domain_dim()) +
                            " vs path dimension " +
                            std::to_string(path.dimension()));
  }
  const PiecewisePolyPath glued = path.continuous();
  std::vector<PathSegment> out;
  for (const PathSegment& seg : glued.segments()) {
    std::vector<Poly> comps;
    for (const Poly& pi : p.components()) {
      comps.push_back(compose(pi, seg.components()));
    }
    out.emplace_back(std::move(comps));
  }
  return PiecewisePolyPath(std::move(out));
}

// Input level needed by transform: deg(p~) * level.
inline std::size_t required_input_level(const PolynomialMap& shifted,
                                        std::size_t level) {
  return shifted.degree() * level;
}

// sigma(p(X)) from sigma(X): <out, w> = <sig, M_{p~}(w)> for |w| <= level,
// where p~(y) = p(y + x0) - p(x0) and x0 is the start point of X.
inline TruncatedSignature transform(const PolynomialMap& p,
                                    const TruncatedSignature& sig,
                                    std::size_t level,
                                    std::span<const Rational> x0) {
  if (sig.dimension() != p.domain_dim()) {
    throw DimensionMismatch("transform: signature of dimension " +
                            std::to_string(sig.dimension()) +
                            " but map domain is " +
                            std::to_string(p.domain_dim()));
  }
  const PolynomialMap shifted = shift_map(p, x0);
  const std::size_t needed = required_input_level(shifted, level);
  if (sig.level() < needed) throw TruncationShortfall(needed, sig.level());
  MpMap mp(shifted);
  TensorElem out(p.codomain_dim());
  for (const Word& w : words_up_to(p.codomain_dim(), level)) {
    out.accumulate(w, pairing(sig.data(), mp(w)));
  }
  return TruncatedSignature(level, std::move(out));
}

inline TruncatedSignature transform(const PolynomialMap& p,
                                    const TruncatedSignature& sig,
                                    std::size_t level,
                                    const std::vector<Rational>& x0) {
  return transform(p, sig, level, std::span<const Rational>(x0));
}

// Signature of a polynomial path X on [0, L], computed as
// M*_{X~}(exp_•(L 1)) with X~ = X - X(0). The classical statement asks
// for L >= 1; any L > 0 works since exp_•(L 1) is the signature of the
// linear path t on [0, L].
inline TruncatedSignature polynomial_path_signature_via_exp(
    const PolynomialMap& x, const Rational& length, std::size_t level) {
  if (x.domain_dim() != 1) {
    throw DimensionMismatch("a polynomial path has a one-dimensional domain");
  }
  if (sgn(length) <= 0) throw DomainError("path length must be positive");
  const std::vector<Rational> origin{Rational(0)};
  const PolynomialMap shifted = shift_map(x, origin);
  const auto linear = exp_concat(TensorElem::word(1, Word{1}, length),
                                 required_input_level(shifted, level));
  return transform(shifted, linear, level, origin);
}

// The same path as a segment on [0, 1]: t -> X(L t).
inline PathSegment polynomial_path_segment(const PolynomialMap& x,
                                           const Rational& length) {
  if (x.domain_dim() != 1) {
    throw DimensionMismatch("a polynomial path has a one-dimensional domain");
  }
  return PathSegment(x.components()).reparameterized(
      Poly::univariate({Rational(0), length}));
}

// Whether every p_i vanishes identically along the glued path.
inline bool lies_in_variety(const PolynomialMap& p,
                            const PiecewisePolyPath& path) {
  const PiecewisePolyPath image = image_path(p, path);
  for (const PathSegment& seg : image.segments()) {
    for (const Poly& c : seg.components()) {
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

// sigma = e up to the truncation level. This is only a necessary
// condition for tree-likeness: higher levels are not inspected.
inline bool check_tree_like(const TruncatedSignature& sig) {
  return sig.data() == TensorElem::unit(sig.dimension());
}

// Checks M_p*(sigma(X) • sigma(Y)) = M_p*(sigma(X)) • M_q*(sigma(Y)) at
// the given level, with q(y) = p(y + X_L - X_0) - p(X_L - X_0).
inline bool check_dual_concat(const PolynomialMap& p,
                              const PiecewisePolyPath& x,
                              const PiecewisePolyPath& y, std::size_t level) {
  if (x.dimension() != p.domain_dim() || y.dimension() != p.domain_dim()) {
    throw DimensionMismatch("check_dual_concat: path/map dimensions differ");
  }
  if (!p.vanishes_at_origin()) {
    throw NotVanishingAtOrigin("check_dual_concat requires p(0) = 0");
  }
  auto is_origin = [](const std::vector<Rational>& v) {
    for (const Rational& c : v) {
      if (sgn(c) != 0) return false;
    }
    return true;
  };
  if (!is_origin(x.start_point()) || !is_origin(y.start_point())) {
    throw DomainError("check_dual_concat requires both paths to start at 0");
  }
  const std::vector<Rational> origin(p.domain_dim());
  std::vector<Rational> displacement = x.end_point();
  const auto x0 = x.start_point();
  for (std::size_t i = 0; i < displacement.size(); ++i) displacement[i] -= x0[i];
  const PolynomialMap q = shift_map(p, displacement);

  const std::size_t input_level = required_input_level(p, level);
  const auto sig_x = path_signature(x, input_level);
  const auto sig_y = path_signature(y, input_level);
  const auto lhs = transform(p, chen_concat(sig_x, sig_y), level, origin);
  const auto rhs = chen_concat(transform(p, sig_x, level, origin),
                               transform(q, sig_y, level, origin));
  return lhs == rhs;
}

}  // namespace sigpoly

#endif  // SIGPOLY_SIGNATURE_HPP_
