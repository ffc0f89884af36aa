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

// (T^{>=1}(R^d), ≻) is the free Zinbiel algebra: a linear map B on letters
// extends uniquely to a half-shuffle homomorphism
//
//   Lambda_B(i) = B i,   Lambda_B(v i) = Lambda_B(v) ≻ Lambda_B(i).
//
// For the path Y^i_t = <sigma(X|[0,t]), B i> one has
// <sigma(Y), w> = <sigma(X), Lambda_B(w)>.

#ifndef SIGPOLY_ZINBIEL_HPP_
#define SIGPOLY_ZINBIEL_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigpoly/error.hpp"
#include "sigpoly/poly.hpp"
#include "sigpoly/polymap.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/signature.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"

namespace sigpoly {

// B: R^m -> T^{>=1}(R^d), given by the images of the m letters.
class LetterMap {
 public:
  LetterMap(std::size_t target_dim, std::vector<TensorElem> images)
      : target_dim_(target_dim), images_(std::move(images)) {
    if (images_.empty() || images_.size() > kMaxAlphabet) {
      throw DomainError("letter map source dimension must be in 1.." +
                        std::to_string(kMaxAlphabet));
    }
    for (const TensorElem& b : images_) {
      if (b.dim() != target_dim_) {
        throw DimensionMismatch("letter image over alphabet " +
                                std::to_string(b.dim()) + ", expected " +
                                std::to_string(target_dim_));
      }
      if (b.has_empty_word_component()) {
        throw DomainError("letter images must lie in T^{>=1}");
      }
    }
  }

  // The canonical embedding i -> i.
  static LetterMap canonical(std::size_t d) {
    std::vector<TensorElem> images;
    for (std::size_t i = 1; i <= d; ++i) {
      images.push_back(TensorElem::word(d, Word::letter(i)));
    }
    return LetterMap(d, std::move(images));
  }

  std::size_t source_dim() const { return images_.size(); }
  std::size_t target_dim() const { return target_dim_; }
  const std::vector<TensorElem>& images() const { return images_; }
  const TensorElem& operator[](std::size_t i) const { return images_[i]; }

  // Longest word among the images.
  std::size_t max_image_level() const {
    std::size_t n = 0;
    for (const TensorElem& b : images_) n = std::max(n, b.max_level());
    return n;
  }

  friend bool operator==(const LetterMap&, const LetterMap&) = default;

 private:
  std::size_t target_dim_;
  std::vector<TensorElem> images_;
};

// Lambda_B with its values cached per word.
class LambdaMap {
 public:
  explicit LambdaMap(LetterMap b) : b_(std::move(b)) {}

  const LetterMap& letter_map() const { return b_; }

  const TensorElem& operator()(const Word& w) {
    if (w.empty()) throw DomainError("Lambda_B is defined on nonempty words only");
    check_word(w, b_.source_dim());
    return eval_word(w);
  }

  TensorElem operator()(const TensorElem& a) {
    if (a.dim() != b_.source_dim()) {
      throw DimensionMismatch("Lambda_B: input over alphabet " +
                              std::to_string(a.dim()) + ", expected " +
                              std::to_string(b_.source_dim()));
    }
    if (a.has_empty_word_component()) {
      throw DomainError("Lambda_B is defined on T^{>=1} only");
    }
    TensorElem out(b_.target_dim());
    for (const auto& [w, c] : a.terms()) out += c * eval_word(w);
    return out;
  }

 private:
  const TensorElem& eval_word(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    const TensorElem& last = b_[w.back() - 1];
    TensorElem out = w.size() == 1 ? last
                                   : half_shuffle(eval_word(w.prefix()), last);
    return cache_.emplace(w, std::move(out)).first->second;
  }

  LetterMap b_;
  std::unordered_map<Word, TensorElem, WordHash> cache_;
};

inline TensorElem lambda_b(const LetterMap& b, const TensorElem& a) {
  LambdaMap lambda(b);
  return lambda(a);
}

// B i = phi(p_i); Lambda_B then agrees with M_p on T^{>=1}.
inline LetterMap m_p_as_lambda(const PolynomialMap& p) {
  if (!p.vanishes_at_origin()) {
    throw NotVanishingAtOrigin("m_p_as_lambda requires p(0) = 0");
  }
  std::vector<TensorElem> images;
  for (const Poly& pi : p.components()) images.push_back(phi(pi));
  return LetterMap(p.domain_dim(), std::move(images));
}

// Y^i_t = <sigma(X|[0,t]), B i> as an exact piecewise-polynomial path, one
// segment per segment of X. On segment k,
//   <sigma(X|[0,t]), z> = sum_{z = u v} <sigma(X up to segment k), u> F_v(t).
inline PiecewisePolyPath signature_defined_path(const LetterMap& b,
                                                const PiecewisePolyPath& x) {
  if (x.dimension() != b.target_dim()) {
    throw DimensionMismatch("letter map targets alphabet " +
                            std::to_string(b.target_dim()) +
                            ", path has dimension " +
                            std::to_string(x.dimension()));
  }
  const std::size_t level = b.max_image_level();
  TruncatedSignature prefix = TruncatedSignature::trivial(x.dimension(), level);
  std::vector<PathSegment> out;
  for (const PathSegment& seg : x.segments()) {
    const auto f = iterated_integral_polys(seg, level);
    std::vector<Poly> comps;
    for (const TensorElem& bi : b.images()) {
      Poly yi(1);
      for (const auto& [z, c] : bi.terms()) {
        for (std::size_t cut = 0; cut <= z.size(); ++cut) {
          const Rational head = prefix.coeff(z.prefix(cut));
          if (sgn(head) == 0) continue;
          auto it = f.find(z.suffix_from(cut));
          if (it == f.end()) continue;
          yi += it->second * (c * head);
        }
      }
      comps.push_back(std::move(yi));
    }
    out.emplace_back(std::move(comps));
    prefix = chen_concat(prefix, segment_signature(seg, level));
  }
  return PiecewisePolyPath(std::move(out));
}

struct TransportResult {
  TensorElem lambda_image;  // Lambda_B(w)
  Rational via_lambda;      // <sigma(X), Lambda_B(w)>
  Rational direct;          // <sigma(Y), w>
};

// Evaluates <sigma(Y), w> both through Lambda_B and by integrating Y
// directly. `level` is the truncation level available for sigma(X); it must
// cover the longest word of Lambda_B(w).
inline TransportResult signature_defined_path_transport(
    const LetterMap& b, const PiecewisePolyPath& x, const TensorElem& w,
    std::size_t level) {
  if (w.max_level() > level) {
    throw DomainError("word length " + std::to_string(w.max_level()) +
                      " exceeds level " + std::to_string(level));
  }
  LambdaMap lambda(b);
  TensorElem image = lambda(w);
  const std::size_t needed = image.max_level();
  if (needed > level) throw TruncationShortfall(needed, level);
  if (x.dimension() != b.target_dim()) {
    throw DimensionMismatch("path dimension does not match letter map target");
  }
  Rational via = pairing(path_signature(x, needed).data(), image);
  const auto y = signature_defined_path(b, x);
  Rational direct = pairing(path_signature(y, w.max_level()).data(), w);
  return TransportResult{std::move(image), std::move(via), std::move(direct)};
}

inline TransportResult signature_defined_path_transport(
    const LetterMap& b, const PiecewisePolyPath& x, const Word& w,
    std::size_t level) {
  return signature_defined_path_transport(
      b, x, TensorElem::word(b.source_dim(), w), level);
}

}  // namespace sigpoly

#endif  // SIGPOLY_ZINBIEL_HPP_
