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

// Seeded generators of small random instances, shared by the property
// tests and `sigpoly verify --seed`.

#ifndef SIGPOLY_RANDOM_HPP_
#define SIGPOLY_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sigpoly/poly.hpp"
#include "sigpoly/polymap.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/signature.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"

namespace sigpoly {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi]. Implemented directly on the engine output
  // so that a seed produces the same instances with every standard library.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool chance(unsigned percent) { return uniform(0, 99) < percent; }

  // Small rational with numerator in [-5, 5] and denominator in [1, 3].
  Rational rational() {
    Rational r(uniform(-5, 5), uniform(1, 3));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r;
    do {
      r = rational();
    } while (sgn(r) == 0);
    return r;
  }

  Word word(std::size_t dim, std::size_t length) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < length; ++i) {
      letters.push_back(static_cast<Letter>(uniform(1, static_cast<std::int64_t>(dim))));
    }
    return Word(std::move(letters));
  }

  // Random element with `terms` words of length in [min_len, max_len].
  TensorElem tensor(std::size_t dim, std::size_t terms, std::size_t min_len,
                    std::size_t max_len) {
    TensorElem t(dim);
    for (std::size_t k = 0; k < terms; ++k) {
      const auto len = static_cast<std::size_t>(
          uniform(static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
      t.accumulate(word(dim, len), nonzero_rational());
    }
    return t;
  }

  // Random polynomial of total degree <= max_degree; each monomial is kept
  // with the given probability.
  Poly poly(std::size_t nvars, std::size_t max_degree, bool constant_term = true,
            unsigned density = 50) {
    Poly p(nvars);
    for_each_exponent(nvars, max_degree, [&](const Exponents& e) {
      if (!constant_term && total_degree(e) == 0) return;
      if (chance(density)) p.add_term(e, rational());
    });
    return p;
  }

  PolynomialMap map(std::size_t d, std::size_t m, std::size_t max_degree,
                    bool vanishing = true) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < m; ++i) comps.push_back(poly(d, max_degree, !vanishing));
    return PolynomialMap(d, std::move(comps));
  }

  PathSegment segment(std::size_t d, std::size_t max_degree) {
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> c;
      for (std::size_t k = 0; k <= max_degree; ++k) c.push_back(rational());
      comps.push_back(Poly::univariate(c));
    }
    return PathSegment(std::move(comps));
  }

  PiecewisePolyPath path(std::size_t d, std::size_t segments,
                         std::size_t max_degree) {
    std::vector<PathSegment> segs;
    for (std::size_t k = 0; k < segments; ++k) segs.push_back(segment(d, max_degree));
    return PiecewisePolyPath(std::move(segs));
  }

  // Path starting at the origin (first segment translated).
  PiecewisePolyPath path_from_origin(std::size_t d, std::size_t segments,
                                     std::size_t max_degree) {
    auto segs = path(d, segments, max_degree).segments();
    auto start = segs.front().start();
    for (Rational& c : start) c = -c;
    segs.front() = segs.front().translated(start);
    return PiecewisePolyPath(std::move(segs));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  template <typename F>
  static void for_each_exponent(std::size_t nvars, std::size_t max_degree, F&& f) {
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, std::size_t budget) -> void {
      if (var == nvars) {
        f(e);
        return;
      }
      for (std::size_t k = 0; k <= budget; ++k) {
        e[var] = static_cast<std::uint32_t>(k);
        self(self, var + 1, budget - k);
      }
      e[var] = 0;
    };
    rec(rec, 0, max_degree);
  }

  std::mt19937_64 engine_;
};

}  // namespace sigpoly

#endif  // SIGPOLY_RANDOM_HPP_
