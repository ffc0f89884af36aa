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

#include "sigpoly/poly.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "sigpoly/random.hpp"
#include "test_util.hpp"

namespace sigpoly {
namespace {

using testing_util::c;
using testing_util::from_letters;
using testing_util::Q;
using testing_util::T;
using testing_util::x;

TEST(PolyTest, RingOperations) {
  const Poly px = x(2, 1);
  const Poly py = x(2, 2);
  const Poly xy = px * py;
  ASSERT_EQ(xy.terms().size(), 1u);
  EXPECT_EQ(xy.coeff({1, 1}), 1);
  EXPECT_EQ((px - py) * (px + py), px * px - py * py);
  EXPECT_EQ(py * py * Rational(3) + Poly(2), py * py * Rational(3));
  EXPECT_THROW(px + x(3, 1), DimensionMismatch);
  EXPECT_THROW(px * x(1, 1), DimensionMismatch);
}

TEST(PolyTest, DegreeConventions) {
  EXPECT_FALSE(Poly(2).degree().has_value());
  EXPECT_EQ(c(2, 5).degree(), 0u);
  EXPECT_EQ((x(2, 1) * x(2, 2) + x(2, 1)).degree(), 2u);
  EXPECT_TRUE((x(2, 1) * x(2, 2) + x(2, 2) * x(2, 2)).is_homogeneous());
  EXPECT_FALSE((x(2, 1) * x(2, 2) + x(2, 2)).is_homogeneous());
}

TEST(PolyTest, MonomialOrderIsGradedLex) {
  const Poly p = x(2, 2) * x(2, 2) + x(2, 1) * x(2, 2) + x(2, 1) * x(2, 1) + x(2, 2) + c(2, 1);
  std::vector<Exponents> order;
  for (const auto& [e, coeff] : p.terms()) order.push_back(e);
  const std::vector<Exponents> expected{{0, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(order, expected);
}

TEST(PartialTest, Examples) {
  EXPECT_EQ(partial(x(2, 1) * x(2, 1), 1), x(2, 1) * Rational(2));
  EXPECT_EQ(partial(pow(x(2, 2), 3), 2), x(2, 2) * x(2, 2) * Rational(3));
  EXPECT_TRUE(partial(x(2, 1), 2).is_zero());
  EXPECT_THROW(partial(x(2, 1), 3), DomainError);
  EXPECT_THROW(partial(x(2, 1), 0), DomainError);
}

TEST(ComposeTest, Examples) {
  const Poly q = x(1, 1) * x(1, 1);
  const Poly diff = x(2, 1) - x(2, 2);
  EXPECT_EQ(compose(q, std::vector<Poly>{diff}),
            x(2, 1) * x(2, 1) - x(2, 1) * x(2, 2) * Rational(2) + x(2, 2) * x(2, 2));
  const Poly p1 = x(3, 1) * x(3, 3) + c(3, 2);
  EXPECT_EQ(compose(x(1, 1), std::vector<Poly>{p1}), p1);
  EXPECT_THROW(compose(x(2, 1), std::vector<Poly>{p1}), DimensionMismatch);
  EXPECT_THROW(compose(x(2, 1), std::vector<Poly>{p1, x(2, 1)}), DimensionMismatch);
}

TEST(ComposeTest, ChainRule) {
  RandomSource rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = rng.uniform(1, 3);
    const std::size_t d = rng.uniform(1, 3);
    const Poly q = rng.poly(m, 3);
    std::vector<Poly> p;
    for (std::size_t l = 0; l < m; ++l) p.push_back(rng.poly(d, 3));
    for (std::size_t j = 1; j <= d; ++j) {
      Poly rhs(d);
      for (std::size_t l = 1; l <= m; ++l) {
        rhs += compose(partial(q, l), p) * partial(p[l - 1], j);
      }
      EXPECT_EQ(partial(compose(q, p), j), rhs);
    }
  }
}

TEST(ComposeTest, Associativity) {
  RandomSource rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t s = rng.uniform(1, 2);
    const std::size_t m = rng.uniform(1, 2);
    const std::size_t d = rng.uniform(1, 3);
    const Poly r = rng.poly(s, 2);
    std::vector<Poly> q;
    for (std::size_t i = 0; i < s; ++i) q.push_back(rng.poly(m, 2));
    std::vector<Poly> p;
    for (std::size_t i = 0; i < m; ++i) p.push_back(rng.poly(d, 2));
    std::vector<Poly> qp;
    for (const Poly& qi : q) qp.push_back(compose(qi, p));
    EXPECT_EQ(compose(compose(r, q), p), compose(r, qp));
  }
}

TEST(EvalTest, Examples) {
  EXPECT_EQ(eval(x(1, 1) * x(1, 1), std::vector<Rational>{Q("1/2")}), Q("1/4"));
  EXPECT_EQ(eval(x(2, 2) * x(2, 2) * Rational(3), std::vector<Rational>{Q("7"), Q("1")}), 3);
  EXPECT_EQ(eval(Poly(3), std::vector<Rational>{1, 2, 3}), 0);
  EXPECT_THROW(eval(x(2, 1), std::vector<Rational>{1}), DimensionMismatch);
}

TEST(EvalTest, ComposeCommutesWithEvaluation) {
  RandomSource rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly q = rng.poly(2, 3);
    std::vector<Poly> p{rng.poly(3, 2), rng.poly(3, 2)};
    std::vector<Rational> pt{rng.rational(), rng.rational(), rng.rational()};
    std::vector<Rational> inner{eval(p[0], pt), eval(p[1], pt)};
    EXPECT_EQ(eval(compose(q, p), pt), eval(q, inner));
  }
}

TEST(PhiTest, Examples) {
  EXPECT_EQ(phi(x(2, 1) * x(2, 2)), T("12 + 21", 2));
  EXPECT_EQ(phi(x(2, 2) * x(2, 2) * Rational(3)), T("6*22", 2));
  EXPECT_EQ(phi(c(2, 1)), TensorElem::unit(2));
  EXPECT_EQ(phi(c(2, Q("-5/2"))), T("-5/2*e", 2));
  EXPECT_TRUE(phi(Poly(2)).is_zero());
}

TEST(PhiTest, MonomialsMatchMultisetPermutations) {
  for (unsigned a = 0; a <= 3; ++a) {
    for (unsigned b = 0; b <= 3; ++b) {
      for (unsigned cexp = 0; cexp <= 2; ++cexp) {
        TensorElem expected(3);
        for (const auto& [w, coeff] : oracle::phi_monomial({a, b, cexp})) {
          expected.add_term(from_letters(w), coeff);
        }
        EXPECT_EQ(phi(Poly::monomial({a, b, cexp})), expected);
      }
    }
  }
}

TEST(PhiTest, AlgebraHomomorphismAndInjectivity) {
  RandomSource rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = rng.uniform(1, 3);
    const Poly a = rng.poly(d, 3);
    const Poly b = rng.poly(d, 3);
    EXPECT_EQ(phi(a * b), shuffle(phi(a), phi(b)));
    EXPECT_EQ(phi(a).is_zero(), a.is_zero());
    EXPECT_EQ(phi(a - b).is_zero(), a == b);
    if (!a.is_zero()) {
      EXPECT_EQ(phi(a).max_level(), *a.degree());
    }
  }
}

}  // namespace
}  // namespace sigpoly
