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

#include "sigpoly/polymap.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "sigpoly/random.hpp"
#include "test_util.hpp"

namespace sigpoly {
namespace {

using testing_util::c;
using testing_util::example_map;
using testing_util::Q;
using testing_util::T;
using testing_util::veronese_map;
using testing_util::W;
using testing_util::x;

TEST(PolynomialMapTest, Invariants) {
  const PolynomialMap p = example_map();
  EXPECT_EQ(p.domain_dim(), 2u);
  EXPECT_EQ(p.codomain_dim(), 3u);
  EXPECT_EQ(p.degree(), 3u);
  EXPECT_TRUE(p.vanishes_at_origin());
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE(veronese_map().is_homogeneous());
  EXPECT_FALSE(PolynomialMap(1, {x(1, 1) + c(1, 1)}).vanishes_at_origin());
  EXPECT_THROW(PolynomialMap(2, {x(3, 1)}), DimensionMismatch);
}

TEST(JacobianTest, ExampleMap) {
  const auto j = jacobian(example_map());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0][0], x(2, 1) * Rational(2));
  EXPECT_TRUE(j[0][1].is_zero());
  EXPECT_TRUE(j[1][0].is_zero());
  EXPECT_EQ(j[1][1], x(2, 2) * x(2, 2) * Rational(3));
  EXPECT_EQ(j[2][0], c(2, 1));
  EXPECT_EQ(j[2][1], c(2, -1));
}

TEST(JacobianTest, LinearMapIsConstant) {
  const std::vector<std::vector<Rational>> a{{1, 2, 0}, {Q("-1/3"), 0, 5}};
  const auto j = jacobian(PolynomialMap::linear(a));
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t col = 0; col < 3; ++col) {
      EXPECT_EQ(j[r][col], c(3, a[r][col]));
    }
  }
}

TEST(JacobianTest, VeroneseAgainstDifferenceQuotients) {
  const auto j = jacobian(veronese_map());
  EXPECT_EQ(j[0][0], x(2, 1) * Rational(2));
  EXPECT_TRUE(j[0][1].is_zero());
  EXPECT_EQ(j[1][0], x(2, 2));
  EXPECT_EQ(j[1][1], x(2, 1));
  EXPECT_TRUE(j[2][0].is_zero());
  EXPECT_EQ(j[2][1], x(2, 2) * Rational(2));
  // For a quadratic q, (q(a + h e_j) - q(a - h e_j)) / 2h = d_j q(a) exactly.
  RandomSource rng(31);
  const PolynomialMap p = veronese_map();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> a{rng.rational(), rng.rational()};
    const Rational h = rng.nonzero_rational();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t jj = 0; jj < 2; ++jj) {
        auto plus = a;
        auto minus = a;
        plus[jj] += h;
        minus[jj] -= h;
        const Rational quotient = (eval(p[i], plus) - eval(p[i], minus)) / (2 * h);
        EXPECT_EQ(eval(j[i][jj], a), quotient);
      }
    }
  }
}

TEST(KMatrixTest, Examples) {
  const KMatrix k = k_matrix(example_map());
  EXPECT_EQ(k(0, 0), T("2*1", 2));
  EXPECT_TRUE(k(0, 1).is_zero());
  EXPECT_TRUE(k(1, 0).is_zero());
  EXPECT_EQ(k(1, 1), T("6*22", 2));
  EXPECT_EQ(k(2, 0), T("e", 2));
  EXPECT_EQ(k(2, 1), T("-e", 2));

  const KMatrix id = k_matrix(PolynomialMap::identity(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(id(i, j), i == j ? TensorElem::unit(3) : TensorElem(3));
    }
  }

  const KMatrix v = k_matrix(veronese_map());
  EXPECT_EQ(v(0, 0), T("2*1", 2));
  EXPECT_TRUE(v(0, 1).is_zero());
  EXPECT_EQ(v(1, 0), T("2", 2));
  EXPECT_EQ(v(1, 1), T("1", 2));
  EXPECT_TRUE(v(2, 0).is_zero());
  EXPECT_EQ(v(2, 1), T("2*2", 2));
}

TEST(KMatrixTest, EntryLengthBound) {
  RandomSource rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const PolynomialMap p = rng.map(rng.uniform(1, 3), rng.uniform(1, 3), 3);
    const KMatrix k = k_matrix(p);
    for (const auto& row : k.entries) {
      for (const TensorElem& e : row) {
        if (!e.is_zero()) {
          EXPECT_LE(e.max_level() + 1, p.degree());
        }
      }
    }
  }
}

TEST(MpTest, ExampleMap) {
  MpMap mp(example_map());
  EXPECT_EQ(mp(Word()), TensorElem::unit(2));
  EXPECT_EQ(mp(W("1")), T("2*11", 2));
  EXPECT_EQ(mp(W("2")), T("6*222", 2));
  EXPECT_EQ(mp(W("3")), T("1 - 2", 2));
  EXPECT_EQ(mp(W("33")), T("11 + 22 - 12 - 21", 2));
  EXPECT_THROW(mp(W("4")), DomainError);
  EXPECT_THROW(mp(T("1", 2)), DimensionMismatch);
}

TEST(MpTest, RefusesNonVanishingMap) {
  const PolynomialMap p(1, {x(1, 1) + c(1, 1)});
  EXPECT_THROW(MpMap{p}, NotVanishingAtOrigin);
  EXPECT_THROW(m_p(p, W("1")), NotVanishingAtOrigin);
}

TEST(MpTest, VeroneseClosedForms) {
  MpMap mp(veronese_map());
  for (unsigned k = 1; k <= 4; ++k) {
    const Word ones(std::vector<Letter>(k, 1));
    const Word twos(std::vector<Letter>(k, 2));
    const Word threes(std::vector<Letter>(k, 3));
    const Rational ratio = factorial(2 * k) / factorial(k);
    EXPECT_EQ(mp(ones), TensorElem::word(2, ones * ones, ratio));
    EXPECT_EQ(mp(twos), factorial(k) * shuffle(ones, twos, 2));
    EXPECT_EQ(mp(threes), TensorElem::word(2, twos * twos, ratio));
  }
}

TEST(MpTest, IdentityMapIsIdentity) {
  MpMap mp(PolynomialMap::identity(3));
  for (const Word& w : words_up_to(3, 3)) {
    EXPECT_EQ(mp(w), TensorElem::word(3, w));
  }
}

// Properties of M_p on random instances.
class MpPropertyTest : public ::testing::Test {
 protected:
  RandomSource rng_{41};
};

TEST_F(MpPropertyTest, ShuffleHomomorphism) {
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = rng_.uniform(1, 3);
    const std::size_t m = rng_.uniform(1, 3);
    MpMap mp(rng_.map(d, m, 2));
    const Word u = rng_.word(m, rng_.uniform(0, 3));
    const Word v = rng_.word(m, rng_.uniform(0, 3));
    EXPECT_EQ(mp(shuffle(u, v, m)), shuffle(mp(u), mp(v)));
  }
}

TEST_F(MpPropertyTest, EmbeddingCompatibility) {
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = rng_.uniform(1, 3);
    const std::size_t m = rng_.uniform(1, 3);
    const PolynomialMap p = rng_.map(d, m, 2);
    const Poly q = rng_.poly(m, 2, false);
    MpMap mp(p);
    EXPECT_EQ(mp(phi(q)), phi(compose(q, p.components())));
  }
}

TEST_F(MpPropertyTest, MonomialBasisUniqueness) {
  // M_p o phi_m = phi_d o (- o p) on every monomial of degree <= 3.
  const PolynomialMap p = rng_.map(2, 2, 2);
  MpMap mp(p);
  for (std::uint32_t a = 0; a <= 3; ++a) {
    for (std::uint32_t b = 0; a + b <= 3; ++b) {
      const Poly mono = Poly::monomial({a, b});
      EXPECT_EQ(mp(phi(mono)), phi(compose(mono, p.components())));
    }
  }
}

TEST_F(MpPropertyTest, ChainRuleForK) {
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = rng_.uniform(1, 2);
    const std::size_t m = rng_.uniform(1, 2);
    const std::size_t s = rng_.uniform(1, 2);
    const PolynomialMap p = rng_.map(d, m, 2);
    const PolynomialMap q = rng_.map(m, s, 2);
    const KMatrix kq = k_matrix(q);
    const KMatrix kp = k_matrix(p);
    const KMatrix kqp = k_matrix(compose_maps(q, p));
    MpMap mp(p);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        TensorElem rhs(d);
        for (std::size_t l = 0; l < m; ++l) rhs += shuffle(mp(kq(i, l)), kp(l, j));
        EXPECT_EQ(kqp(i, j), rhs);
      }
    }
  }
}

TEST_F(MpPropertyTest, Functoriality) {
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t d = rng_.uniform(1, 2);
    const std::size_t m = rng_.uniform(1, 2);
    const std::size_t s = rng_.uniform(1, 3);
    const PolynomialMap p = rng_.map(d, m, 2);
    const PolynomialMap q = rng_.map(m, s, 2);
    MpMap mp(p);
    MpMap mq(q);
    MpMap mqp(compose_maps(q, p));
    const Word w = rng_.word(s, rng_.uniform(0, 3));
    EXPECT_EQ(mqp(w), mp(mq(w)));
  }
}

TEST_F(MpPropertyTest, DegreeBoundsAndHomogeneousGrading) {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = rng_.uniform(1, 3);
    const std::size_t m = rng_.uniform(1, 3);
    const PolynomialMap p = rng_.map(d, m, 3);
    MpMap mp(p);
    const Word w = rng_.word(m, rng_.uniform(0, 3));
    EXPECT_LE(mp(w).max_level(), p.degree() * w.size());
  }
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = rng_.uniform(1, 3);
    const std::size_t n = rng_.uniform(1, 3);
    std::vector<Poly> comps;
    for (int i = 0; i < 2; ++i) {
      Poly full = rng_.poly(d, n, false, 70);
      Poly top(d);
      for (const auto& [e, coeff] : full.terms()) {
        if (total_degree(e) == n) top.add_term(e, coeff);
      }
      comps.push_back(top);
    }
    const PolynomialMap p(d, comps);
    ASSERT_TRUE(p.is_homogeneous());
    MpMap mp(p);
    const Word w = rng_.word(2, rng_.uniform(1, 3));
    for (const auto& [v, coeff] : mp(w).terms()) EXPECT_EQ(v.size(), n * w.size());
  }
}

TEST_F(MpPropertyTest, HalfShuffleRecursion) {
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = rng_.uniform(1, 3);
    const std::size_t m = rng_.uniform(1, 3);
    MpMap mp(rng_.map(d, m, 2));
    const Word w = rng_.word(m, rng_.uniform(1, 2));
    const Word i = rng_.word(m, 1);
    if (mp(w).is_zero() || mp(i).is_zero()) {
      EXPECT_TRUE(mp(w * i).is_zero());
      continue;
    }
    EXPECT_EQ(mp(w * i), half_shuffle(mp(w), mp(i)));
  }
}

TEST(ShiftMapTest, Examples) {
  const PolynomialMap p(2, {x(2, 1) * x(2, 2) + c(2, 4), x(2, 2) - c(2, 1)});
  const PolynomialMap at_zero = shift_map(p, std::vector<Rational>{0, 0});
  EXPECT_EQ(at_zero, PolynomialMap(2, {x(2, 1) * x(2, 2), x(2, 2)}));

  const PolynomialMap sq(1, {x(1, 1) * x(1, 1)});
  EXPECT_EQ(shift_map(sq, std::vector<Rational>{1}),
            PolynomialMap(1, {x(1, 1) * x(1, 1) + x(1, 1) * Rational(2)}));

  RandomSource rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const PolynomialMap r = rng.map(2, 2, 3, false);
    std::vector<Rational> x0{rng.rational(), rng.rational()};
    const PolynomialMap shifted = shift_map(r, x0);
    EXPECT_TRUE(shifted.vanishes_at_origin());
    // p~(y) = p(y + x0) - p(x0) at a random y.
    std::vector<Rational> y{rng.rational(), rng.rational()};
    std::vector<Rational> y_plus{y[0] + x0[0], y[1] + x0[1]};
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_EQ(eval(shifted[i], y), eval(r[i], y_plus) - eval(r[i], x0));
    }
  }
  EXPECT_THROW(shift_map(sq, std::vector<Rational>{1, 2}), DimensionMismatch);
}

TEST(ComposeMapsTest, Examples) {
  const PolynomialMap p = example_map();
  EXPECT_EQ(compose_maps(PolynomialMap::identity(3), p), p);
  EXPECT_EQ(compose_maps(p, PolynomialMap::identity(2)), p);
  const PolynomialMap q(2, {x(2, 1) * x(2, 2)});
  const PolynomialMap sq(2, {x(2, 1) * x(2, 1), x(2, 2) * x(2, 2)});
  EXPECT_EQ(compose_maps(q, sq),
            PolynomialMap(2, {x(2, 1) * x(2, 1) * x(2, 2) * x(2, 2)}));
  EXPECT_THROW(compose_maps(p, p), DimensionMismatch);
}

TEST(LevelMatrixTest, VeroneseLevelOne) {
  const LevelMatrix lm = level_matrix(veronese_map(), 1);
  ASSERT_EQ(lm.rows.size(), 3u);
  ASSERT_EQ(lm.col_words.size(), 4u);
  const std::vector<std::vector<Rational>> expected{
      {2, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}};
  EXPECT_EQ(lm.rows, expected);
  EXPECT_EQ(lm.col_words[1], W("12"));
}

TEST(LevelMatrixTest, VeroneseLevelTwo) {
  // Rows 11, 12, ..., 33; columns 1111, 1112, ..., 2222.
  const std::vector<std::vector<int>> expected{
      {12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 6, 2, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 4, 0, 4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0},
      {0, 0, 4, 0, 4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 2, 0, 2, 2, 0, 0, 2, 2, 0, 2, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 4, 0, 4, 0, 0},
      {0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 4, 0, 4, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 2, 6, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12}};
  const LevelMatrix lm = level_matrix(veronese_map(), 2);
  ASSERT_EQ(lm.rows.size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    ASSERT_EQ(lm.rows[r].size(), 16u);
    for (std::size_t col = 0; col < 16; ++col) {
      EXPECT_EQ(lm.rows[r][col], expected[r][col]) << "row " << r << " col " << col;
    }
  }
}

TEST(LevelMatrixTest, LevelZeroAndErrors) {
  const LevelMatrix lm = level_matrix(veronese_map(), 0);
  ASSERT_EQ(lm.rows.size(), 1u);
  EXPECT_EQ(lm.rows[0], std::vector<Rational>{1});
  EXPECT_THROW(level_matrix(example_map(), 1), NonHomogeneousMap);
  EXPECT_THROW(level_matrix(PolynomialMap(1, {x(1, 1) + c(1, 1)}), 1),
               NotVanishingAtOrigin);
}

TEST(LevelMatrixTest, PermutationMapPermutesWords) {
  // p_i = x_{sigma(i)}; M_p(w) = sigma(w) letterwise, checked by brute force.
  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = (i + 1) % d;
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) a[i][perm[i]] = 1;
    const PolynomialMap p = PolynomialMap::linear(a);
    for (std::size_t k = 0; k <= 2; ++k) {
      const LevelMatrix lm = level_matrix(p, k);
      for (std::size_t r = 0; r < lm.row_words.size(); ++r) {
        std::vector<Letter> image;
        for (Letter l : lm.row_words[r]) image.push_back(static_cast<Letter>(perm[l - 1] + 1));
        for (std::size_t col = 0; col < lm.col_words.size(); ++col) {
          EXPECT_EQ(lm.rows[r][col], lm.col_words[col] == Word(image) ? 1 : 0);
        }
      }
    }
  }
}

TEST(LevelMatrixTest, IdentityLevelTwo) {
  const LevelMatrix lm = level_matrix(PolynomialMap::identity(2), 2);
  ASSERT_EQ(lm.rows.size(), 4u);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t col = 0; col < 4; ++col) EXPECT_EQ(lm.rows[r][col], r == col ? 1 : 0);
  }
}

}  // namespace
}  // namespace sigpoly
