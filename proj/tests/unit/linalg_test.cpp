// Copyright 2026 The lars Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "lars/linalg.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

QMatrix q(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  QMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

TEST(Linalg, RankNullspaceInverse) {
  const QMatrix m = q({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  const auto ker = nullspace(m);
  ASSERT_EQ(ker.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s;
    for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * ker[0][j];
    EXPECT_TRUE(s.is_zero());
  }
  EXPECT_FALSE(inverse(m).has_value());
  const QMatrix a = q({{2, 1}, {1, 1}});
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, QMatrix::identity(2));
  EXPECT_EQ(determinant(a), Rational(1));
  EXPECT_EQ(determinant(q({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})), Rational(4));
}

TEST(Linalg, RandomInverseRoundTrip) {
  for (int k = 0; k < 30; ++k) {
    QMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = testing::random_rational(5);
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), !determinant(m).is_zero());
    if (inv) EXPECT_EQ(*inv * m, QMatrix::identity(4));
  }
}

TEST(Linalg, PsdWitness) {
  const auto bad = psd_check(q({{1, 2}, {2, 1}}));
  EXPECT_FALSE(bad.psd);
  EXPECT_EQ(bad.witness_determinant, Rational(-3));
  const auto good = psd_check(q({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  EXPECT_TRUE(good.psd);
  EXPECT_EQ(good.kernel_dimension, 0u);
  const auto affine = psd_check(q({{2, -2}, {-2, 2}}));
  EXPECT_TRUE(affine.psd);
  EXPECT_EQ(affine.kernel_dimension, 1u);
  const auto hollow = psd_check(q({{0, 1}, {1, 0}}));
  EXPECT_FALSE(hollow.psd);
  EXPECT_EQ(hollow.witness_determinant, Rational(-1));
  EXPECT_THROW(psd_check(q({{1, 2}, {0, 1}})), AlgebraError);
}

TEST(Linalg, HermitianPsd) {
  CMatrix h(2, 2);
  h(0, 0) = Gaussian(2);
  h(0, 1) = Gaussian(0, 1);
  h(1, 0) = Gaussian(0, -1);
  h(1, 1) = Gaussian(1);
  EXPECT_TRUE(psd_check(h).psd);
  h(1, 1) = Gaussian(0);
  const auto rep = psd_check(h);
  EXPECT_FALSE(rep.psd);
  EXPECT_LT(rep.witness_determinant, Rational(0));
}

TEST(Linalg, LpFeasibleAndFarkas) {
  // x1 + x2 = 1, x1 - x2 = 0 -> x = (1/2, 1/2)
  const QMatrix a = q({{1, 1}, {1, -1}});
  const std::vector<Rational> b{Rational(1), Rational(0)};
  const auto ok = lp_feasible(a, b);
  ASSERT_TRUE(ok.feasible);
  EXPECT_EQ(ok.solution[0], Rational(1, 2));
  EXPECT_EQ(ok.solution[1], Rational(1, 2));
  // x1 + x2 = -1 has no nonnegative solution.
  const QMatrix c = q({{1, 1}});
  const std::vector<Rational> d{Rational(-1)};
  const auto no = lp_feasible(c, d);
  ASSERT_FALSE(no.feasible);
  Rational yb;
  for (std::size_t i = 0; i < d.size(); ++i) yb += no.farkas[i] * d[i];
  EXPECT_LT(yb, Rational(0));
  for (std::size_t j = 0; j < 2; ++j) {
    Rational s;
    for (std::size_t i = 0; i < 1; ++i) s += no.farkas[i] * c(i, j);
    EXPECT_GE(s, Rational(0));
  }
}

TEST(Linalg, IntegerLatticeAxis) {
  IntegerLattice lat(3);
  const std::vector<Rational> u{Rational(1), Rational(0), Rational(3)};
  const std::vector<Rational> v{Rational(1), Rational(0), Rational(5)};
  const std::vector<Rational> w{Rational(0), Rational(2), Rational(1)};
  lat.insert(u);
  lat.insert(w);
  EXPECT_FALSE(lat.last_axis_generator().has_value());
  lat.insert(v);
  ASSERT_TRUE(lat.last_axis_generator().has_value());
  EXPECT_EQ(*lat.last_axis_generator(), 2);
}

}  // namespace
}  // namespace lars
