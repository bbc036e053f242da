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

#include "lars/exact.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

using testing::random_gaussian;
using testing::random_laurent;
using testing::random_rational;

Laurent t(std::int64_t q) { return Laurent::monomial(q); }

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(Rational::parse("-3/7").to_string(), "-3/7");
  EXPECT_EQ(Rational::parse("10/2").to_string(), "5");
  EXPECT_THROW(Rational::parse("1/0"), AlgebraError);
  EXPECT_THROW(Rational::parse("x"), AlgebraError);
  EXPECT_THROW(Rational(1) / Rational(0), AlgebraError);
}

TEST(Rational, StaysReducedUnderArithmetic) {
  for (int i = 0; i < 300; ++i) {
    const Rational x = random_rational(), y = random_rational();
    for (const Rational& r : {x + y, x - y, x * y}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(r.denominator(), 0);
    }
  }
}

TEST(Gaussian, Conjugation) {
  EXPECT_EQ(gaussian_conj(Gaussian(3, 2)), Gaussian(3, -2));
  const Gaussian x(Rational(1, 7), Rational(-5));
  EXPECT_EQ(gaussian_conj(gaussian_conj(x)), x);
  const Gaussian p = Gaussian(1, 1) * Gaussian(2, -1);
  EXPECT_EQ(p, Gaussian(3, 1));
  EXPECT_EQ(gaussian_conj(p), Gaussian(3, -1));
}

TEST(Gaussian, ConjugationIsRingAutomorphism) {
  for (int i = 0; i < 200; ++i) {
    const Gaussian x = random_gaussian(), y = random_gaussian();
    EXPECT_EQ(gaussian_conj(x * y), gaussian_conj(x) * gaussian_conj(y));
    EXPECT_EQ(gaussian_conj(x + y), gaussian_conj(x) + gaussian_conj(y));
    EXPECT_EQ(gaussian_conj(gaussian_conj(x)), x);
    EXPECT_GE(x.norm(), Rational(0));
    EXPECT_EQ(x.norm().is_zero(), x.is_zero());
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Gaussian(1));
    }
  }
}

TEST(Laurent, Multiplication) {
  EXPECT_EQ(laurent_mul(t(1), t(-1)), Laurent(1));
  EXPECT_EQ(laurent_mul(Laurent(1) + t(1), Laurent(1) - t(1)), Laurent(1) - t(2));
  const Laurent a = Laurent::monomial(1, Gaussian(Rational(1, 2))) + t(2);
  EXPECT_EQ(laurent_mul(a, Laurent::monomial(-1, Gaussian(2))), Laurent(1) + Laurent::monomial(1, Gaussian(2)));
}

TEST(Laurent, Coefficients) {
  const Laurent p = Laurent(1) + Laurent::monomial(3, Gaussian(2));
  EXPECT_EQ(laurent_coeff(p, 3), Gaussian(2));
  EXPECT_EQ(laurent_coeff(Laurent(), 7), Gaussian(0));
  const Laurent s = t(1) + t(-1);
  EXPECT_EQ(laurent_coeff(laurent_mul(s, s), 0), Gaussian(2));
}

TEST(Laurent, ZerosArePruned) {
  const Laurent z = t(2) - t(2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
  EXPECT_EQ(z, Laurent());
}

TEST(Laurent, Transforms) {
  const Laurent p = Laurent::monomial(-2, Gaussian(3)) + Laurent::monomial(1, Gaussian(0, 1));
  EXPECT_EQ(p.derive(), Laurent::monomial(-2, Gaussian(-6)) + Laurent::monomial(1, Gaussian(0, 1)));
  EXPECT_EQ(p.flip(), Laurent::monomial(2, Gaussian(3)) + Laurent::monomial(-1, Gaussian(0, 1)));
  EXPECT_EQ(p.conj(), Laurent::monomial(-2, Gaussian(3)) + Laurent::monomial(1, Gaussian(0, -1)));
  EXPECT_EQ(p.negate_variable(), Laurent::monomial(-2, Gaussian(3)) - Laurent::monomial(1, Gaussian(0, 1)));
  EXPECT_EQ(p.even_part() + p.odd_part(), p);
  EXPECT_EQ(p.substitute_power(2).contract_power(2), p);
  EXPECT_THROW(p.contract_power(2), AlgebraError);
  EXPECT_EQ(p.min_degree(), -2);
  EXPECT_EQ(p.max_degree(), 1);
  EXPECT_THROW((void)Laurent().min_degree(), AlgebraError);
}

TEST(Laurent, RingAxiomsOnSamples) {
  for (int i = 0; i < 100; ++i) {
    const Laurent a = random_laurent(), b = random_laurent(), c = random_laurent();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).derive(), a.derive() * b + a * b.derive());
  }
}

}  // namespace
}  // namespace lars
