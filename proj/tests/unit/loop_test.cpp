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

#include "lars/loop.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

using testing::random_loop;
using testing::random_member;

using K = MatrixScheme::Kind;

SchemePtr scheme_j(std::size_t n) {
  std::vector<Label> J;
  for (std::size_t i = 1; i <= n; ++i) J.push_back(std::to_string(i));
  return MatrixScheme::make(K::J, J);
}

std::vector<Label> labels(std::size_t n) {
  std::vector<Label> J;
  for (std::size_t i = 1; i <= n; ++i) J.push_back(std::to_string(i));
  return J;
}

LoopMatrix E(const SchemePtr& s, std::size_t r, std::size_t c, std::int64_t q = 0) {
  return LoopMatrix::unit(s, r, c, Laurent::monomial(q));
}

TEST(MatrixScheme, SlotLayout) {
  const auto s = MatrixScheme::make(K::TwoJ1, {"a", "b"});
  ASSERT_EQ(s->size(), 5u);
  EXPECT_EQ(s->name(0), "+a");
  EXPECT_EQ(s->name(2), "0");
  EXPECT_EQ(s->name(4), "-b");
  EXPECT_EQ(s->partner(s->slot("+b")), s->slot("-b"));
  EXPECT_EQ(s->partner(2), 2u);
  EXPECT_EQ(s->sign(3), -1);
  EXPECT_EQ(*s->label_index(3), 0u);
  EXPECT_FALSE(s->label_index(2).has_value());
  EXPECT_THROW(s->slot("+c"), LoopError);
  EXPECT_THROW(MatrixScheme::make(K::J, {"a", "a"}), LoopError);
}

TEST(Loop, BracketExamples) {
  const auto s = scheme_j(2);
  const LoopMatrix h = E(s, 0, 0) - E(s, 1, 1);
  EXPECT_EQ(bracket(E(s, 0, 1), E(s, 1, 0)), h);
  EXPECT_EQ(bracket(E(s, 0, 1, 1), E(s, 1, 0, -1)), h);
  const LoopMatrix x = random_loop(s);
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_THROW(bracket(E(s, 0, 1), E(scheme_j(3), 0, 1)), LoopError);
}

TEST(Loop, FormExamples) {
  const auto s = scheme_j(2);
  EXPECT_EQ(loop_form(E(s, 0, 1, 1), E(s, 1, 0, -1)), Gaussian(1));
  EXPECT_EQ(loop_form(E(s, 0, 1, 1), E(s, 1, 0, 1)), Gaussian(0));
  const LoopMatrix h = E(s, 0, 0) - E(s, 1, 1);
  EXPECT_EQ(loop_form(h, h), Gaussian(2));
}

TEST(Loop, MemberExamples) {
  const auto s = scheme_j(2);
  const auto sl = AlgebraTag::sl(s);
  EXPECT_TRUE(member(sl, E(s, 0, 1)));
  EXPECT_FALSE(member(sl, E(s, 0, 0)));
  const auto sp = AlgebraTag::sp({"1"});
  const auto& ss = sp.scheme;
  EXPECT_TRUE(member(sp, E(ss, 0, 0) - E(ss, 1, 1)));
  const auto o = AlgebraTag::o_even(labels(2));
  const auto& os = o.scheme;
  // E(j,k) - E(-k,-j)
  EXPECT_TRUE(member(o, E(os, os->plus(0), os->plus(1)) - E(os, os->minus(1), os->minus(0))));
  EXPECT_FALSE(member(o, E(os, os->plus(0), os->plus(1))));
}

TEST(Loop, Involutions) {
  const auto s = scheme_j(2);
  const auto neg = InvolutionSpec::neg_transpose(LoopMatrix::identity(s));
  EXPECT_EQ(apply_involution(neg, E(s, 0, 1)), -E(s, 1, 0));
  // Ad(g) for the reflection diag(1, -1) fixes diagonal matrices.
  const LoopMatrix g = E(s, 0, 0) - E(s, 1, 1);
  const auto ad = InvolutionSpec::adjoint(g);
  EXPECT_EQ(apply_involution(ad, E(s, 0, 0) + E(s, 1, 1, 2)), E(s, 0, 0) + E(s, 1, 1, 2));
  // Odd S on diag(1, 0, -1).
  const auto odd = MatrixScheme::make(K::TwoJ1, {"1"});
  const auto bc = InvolutionSpec::neg_transpose(structure_matrix(odd, 1));
  const LoopMatrix d = E(odd, 0, 0) - E(odd, 2, 2);
  EXPECT_EQ(apply_involution(bc, d), d);
  EXPECT_THROW(InvolutionSpec::neg_transpose(E(s, 0, 1)), LoopError);
  EXPECT_THROW(InvolutionSpec::adjoint(E(s, 0, 0) + E(s, 1, 1) + E(s, 0, 1)), LoopError);
}

TEST(Loop, TwistedMembershipC2) {
  // sigma(x) = -S- x^T S-^-1 on sl_2J: the symmetric upper-right block is
  // fixed, the skew block is negated.
  const auto s = MatrixScheme::make(K::TwoJ, labels(2));
  const auto sl = AlgebraTag::sl(s);
  const auto sigma = InvolutionSpec::neg_transpose(structure_matrix(s, -1));
  const std::size_t p1 = s->plus(0), p2 = s->plus(1), m1 = s->minus(0), m2 = s->minus(1);
  const LoopMatrix sym = E(s, p1, m2) + E(s, p2, m1);
  const LoopMatrix skew = E(s, p1, m2) - E(s, p2, m1);
  EXPECT_EQ(apply_involution(sigma, sym), sym);
  EXPECT_EQ(apply_involution(sigma, skew), -skew);
  EXPECT_TRUE(twisted_member(sym, sigma, sl));
  EXPECT_FALSE(twisted_member(Laurent::monomial(1) * sym, sigma, sl));
  EXPECT_TRUE(twisted_member(Laurent::monomial(1) * skew, sigma, sl));
  EXPECT_FALSE(twisted_member(skew, sigma, sl));
  EXPECT_THROW(twisted_member(E(s, p1, p1), sigma, sl), LoopError);
}

TEST(Loop, DeriveD) {
  const auto s = scheme_j(2);
  EXPECT_EQ(derive_D(E(s, 0, 1, 3)), LoopMatrix::unit(s, 0, 1, Laurent::monomial(3, Gaussian(3))));
  EXPECT_TRUE(derive_D(E(s, 0, 1)).is_zero());
  const LoopMatrix x = E(s, 0, 1, 1), y = E(s, 1, 0, -1);
  EXPECT_EQ(loop_form(derive_D(x), y), Gaussian(1));
  EXPECT_EQ(loop_form(derive_D(x), y) + loop_form(x, derive_D(y)), Gaussian(0));
}

TEST(Loop, P3Examples) {
  const auto s = scheme_j(3);
  const LoopMatrix d = E(s, 0, 0) + E(s, 1, 1) - LoopMatrix::unit(s, 2, 2, Laurent(2));
  EXPECT_EQ(p3(d), Gaussian(-6));
  const LoopMatrix c = E(s, 0, 1) + E(s, 1, 2) + E(s, 2, 0);
  EXPECT_EQ(p3(c), Gaussian(3));
  EXPECT_THROW(p3(E(s, 0, 1, 1)), LoopError);
  // Conjugation keeps p3, negative transpose flips it.
  CMatrix a(3, 3);
  a(0, 0) = Gaussian(1); a(0, 1) = Gaussian(2); a(1, 1) = Gaussian(1); a(2, 2) = Gaussian(3); a(2, 0) = Gaussian(1);
  const LoopMatrix A = LoopMatrix::from_dense(s, a);
  const LoopMatrix Ainv = constant_inverse(A);
  const auto neg = InvolutionSpec::neg_transpose(LoopMatrix::identity(s));
  for (const LoopMatrix& x : {d, c}) {
    EXPECT_EQ(p3(A * x * Ainv), p3(x));
    EXPECT_EQ(p3(apply_involution(neg, x)), -p3(x));
  }
}

TEST(Loop, P3DistinguishesAutomorphismClasses) {
  const auto s = scheme_j(4);
  const auto sl = AlgebraTag::sl(s);
  int done = 0;
  while (done < 50) {
    const LoopMatrix x = random_member(sl, 6, 0);
    if (p3(x).is_zero()) continue;
    CMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = Gaussian(testing::random_rational(3));
    if (!inverse(a)) continue;
    const LoopMatrix A = LoopMatrix::from_dense(s, a);
    const LoopMatrix S = LoopMatrix::from_dense(s, a + a.transpose());
    if (!inverse(S.dense_constant())) continue;
    EXPECT_EQ(p3(A * x * constant_inverse(A)), p3(x));
    EXPECT_EQ(p3(-(S * x.transpose() * constant_inverse(S))), -p3(x));
    ++done;
  }
}

TEST(Loop, QuadPhi) {
  const auto s = scheme_j(2);
  const QMatrix beta = QMatrix::identity(2);
  const std::vector<Rational> v{Rational(1), Rational(0)}, x{Rational(0), Rational(1)};
  const LoopMatrix phi = quad_phi(s, v, x, beta);
  EXPECT_EQ(phi, E(s, 1, 0) - E(s, 0, 1));
  EXPECT_TRUE(quad_phi(s, v, {Rational(0), Rational(0)}, beta).is_zero());
  // phi(x) v = beta(v, v) x
  EXPECT_EQ(phi.get(1, 0), Laurent(1));
  EXPECT_EQ(phi.get(0, 0), Laurent());
  EXPECT_THROW(quad_phi(s, {Rational(1), Rational(1)}, x, beta), LoopError);
  EXPECT_THROW(quad_phi(s, {Rational(0), Rational(0)}, x, beta), LoopError);
}

TEST(Loop, QuadPhiAnticommutesWithReflection) {
  // V = K^5 with the odd form S; v = e0 is anisotropic.
  const auto s = MatrixScheme::make(K::TwoJ1, labels(2));
  const LoopMatrix S = structure_matrix(s, 1);
  const QMatrix beta = [&] {
    QMatrix b(5, 5);
    for (const auto& [k, val] : S.entries()) b(k.first, k.second) = val.coeff(0).re();
    return b;
  }();
  std::vector<Rational> v(5), x(5);
  v[s->zero()] = Rational(1);
  x[s->plus(0)] = Rational(2);
  x[s->minus(1)] = Rational(-1);
  const LoopMatrix phi = quad_phi(s, v, x, beta);
  EXPECT_TRUE(member(AlgebraTag::o_odd(labels(2)), phi));
  // Reflection in v-orthogonal: g = 1 - 2 v v^T B / beta(v, v).
  LoopMatrix g = LoopMatrix::identity(s);
  g.add(s->zero(), s->zero(), Laurent(-2));
  const auto ad = InvolutionSpec::adjoint(g);
  EXPECT_EQ(apply_involution(ad, phi), -phi);
}

TEST(Loop, ConjugationIso) {
  const auto s = MatrixScheme::make(K::TwoJ1, labels(2));
  // v = slot 0, V1+ = {+1}, V1- = {-1}.
  const auto blocks = BlockSpec::five_block(s, {s->plus(0)}, {s->minus(0)});
  const LoopMatrix diag = E(s, s->plus(0), s->plus(0), 2) + E(s, s->zero(), s->zero(), -1);
  EXPECT_EQ(conjugation_iso(diag, blocks), diag);
  EXPECT_EQ(conjugation_iso(E(s, s->zero(), s->plus(0), 1), blocks), E(s, s->zero(), s->plus(0), 0));
  const auto o = AlgebraTag::o_odd(labels(2));
  for (int i = 0; i < 50; ++i) {
    const LoopMatrix x = random_member(o), y = random_member(o);
    EXPECT_EQ(conjugation_iso(bracket(x, y), blocks), bracket(conjugation_iso(x, blocks), conjugation_iso(y, blocks)));
    EXPECT_TRUE(member(o, conjugation_iso(x, blocks)));
  }
  EXPECT_THROW(conjugation_iso(diag, BlockSpec{{0, 1}}), LoopError);
}

std::vector<AlgebraTag> all_tags() {
  return {AlgebraTag::gl(scheme_j(3)), AlgebraTag::sl(scheme_j(3)), AlgebraTag::o_even(labels(2)),
          AlgebraTag::o_odd(labels(2)), AlgebraTag::sp(labels(2)),
          AlgebraTag::sl(MatrixScheme::make(K::TwoJ1, labels(1)))};
}

TEST(Loop, JacobiAndInvariance) {
  const auto s = scheme_j(3);
  for (int i = 0; i < 200; ++i) {
    const LoopMatrix x = random_loop(s), y = random_loop(s), z = random_loop(s);
    EXPECT_TRUE((bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero());
    EXPECT_EQ(loop_form(bracket(x, y), z), loop_form(x, bracket(y, z)));
    EXPECT_EQ(loop_form(derive_D(x), y), -loop_form(x, derive_D(y)));
  }
}

TEST(Loop, MemberClosure) {
  for (const auto& tag : all_tags()) {
    for (int i = 0; i < 30; ++i) {
      const LoopMatrix x = random_member(tag), y = random_member(tag);
      ASSERT_TRUE(member(tag, x)) << tag.name();
      EXPECT_TRUE(member(tag, bracket(x, y))) << tag.name();
    }
  }
}

TEST(Loop, InvolutionsAreAutomorphismsAndTwistedClosure) {
  const auto two = MatrixScheme::make(K::TwoJ, labels(2));
  const auto odd = MatrixScheme::make(K::TwoJ1, labels(2));
  struct Case {
    AlgebraTag tag;
    InvolutionSpec sigma;
  };
  LoopMatrix g = LoopMatrix::identity(two);
  // swap +2 <-> -2: reflection of o_2J in e(+2) - e(-2)
  g.set(two->plus(1), two->plus(1), Laurent());
  g.set(two->minus(1), two->minus(1), Laurent());
  g.set(two->plus(1), two->minus(1), Laurent(1));
  g.set(two->minus(1), two->plus(1), Laurent(1));
  const AlgebraTag o = AlgebraTag::o_even(labels(2));
  const std::vector<Case> cases{
      {AlgebraTag::sl(two), InvolutionSpec::neg_transpose(structure_matrix(two, -1))},
      {AlgebraTag::sl(two), InvolutionSpec::neg_transpose(structure_matrix(two, 1))},
      {AlgebraTag::sl(odd), InvolutionSpec::neg_transpose(structure_matrix(odd, 1))},
      {AlgebraTag{o.kind, two, o.S}, InvolutionSpec::adjoint(g)},
  };
  for (const auto& c : cases) {
    for (int i = 0; i < 30; ++i) {
      const LoopMatrix x = random_member(c.tag), y = random_member(c.tag);
      EXPECT_EQ(c.sigma.apply(bracket(x, y)), bracket(c.sigma.apply(x), c.sigma.apply(y)));
      EXPECT_EQ(c.sigma.apply(c.sigma.apply(x)), x);
      EXPECT_TRUE(member(c.tag, c.sigma.apply(x)));
      const LoopMatrix tx = x + c.sigma.apply_twisted(x), ty = y + c.sigma.apply_twisted(y);
      ASSERT_TRUE(twisted_member(tx, c.sigma, c.tag));
      EXPECT_TRUE(twisted_member(bracket(tx, ty), c.sigma, c.tag));
    }
  }
}

}  // namespace
}  // namespace lars
