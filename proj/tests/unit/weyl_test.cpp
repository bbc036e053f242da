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

#include <set>

#include "lars/gcm.hpp"
#include "lars/weyl.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

Coords e(std::initializer_list<std::pair<const Label, Rational>> c) { return Coords(c); }
Weight root(Coords a, long m) { return Weight::root(std::move(a), m); }
Weight fin(Coords a) { return Weight{Rational(0), std::move(a), Rational(0)}; }

const FormSpec kA = FormSpec::for_family(Family::A);
const FormSpec kB = FormSpec::for_family(Family::B);
const Coords kAlpha = Coords{{"1", 1}, {"2", -1}};

Rational on(const Weight& w, const Weight& a, const FormSpec& f) { return eval(w, coroot(a, f)); }

TEST(Weyl, OrbitExamples) {
  const Weight a = root(kAlpha, 0);
  const auto o = orbit(fin(e({{"1", 3}})), {a}, {}, kA);
  EXPECT_EQ(o.elements.size(), 2u);
  EXPECT_FALSE(o.truncated);
  EXPECT_EQ(orbit(fin(e({{"1", 1}, {"2", 1}})), {a}, {}, kA).elements.size(), 1u);
  const std::vector<Weight> a2{root(e({{"1", 1}, {"2", -1}}), 0), root(e({{"2", 1}, {"3", -1}}), 0)};
  const auto o6 = orbit(fin(e({{"1", 2}, {"2", 1}})), a2, {}, kA);
  EXPECT_EQ(o6.elements.size(), 6u);
  for (const auto& w : o6.elements) EXPECT_EQ(dot(w.f, w.f), Rational(5));
  const std::vector<Weight> aff{root(kAlpha, 0), root(-kAlpha, 1)};
  const auto big = orbit(Weight{Rational(1), {}, Rational(0)}, aff, {4, 1000}, kA);
  EXPECT_TRUE(big.truncated);
}

TEST(Weyl, ToDominant) {
  const Weight a = root(kAlpha, 0);
  const Weight dom = fin(e({{"1", 3}}));
  const auto same = to_dominant(dom, {a}, kA, 10);
  EXPECT_TRUE(same.word.empty());
  EXPECT_EQ(same.dominant, dom);
  const Weight neg = fin(e({{"2", 3}}));
  const auto r = to_dominant(neg, {a}, kA, 10);
  EXPECT_EQ(r.word, (std::vector<std::size_t>{0}));
  EXPECT_EQ(on(r.dominant, a, kA), Rational(3));
  EXPECT_EQ(replay(r.word, r.dominant, {a}, kA), neg);
}

TEST(Weyl, ToDominantAffine) {
  const std::vector<Weight> aff{root(kAlpha, 0), root(-kAlpha, 1)};
  // lambda(coroot alpha) = -1, lambda(delta sharp) = lambda(c) = 1.
  const Weight lambda{Rational(1), e({{"2", 1}}), Rational(0)};
  ASSERT_EQ(on(lambda, aff[0], kA), Rational(-1));
  const auto r = to_dominant(lambda, aff, kA, 100);
  for (const auto& s : aff) EXPECT_GE(on(r.dominant, s, kA), Rational(0));
  EXPECT_EQ(replay(r.word, r.dominant, aff, kA), lambda);
  // Brute force: the dominant conjugate also appears in a plain orbit search.
  const auto o = orbit(lambda, aff, {12, 100000}, kA);
  EXPECT_TRUE(std::binary_search(o.elements.begin(), o.elements.end(), r.dominant));
  EXPECT_THROW(to_dominant(Weight{Rational(0), e({{"2", 1}}), Rational(0)}, aff, kA, 100), WeylError);
  try {
    to_dominant(Weight{Rational(-1), {}, Rational(0)}, aff, kA, 100);
    FAIL();
  } catch (const WeylError&) {
  }
}

TEST(Weyl, StepLimitCarriesPartialWord) {
  const std::vector<Weight> a2{root(e({{"1", 1}, {"2", -1}}), 0), root(e({{"2", 1}, {"3", -1}}), 0)};
  try {
    to_dominant(fin(e({{"3", 2}, {"2", 1}})), a2, kA, 1);
    FAIL();
  } catch (const WeylError& err) {
    EXPECT_EQ(err.partial_word.size(), 1u);
  }
}

TEST(Weyl, HullMembership) {
  const Weight a = root(kAlpha, 0);
  const Weight l = fin(e({{"1", 3}}));
  const Weight r = fin(e({{"2", 3}}));
  EXPECT_TRUE(hull_membership(l, {l, r}).member);
  const auto mid = hull_membership(fin(e({{"1", 2}, {"2", 1}})), {l, r});
  ASSERT_TRUE(mid.member);
  EXPECT_EQ(mid.coefficients, (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
  EXPECT_FALSE(hull_membership(l + a, {l, r}).member);
  EXPECT_THROW(hull_membership(l, {}), WeylError);
}

TEST(Weyl, Sl2WeightSet) {
  const Weight a = root(kAlpha, 0);
  const auto ws = weight_set(fin(e({{"1", 3}})), {a}, kA, 100);
  std::set<Rational> vals;
  for (const auto& [w, h] : ws.elements) vals.insert(on(w, a, kA));
  EXPECT_EQ(vals, (std::set<Rational>{Rational(3), Rational(1), Rational(-1), Rational(-3)}));
  EXPECT_FALSE(ws.truncated);
  EXPECT_EQ(weight_set(fin(e({{"1", 1}, {"2", 1}})), {a}, kA, 100).size(), 1u);
  EXPECT_THROW(weight_set(fin(e({{"1", Rational(1, 2)}})), {a}, kA, 100), WeylError);
}

// Brute force: full orbit, box of lattice points, exact hull test.
std::set<Weight> brute_force(const Weight& lambda, const std::vector<Weight>& simple, const FormSpec& f, long box) {
  const auto o = orbit(lambda, simple, {64, 100000}, f);
  EXPECT_FALSE(o.truncated);
  std::set<Weight> out;
  std::vector<long> c(simple.size(), -box);
  while (true) {
    Weight mu = lambda;
    for (std::size_t i = 0; i < simple.size(); ++i) mu = mu + Rational(c[i]) * simple[i];
    if (hull_membership(mu, o.elements).member) out.insert(mu);
    std::size_t k = 0;
    while (k < c.size() && ++c[k] > box) c[k++] = -box;
    if (k == c.size()) break;
  }
  return out;
}

struct FiniteCase {
  const char* name;
  std::vector<Weight> simple;
  FormSpec form;
  Weight lambda;
  std::size_t expected;
};

TEST(Weyl, FiniteTypeWeightSetsMatchBruteForce) {
  const std::vector<FiniteCase> cases{
      {"A1", {root(kAlpha, 0)}, kA, fin(e({{"1", 3}})), 4},
      {"A2", {root(e({{"1", 1}, {"2", -1}}), 0), root(e({{"2", 1}, {"3", -1}}), 0)}, kA, fin(e({{"1", 2}, {"2", 1}})), 7},
      {"B2", {root(e({{"1", 1}, {"2", -1}}), 0), root(e({{"2", 1}}), 0)}, kB, fin(e({{"1", 1}, {"2", 1}})), 9},
      {"B2b", {root(e({{"1", 1}, {"2", -1}}), 0), root(e({{"2", 1}}), 0)}, kB, fin(e({{"1", 2}, {"2", 1}})), 0},
  };
  for (const auto& c : cases) {
    const auto ws = weight_set(c.lambda, c.simple, c.form, 1000);
    EXPECT_FALSE(ws.truncated) << c.name;
    std::set<Weight> got;
    for (const auto& [w, h] : ws.elements) got.insert(w);
    EXPECT_EQ(got, brute_force(c.lambda, c.simple, c.form, 6)) << c.name;
    if (c.expected) EXPECT_EQ(got.size(), c.expected) << c.name;
    const auto o = orbit(c.lambda, c.simple, {64, 100000}, c.form);
    for (const auto& w : got) {
      EXPECT_TRUE(hull_membership(w, o.elements).member);
      for (const auto& s : c.simple) EXPECT_TRUE(got.contains(reflect(w, s, c.form))) << c.name;
    }
    for (const auto& s : c.simple) EXPECT_FALSE(got.contains(c.lambda + s));
  }
}

TEST(Weyl, AffineBasicWeightSliceMatchesHull) {
  const std::vector<Weight> aff{root(kAlpha, 0), root(-kAlpha, 1)};
  const Weight lambda{Rational(1), {}, Rational(0)};
  ASSERT_EQ(on(lambda, aff[0], kA), Rational(0));
  ASSERT_EQ(on(lambda, aff[1], kA), Rational(1));
  const auto ws = weight_set(lambda, aff, kA, 12);
  EXPECT_TRUE(ws.truncated);
  std::set<Weight> slice;
  for (const auto& [w, h] : ws.elements)
    if (w.t >= Rational(-3)) slice.insert(w);
  // Orbit points lambda + k alpha - k^2 delta, |k| <= 3.
  const Weight alpha = root(kAlpha, 0);
  std::vector<Weight> pts;
  for (long k = -3; k <= 3; ++k) pts.push_back(lambda + Rational(k) * alpha - Rational(k * k) * Weight::delta());
  std::set<Weight> oracle;
  for (long a = -4; a <= 4; ++a)
    for (long b = -3; b <= 1; ++b) {
      const Weight mu = lambda + Rational(a) * alpha + Rational(b) * Weight::delta();
      if (hull_membership(mu, pts).member) oracle.insert(mu);
    }
  EXPECT_EQ(slice, oracle);
  EXPECT_EQ(slice.size(), 10u);
}

TEST(Weyl, ConjugateWeightsShareWeightSets) {
  const std::vector<Weight> aff{root(kAlpha, 0), root(-kAlpha, 1)};
  const Weight lambda{Rational(2), e({{"1", 1}}), Rational(0)};
  const auto o = orbit(lambda, aff, {5, 1000}, kA);
  const auto base = weight_set(lambda, aff, kA, 8);
  for (const auto& mu : o.elements) {
    const auto other = weight_set(mu, aff, kA, 8);
    EXPECT_EQ(other.elements, base.elements);
  }
}

TEST(Weyl, OrbitPreservesForm) {
  const auto desc = RootSystemDesc::parse("B3:finite");
  const auto simple = standard_simple_system(desc);
  for (int i = 0; i < 20; ++i) {
    const Weight l = fin(e({{"1", testing::uniform(-3, 3)}, {"2", testing::uniform(-3, 3)}, {"3", testing::uniform(-3, 3)}}));
    for (const auto& w : orbit(l, simple, {}, desc.form).elements)
      EXPECT_EQ(inner(w, w, desc.form), inner(l, l, desc.form));
  }
}

}  // namespace
}  // namespace lars
