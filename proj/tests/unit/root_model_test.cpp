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

#include "lars/catalog.hpp"
#include "lars/root_model.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

Coords e(std::initializer_list<std::pair<const Label, Rational>> c) { return Coords(c); }
Weight root(Coords a, long m) { return Weight::root(std::move(a), m); }

const FormSpec kUnit = FormSpec::for_family(Family::A);
const FormSpec kHalf = FormSpec::for_family(Family::C);

TEST(RootModel, LabelOrderIsNumericFirst) {
  LabelLess lt;
  EXPECT_TRUE(lt("2", "10"));
  EXPECT_FALSE(lt("10", "2"));
  EXPECT_TRUE(lt("9", "j0"));
  EXPECT_TRUE(lt("a", "b"));
}

TEST(RootModel, Eval) {
  const CartanElement x{Rational(5), e({{"1", 1}}), Rational(3)};
  EXPECT_EQ(eval(root(e({{"1", 1}}), 2), x), Rational(7));
  EXPECT_EQ(eval(Weight::delta(), CartanElement::c()), Rational(0));
  EXPECT_EQ(eval(Weight::delta(), CartanElement::d()), Rational(1));
  const Weight lambda{Rational(1), {}, Rational(0)};
  const Weight a = root(e({{"1", 1}, {"2", -1}}), 3);
  EXPECT_EQ(eval(lambda, coroot(a, kUnit)), Rational(2 * 3) / inner(a, a, kUnit));
}

TEST(RootModel, Inner) {
  EXPECT_EQ(inner(root(e({{"1", 1}, {"2", -1}}), 5), root(e({{"1", 1}, {"2", -1}}), -7), kUnit), Rational(2));
  EXPECT_EQ(inner(Weight::delta(), Weight::delta(), kUnit), Rational(0));
  EXPECT_EQ(inner(root(e({{"1", 2}}), 0), root(e({{"1", 2}}), 0), kHalf), Rational(2));
  EXPECT_THROW(inner(Weight{Rational(1), {}, Rational(0)}, Weight::delta(), kUnit), RootError);
}

TEST(RootModel, Coroot) {
  const auto c1 = coroot(root(e({{"1", 1}, {"2", -1}}), 3), kUnit);
  EXPECT_EQ(c1, (CartanElement{Rational(3), e({{"1", 1}, {"2", -1}}), Rational(0)}));
  const Weight r = root(e({{"1", 2}}), 1);
  EXPECT_EQ(eval(r, coroot(r, kHalf)), Rational(2));
  const auto bc = coroot(r, FormSpec::for_family(Family::BC));
  EXPECT_EQ(bc, (CartanElement{Rational(1, 2), e({{"1", 1}}), Rational(0)}));
  EXPECT_THROW(coroot(Weight::delta(), kUnit), RootError);
}

TEST(RootModel, PairAndReflect) {
  const Weight a12 = root(e({{"1", 1}, {"2", -1}}), 0);
  const Weight a23 = root(e({{"2", 1}, {"3", -1}}), 0);
  EXPECT_EQ(pair(a23, a12, kUnit), Rational(-1));
  EXPECT_EQ(pair(a12, a12, kUnit), Rational(2));
  EXPECT_EQ(pair(Weight::delta(), a12, kUnit), Rational(0));
  EXPECT_EQ(reflect(a23, a12, kUnit), root(e({{"1", 1}, {"3", -1}}), 0));
  EXPECT_EQ(reflect(a12, a12, kUnit), -a12);
  EXPECT_EQ(reflect(Weight::delta(), a12, kUnit), Weight::delta());
  EXPECT_THROW(reflect(a12, Weight::delta(), kUnit), RootError);
}

// Property checks over sampled roots of every affine family.
class RootModelProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(RootModelProperties, CorootReflectionIsometry) {
  const auto desc = RootSystemDesc::parse(GetParam());
  const auto roots = enumerate(desc, desc.J, -3, 3);
  std::vector<Weight> R;
  for (const auto& r : roots)
    if (!r.f.is_zero()) R.push_back(r);
  ASSERT_FALSE(R.empty());
  const auto pick = [&] { return R[testing::uniform(0, static_cast<long>(R.size()) - 1)]; };
  for (int i = 0; i < 200; ++i) {
    const Weight a = pick(), b = pick(), c = pick();
    const FormSpec& f = desc.form;
    EXPECT_EQ(eval(a, coroot(a, f)), Rational(2));
    EXPECT_EQ(reflect(reflect(b, a, f), a, f), b);
    EXPECT_EQ(inner(reflect(b, a, f), reflect(c, a, f), f), inner(b, c, f));
    const Rational ab = pair(a, b, f), ba = pair(b, a, f);
    EXPECT_GE(ab * ba, Rational(0));
    EXPECT_EQ(ab.is_zero(), ba.is_zero());
    EXPECT_EQ(coroot(a, f), (Rational(2) / inner(a, a, f)) * sharp(a, f));
  }
}

INSTANTIATE_TEST_SUITE_P(Families, RootModelProperties,
                         ::testing::Values("A4:1", "B4:1", "C4:1", "D4:1", "B4:2", "C4:2", "BC4:2"));

}  // namespace
}  // namespace lars
