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

#include "lars/certificates.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

class PairMaps : public ::testing::TestWithParam<IsoPair> {};

TEST_P(PairMaps, BothEmbeddingsPreserveBracketAndForm) {
  for (const auto& map : iso_pair_maps(GetParam(), 3)) {
    const auto basis = window_basis(Realization::make(map.source), 3);
    const auto rep = verify_embedding(map, basis);
    EXPECT_TRUE(rep.ok) << map.note << ": " << rep.failure;
    EXPECT_EQ(rep.pairs_checked, basis.size() * (basis.size() + 1) / 2);
  }
}

INSTANTIATE_TEST_SUITE_P(Pairs, PairMaps, ::testing::Values(IsoPair::BD, IsoPair::CBC, IsoPair::BB),
                         [](const auto& info) {
                           switch (info.param) {
                             case IsoPair::BD: return std::string("BD");
                             case IsoPair::CBC: return std::string("CBC");
                             default: return std::string("BB");
                           }
                         });

TEST(Embedding, OddSlotImageIsUnitVector) {
  const auto maps = iso_pair_maps(IsoPair::BD, 3);
  const auto& m = maps[1];
  const auto dst = Realization::make(m.target);
  const auto& s = *dst.scheme();
  EXPECT_EQ(m.e(s.slot("+4"), 6), Rational(0));
  EXPECT_EQ(m.e(s.slot("+4"), 3), Rational(1));
  EXPECT_EQ(m.e(s.slot("-4"), 3), Rational(1, 2));
}

TEST(Embedding, RejectsNonIsometry) {
  const auto src = Realization::make(RootSystemDesc::parse("B3:1"));
  const auto dst = Realization::make(RootSystemDesc::parse("D4:1"));
  EXPECT_THROW(make_embedding(src, dst, {{"0", {{"+4", Rational(1)}}}}), CertificateError);
}

TEST(Embedding, TamperedMapIsCaught) {
  auto maps = iso_pair_maps(IsoPair::BB, 2);
  auto m = maps.front();
  m.e_plus = Rational(2) * m.e_plus;
  const auto rep = verify_embedding(m, window_basis(Realization::make(m.source), 1));
  EXPECT_FALSE(rep.ok);
  auto m2 = maps.back();
  m2.weights.front() = 1;
  EXPECT_FALSE(verify_embedding(m2, window_basis(Realization::make(m2.source), 1)).ok);
}

TEST(Embedding, TwistedToUntwistedScalesCenter) {
  const auto maps = iso_pair_maps(IsoPair::BB, 3);
  const auto src = Realization::make(maps[0].source);
  const auto dst = Realization::make(maps[0].target);
  EXPECT_EQ(maps[0].central_scale(src, dst), Rational(1, 2));
  const auto src2 = Realization::make(maps[1].source);
  const auto dst2 = Realization::make(maps[1].target);
  EXPECT_EQ(maps[1].central_scale(src2, dst2), Rational(2));
}

TEST(Obstruction, SampledEvidenceHolds) {
  for (int k = 0; k < 50; ++k) {
    const auto ev = sample_obstruction(4, testing::rng());
    EXPECT_EQ(ev.x.scheme()->size(), 4u);
    EXPECT_TRUE(ev.holds());
    const auto replay = obstruction_from(ev.x, ev.conjugator, ev.structure);
    EXPECT_EQ(replay.p3_x, ev.p3_x);
    EXPECT_TRUE(replay.holds());
  }
}

TEST(Obstruction, OddSizeUsesSymmetricStructure) {
  const auto ev = sample_obstruction(5, testing::rng());
  EXPECT_EQ(ev.x.scheme()->size(), 5u);
  EXPECT_EQ(ev.structure.transpose(), ev.structure);
  EXPECT_TRUE(ev.holds());
}

TEST(Obstruction, FailsForZeroP3) {
  const auto s = MatrixScheme::make(MatrixScheme::Kind::TwoJ, {"1", "2"});
  const auto ev = obstruction_from(LoopMatrix(s), LoopMatrix::identity(s), structure_matrix(s, -1));
  EXPECT_FALSE(ev.holds());
}

TEST(IsoPairNames, RoundTrip) {
  for (auto p : {IsoPair::BD, IsoPair::CBC, IsoPair::BB}) EXPECT_EQ(parse_iso_pair(to_string(p)), p);
  EXPECT_THROW(parse_iso_pair("A1-C2"), CertificateError);
}

}  // namespace
}  // namespace lars
