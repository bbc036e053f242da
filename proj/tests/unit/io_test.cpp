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

#include "lars/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "lars/certificate.hpp"
#include "test_support.hpp"

namespace lars {
namespace {

using testing::random_gaussian;
using testing::random_laurent;
using testing::random_rational;

TEST(Io, RationalRoundTrip) {
  for (int k = 0; k < 100; ++k) {
    const Rational r = random_rational(50);
    EXPECT_EQ(rational_from_json(to_json(r)), r);
  }
  EXPECT_EQ(rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(to_json(Rational(-3, 7)), Json("-3/7"));
  EXPECT_THROW(rational_from_json(Json("1/0")), std::exception);
  EXPECT_THROW(rational_from_json(Json::array()), IoError);
}

TEST(Io, GaussianBothShapes) {
  EXPECT_EQ(scalar_json(Gaussian(Rational(1, 2))), Json("1/2"));
  const Gaussian g{Rational(1), Rational(-2)};
  EXPECT_TRUE(scalar_json(g).is_object());
  EXPECT_EQ(gaussian_from_json(scalar_json(g)), g);
  EXPECT_EQ(gaussian_from_json(Json("5")), Gaussian(5));
  for (int k = 0; k < 50; ++k) {
    const auto x = random_gaussian();
    EXPECT_EQ(gaussian_from_json(to_json(x)), x);
  }
}

TEST(Io, LaurentRoundTrip) {
  for (int k = 0; k < 50; ++k) {
    const auto l = random_laurent();
    EXPECT_EQ(laurent_from_json(to_json(l)), l);
  }
}

TEST(Io, WeightShape) {
  const Weight w{Rational(2), {{"1", Rational(1, 2)}, {"3", Rational(-1)}}, Rational(-4)};
  const Json j = to_json(w);
  EXPECT_EQ(j.at("c"), Json("2"));
  EXPECT_EQ(j.at("d"), Json("-4"));
  EXPECT_EQ(j.at("eps").at("1"), Json("1/2"));
  EXPECT_EQ(weight_from_json(j), w);
  EXPECT_THROW(root_from_json(j), std::exception);
  const Weight r = Weight::root({{"1", Rational(1)}, {"2", Rational(-1)}}, 3);
  EXPECT_EQ(root_from_json(to_json(r)), r);
}

TEST(Io, ExtElementRoundTrip) {
  const auto real = Realization::make(RootSystemDesc::parse("BC2:2"));
  const auto rs = root_spaces(real, 2);
  for (int k = 0; k < 20; ++k) {
    const auto x = testing::random_ext(real, rs);
    const auto back = ext_from_json(to_json(x));
    EXPECT_EQ(back, x);
    EXPECT_EQ(*back.x.scheme(), *real.scheme());
  }
}

TEST(Io, QMatrixRoundTrip) {
  QMatrix m(2, 3);
  m(0, 1) = Rational(5, 3);
  m(1, 2) = Rational(-1);
  EXPECT_EQ(qmatrix_from_json(to_json(m)), m);
  EXPECT_THROW(qmatrix_from_json(Json::parse(R"([["1"],["1","2"]])")), IoError);
}

TEST(Io, ArgumentInlineOrFile) {
  EXPECT_EQ(parse_json_argument(R"({"a":1})").at("a"), Json(1));
  const std::string path = ::testing::TempDir() + "io_test_arg.json";
  {
    std::ofstream f(path);
    f << "[1, 2]";
  }
  EXPECT_EQ(parse_json_argument(path).size(), 2U);
  std::remove(path.c_str());
  EXPECT_THROW(parse_json_argument("{not json"), IoError);
}

TEST(Certificate, SerializationRoundTrip) {
  auto rng = make_rng();
  const auto cert = obstruction_certificate(4, rng);
  const auto back = Certificate::from_json(Json::parse(cert.to_json().dump()));
  EXPECT_EQ(back.kind, "obstruction");
  EXPECT_TRUE(back.replayable);
  EXPECT_EQ(back.payload, cert.payload);
  EXPECT_TRUE(replay(back).ok);
}

TEST(Certificate, TamperedObstructionRejected) {
  auto rng = make_rng();
  auto j = obstruction_certificate(4, rng).to_json();
  j["payload"]["p3_x"] = "12345";
  EXPECT_FALSE(replay(Certificate::from_json(j)).ok);
}

TEST(Certificate, PsdWitnessReplays) {
  CMatrix g(2, 2);
  g(0, 0) = Gaussian(1);
  g(0, 1) = g(1, 0) = Gaussian(2);
  g(1, 1) = Gaussian(1);
  const auto rep = psd_check(g);
  ASSERT_FALSE(rep.psd);
  const auto cert = psd_certificate(g, rep);
  EXPECT_TRUE(cert.payload.contains("witness"));
  EXPECT_TRUE(replay(cert).ok);
  auto forged = cert.to_json();
  forged["payload"]["witness"] = {0};
  EXPECT_FALSE(replay(Certificate::from_json(forged)).ok);
}

TEST(Certificate, AxiomReportNotReplayable) {
  const auto d = RootSystemDesc::parse("B2:2");
  const auto cert = axiom_certificate(d, -2, 2, verify_axioms(d, d.J, -2, 2));
  EXPECT_FALSE(cert.replayable);
  EXPECT_TRUE(cert.payload.at("all_pass").get<bool>());
  EXPECT_FALSE(replay(cert).ok);
}

}  // namespace
}  // namespace lars
