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

#pragma once

/**
 * @file grading.hpp
 * @brief The grading of a root system by an integral weight and the
 * parabolic partition it induces.
 *
 * The grade of a root a is lambda(a#), where # is the form transport into the
 * Cartan subalgebra. For integral lambda all grades lie in a cyclic subgroup
 * of Q; the report gives its nonnegative generator.
 */

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "lars/catalog.hpp"
#include "lars/double_ext.hpp"

namespace lars {

class GradingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GradingReport {
  std::map<Rational, std::vector<Weight>> grades;
  /// Nonnegative generator of the subgroup of Q spanned by the grades. The
  /// window |m| <= 2 already contains a basis of the root lattice, so the
  /// value is exact for any window of at least that size.
  Rational generator;
  /// grade / generator; everything sits at 0 when degenerate.
  std::map<long, std::vector<Weight>> normalized;
  /// lambda vanishes on every window root.
  bool degenerate = false;
  bool window_exact = false;
};

/// lambda(a#).
Rational grade(const Weight& lambda, const Weight& root, const FormSpec& form);

/// Throws GradingError naming the first window root whose coroot takes a
/// non-integral value.
void require_integral(const Weight& lambda, const RootSystemDesc& desc, long window);

/// Random integral weight: lambda(c) a random multiple of the family's
/// central step, epsilon coordinates integral or all shifted by 1/2, redrawn
/// until integral on the window |m| <= 3 (values on coroots are affine in m,
/// and that window holds two consecutive levels of every root class).
Weight sample_integral_weight(const RootSystemDesc& desc, std::mt19937_64& rng, long bound = 3);

GradingReport grading(const Weight& lambda, const RootSystemDesc& desc, long window);

/// lambda(c) != 0.
bool is_transversal(const Weight& lambda);

struct ParabolicRoots {
  std::vector<Weight> zero;
  std::vector<Weight> plus;
  std::vector<Weight> minus;
  bool degenerate = false;
};

ParabolicRoots parabolic_roots(const Weight& lambda, const RootSystemDesc& desc, long window);

struct CharacterResult {
  bool ok = true;
  std::optional<Weight> witness;
};

/// lambda(a#) = 0 for every a in the candidate set.
CharacterResult character_check(const Weight& lambda, const std::vector<Weight>& candidate, const FormSpec& form);

/// Realized form: lambda([x_a, x_-a]) = 0 for every window root a of grade 0.
CharacterResult character_check(const Weight& lambda, const Realization& real, const RootSpaces& rs);

}  // namespace lars
