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
 * @file weyl.hpp
 * @brief Weyl group action on weights: orbits, dominant conjugates and
 * saturated weight sets.
 *
 * Reflections act by r_a(mu) = mu - mu(coroot a) a on full weights (central
 * part included), so affine simple systems act with their level.
 */

#include <map>
#include <set>
#include <vector>

#include "lars/root_model.hpp"

namespace lars {

class WeylError : public std::runtime_error {
 public:
  explicit WeylError(const std::string& what, std::vector<std::size_t> partial = {})
      : std::runtime_error(what), partial_word(std::move(partial)) {}
  std::vector<std::size_t> partial_word;
};

struct OrbitBudget {
  std::size_t max_word_length = 16;
  std::size_t max_elements = 10000;
};

struct OrbitResult {
  std::vector<Weight> elements;  // sorted
  bool truncated = false;
};

/// Breadth-first closure of {lambda} under the generating reflections.
OrbitResult orbit(const Weight& lambda, const std::vector<Weight>& generators, const OrbitBudget& budget,
                  const FormSpec& form);

struct DominantResult {
  /// Indices of the simple reflections applied to lambda, in order.
  std::vector<std::size_t> word;
  Weight dominant;
};

/// Repeatedly reflects at the smallest-index simple root with negative
/// pairing. For simple systems with an affine component the level lambda(K)
/// on that component must be positive.
DominantResult to_dominant(const Weight& lambda, const std::vector<Weight>& simple, const FormSpec& form,
                           std::size_t max_steps);

/// Applies the reflections of `word` in reverse order; replay(to_dominant(l)) == l.
Weight replay(const std::vector<std::size_t>& word, const Weight& dominant, const std::vector<Weight>& simple,
              const FormSpec& form);

struct WeightSet {
  /// Weight -> height, the sum of the simple-root coefficients of
  /// dominant - mu.
  std::map<Weight, long> elements;
  /// Dominant conjugate the saturation started from.
  Weight dominant;
  /// Elements whose root strings were cut by the depth bound.
  std::set<Weight> boundary;
  bool truncated = false;

  [[nodiscard]] bool contains(const Weight& w) const { return elements.contains(w); }
  [[nodiscard]] std::size_t size() const { return elements.size(); }
};

/// Saturation of the dominant conjugate of lambda under full root strings of
/// the simple roots, kept to heights <= depth_bound. Conjugate inputs give
/// identical results. Throws WeylError if lambda is not integral on the
/// simple coroots.
WeightSet weight_set(const Weight& lambda, const std::vector<Weight>& simple, const FormSpec& form,
                     long depth_bound, std::size_t max_steps = 10000);

struct HullResult {
  bool member = false;
  /// Convex coefficients on the sample when member.
  std::vector<Rational> coefficients;
};

/// Exact convex-hull membership by linear feasibility. Throws WeylError on
/// an empty sample.
HullResult hull_membership(const Weight& mu, const std::vector<Weight>& sample);

}  // namespace lars
