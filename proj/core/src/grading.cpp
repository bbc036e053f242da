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

#include "lars/grading.hpp"

namespace lars {

Rational grade(const Weight& lambda, const Weight& root, const FormSpec& form) {
  return eval(lambda, sharp(root, form));
}

void require_integral(const Weight& lambda, const RootSystemDesc& desc, long window) {
  for (const auto& r : enumerate(desc, desc.J, -window, window)) {
    if (inner(r, r, desc.form).is_zero()) continue;
    const Rational v = eval(lambda, coroot(r, desc.form));
    if (v.denominator() != 1)
      throw GradingError("weight is not integral: value " + v.to_string() + " on the coroot of " + r.to_string());
  }
}

Weight sample_integral_weight(const RootSystemDesc& desc, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  std::uniform_int_distribution<int> coin(0, 1);
  const Rational step = integral_weight_condition(desc).step;
  for (int attempt = 0; attempt < 256; ++attempt) {
    Weight w{step * Rational(coord(rng)), {}, Rational(coord(rng))};
    const Rational shift = coin(rng) ? Rational(1, 2) : Rational(0);
    for (const auto& j : desc.J) w.f.set(j, Rational(coord(rng)) + shift);
    try {
      require_integral(w, desc, 3);
      return w;
    } catch (const GradingError&) {
    }
  }
  throw GradingError("no integral weight found for " + desc.name());
}

GradingReport grading(const Weight& lambda, const RootSystemDesc& desc, long window) {
  require_integral(lambda, desc, window);
  GradingReport rep;
  rep.window_exact = window >= 2;
  for (const auto& r : enumerate(desc, desc.J, -window, window)) {
    const Rational g = grade(lambda, r, desc.form);
    rep.generator = rational_gcd(rep.generator, g);
    rep.grades[g].push_back(r);
  }
  rep.degenerate = rep.generator.is_zero();
  for (const auto& [g, roots] : rep.grades) {
    long n = 0;
    if (!rep.degenerate) {
      const Rational q = g / rep.generator;
      if (q.denominator() != 1) throw GradingError("grade outside the cyclic group");
      n = q.numerator().get_si();
    }
    auto& bucket = rep.normalized[n];
    bucket.insert(bucket.end(), roots.begin(), roots.end());
  }
  return rep;
}

bool is_transversal(const Weight& lambda) { return !lambda.z.is_zero(); }

ParabolicRoots parabolic_roots(const Weight& lambda, const RootSystemDesc& desc, long window) {
  require_integral(lambda, desc, window);
  ParabolicRoots out;
  for (const auto& r : enumerate(desc, desc.J, -window, window)) {
    const Rational g = grade(lambda, r, desc.form);
    if (g.is_zero()) {
      out.zero.push_back(r);
    } else if (g > Rational(0)) {
      out.plus.push_back(r);
    } else {
      out.minus.push_back(r);
    }
  }
  out.degenerate = out.plus.empty() && out.minus.empty();
  return out;
}

CharacterResult character_check(const Weight& lambda, const std::vector<Weight>& candidate, const FormSpec& form) {
  for (const auto& r : candidate)
    if (!grade(lambda, r, form).is_zero()) return {false, r};
  return {};
}

CharacterResult character_check(const Weight& lambda, const Realization& real, const RootSpaces& rs) {
  for (const auto& [r, space] : rs.spaces) {
    if (!grade(lambda, r, real.desc().form).is_zero()) continue;
    const auto b = real.bracket(space.front(), rs.at(-r).front());
    if (!eval(lambda, b, real).is_zero()) return {false, r};
  }
  return {};
}

}  // namespace lars
