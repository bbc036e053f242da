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

#include "lars/weyl.hpp"

#include <algorithm>
#include <deque>

#include "lars/gcm.hpp"
#include "lars/linalg.hpp"

namespace lars {

OrbitResult orbit(const Weight& lambda, const std::vector<Weight>& generators, const OrbitBudget& budget,
                  const FormSpec& form) {
  std::vector<CartanElement> co;
  for (const auto& g : generators) co.push_back(coroot(g, form));
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  OrbitResult res;
  for (std::size_t len = 0; !frontier.empty(); ++len) {
    if (len == budget.max_word_length) {
      res.truncated = true;
      break;
    }
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        Weight img = w - eval(w, co[i]) * generators[i];
        if (seen.contains(img)) continue;
        if (seen.size() >= budget.max_elements) {
          res.truncated = true;
          continue;
        }
        seen.insert(img);
        next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  res.elements.assign(seen.begin(), seen.end());
  return res;
}

namespace {

void check_level(const Weight& lambda, const std::vector<Weight>& simple, const FormSpec& form) {
  const GCMatrix a = cartan_matrix(simple, form);
  for (const auto& comp : classify_type(a).components) {
    if (comp.type != GcmType::Affine) continue;
    Rational level;
    for (std::size_t k = 0; k < comp.indices.size(); ++k) {
      level += comp.witness[k] * eval(lambda, coroot(simple[comp.indices[k]], form));
    }
    if (level.is_zero()) throw WeylError("no dominant conjugate guaranteed: level zero on an affine component");
    if (level.sign() < 0) {
      throw WeylError("no dominant conjugate: negative level " + level.to_string() + " on an affine component");
    }
  }
}

}  // namespace

DominantResult to_dominant(const Weight& lambda, const std::vector<Weight>& simple, const FormSpec& form,
                           std::size_t max_steps) {
  check_level(lambda, simple, form);
  std::vector<CartanElement> co;
  for (const auto& s : simple) co.push_back(coroot(s, form));
  DominantResult res{{}, lambda};
  while (true) {
    std::size_t i = 0;
    Rational p;
    for (; i < simple.size(); ++i) {
      p = eval(res.dominant, co[i]);
      if (p.sign() < 0) break;
    }
    if (i == simple.size()) return res;
    if (res.word.size() == max_steps) throw WeylError("to_dominant: step limit exceeded", res.word);
    res.dominant = res.dominant - p * simple[i];
    res.word.push_back(i);
  }
}

Weight replay(const std::vector<std::size_t>& word, const Weight& dominant, const std::vector<Weight>& simple,
              const FormSpec& form) {
  Weight w = dominant;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(w, simple.at(*it), form);
  return w;
}

WeightSet weight_set(const Weight& lambda, const std::vector<Weight>& simple, const FormSpec& form,
                     long depth_bound, std::size_t max_steps) {
  std::vector<CartanElement> co;
  for (const auto& s : simple) co.push_back(coroot(s, form));
  for (std::size_t i = 0; i < simple.size(); ++i) {
    const Rational p = eval(lambda, co[i]);
    if (!p.is_integer()) {
      throw WeylError("weight is not integral: value " + p.to_string() + " on coroot " + std::to_string(i));
    }
  }
  WeightSet ws;
  ws.dominant = to_dominant(lambda, simple, form, max_steps).dominant;
  ws.elements.emplace(ws.dominant, 0);
  std::deque<std::pair<Weight, long>> queue{{ws.dominant, 0}};
  while (!queue.empty()) {
    const auto [mu, h] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < simple.size(); ++i) {
      const long k = eval(mu, co[i]).to_long();
      const long dir = k > 0 ? 1 : -1;
      for (long j = 1; j <= std::abs(k); ++j) {
        const long nh = h + dir * j;
        if (nh > depth_bound) {
          ws.truncated = true;
          ws.boundary.insert(mu);
          break;
        }
        Weight nu = mu - Rational(dir * j) * simple[i];
        if (ws.elements.emplace(nu, nh).second) queue.emplace_back(std::move(nu), nh);
      }
    }
  }
  return ws;
}

HullResult hull_membership(const Weight& mu, const std::vector<Weight>& sample) {
  if (sample.empty()) throw WeylError("hull_membership: empty sample");
  std::vector<Label> labels;
  const auto collect = [&](const Weight& w) {
    for (const auto& [k, v] : w.f.entries())
      if (std::find(labels.begin(), labels.end(), k) == labels.end()) labels.push_back(k);
  };
  collect(mu);
  for (const auto& w : sample) collect(w);
  // Rows: z, each label, t, and sum of coefficients = 1.
  const std::size_t rows = labels.size() + 3;
  QMatrix a(rows, sample.size());
  std::vector<Rational> b(rows);
  for (std::size_t j = 0; j < sample.size(); ++j) {
    a(0, j) = sample[j].z;
    for (std::size_t k = 0; k < labels.size(); ++k) a(1 + k, j) = sample[j].f.get(labels[k]);
    a(labels.size() + 1, j) = sample[j].t;
    a(labels.size() + 2, j) = Rational(1);
  }
  b[0] = mu.z;
  for (std::size_t k = 0; k < labels.size(); ++k) b[1 + k] = mu.f.get(labels[k]);
  b[labels.size() + 1] = mu.t;
  b[labels.size() + 2] = Rational(1);
  const auto lp = lp_feasible(a, b);
  HullResult res;
  res.member = lp.feasible;
  if (lp.feasible) res.coefficients = lp.solution;
  return res;
}

}  // namespace lars
