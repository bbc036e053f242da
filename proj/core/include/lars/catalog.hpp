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
 * @file catalog.hpp
 * @brief Catalog of locally finite and locally affine root systems.
 *
 * Locally finite systems over an index set J:
 *
 *   A_J  = { e_i - e_j : i != j }
 *   B_J  = { +-e_j } u { +-e_i +- e_j : i != j }
 *   C_J  = { +-2e_j } u { +-e_i +- e_j : i != j }
 *   D_J  = { +-e_i +- e_j : i != j }
 *   BC_J = B_J u C_J
 *
 * Locally affine systems are subsets of (finite part) x Z with isotropic
 * roots Z delta \ {0}. Untwisted X^(1) takes every finite root at every
 * level; the twisted families restrict long (B, C) or extralong (BC) roots
 * to a parity class of levels. The alternative C^(2) presentation puts the
 * long roots +-2e_j on odd levels.
 */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lars/root_model.hpp"

namespace lars {

enum class Level { Finite, Untwisted, Twisted };

std::string to_string(Level l);

enum class Sector { Short, Long, Extralong, Isotropic, Nonroot };

std::string to_string(Sector s);

struct RootSystemDesc {
  Family family = Family::A;
  Level level = Level::Untwisted;
  std::vector<Label> J;
  FormSpec form;
  /// C^(2) only: long roots sit on odd levels instead of even ones.
  bool alternative = false;

  /// J = {"1", ..., "n"}. Throws RootError for combinations outside the catalog.
  static RootSystemDesc make(Family family, Level level, std::size_t n, bool alternative = false);
  /// Parses "<family><n>:<level>" with level in {1, 2, finite}; a trailing
  /// "alt" selects the alternative presentation ("C4:2alt").
  static RootSystemDesc parse(std::string_view text);

  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool is_affine() const { return level != Level::Finite; }
  [[nodiscard]] bool has_label(const Label& j) const;
};

/// Arithmetic progression aZ + b with 0 <= b < a; `empty` marks the empty set.
struct Progression {
  long step = 1;
  long offset = 0;
  bool empty = false;

  static Progression none() { return {1, 0, true}; }
  [[nodiscard]] bool contains(const Rational& x) const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Rational progression aZ used for integral-weight conditions on lambda(delta^sharp).
struct RationalLattice {
  Rational step;
  [[nodiscard]] bool contains(const Rational& x) const;
  [[nodiscard]] std::string to_string() const;
};

struct FiberSets {
  Progression S;
  Progression L;
  Progression E;
  /// Minimal m >= 1 with m G + Delta_i contained in Delta_i, G = <S, L, E>.
  long m = 1;
};

/// True when the finite part lies in the locally finite system of `family` over J.
bool finite_member(Family family, const Coords& alpha);

/// Membership in Delta, isotropic roots included. Throws RootError on a
/// candidate that is not root-shaped.
bool contains(const RootSystemDesc& desc, const Weight& r);

Sector classify(const RootSystemDesc& desc, const Weight& r);

/// Roots of the locally finite system over `support` (finite parts only), in
/// the enumeration order below.
std::vector<Coords> finite_roots(Family family, const std::vector<Label>& support);

/// All roots with epsilon support inside `support` and delta coefficient in
/// [lo, hi], ordered by delta coefficient, then by coordinates along `support`.
std::vector<Weight> enumerate(const RootSystemDesc& desc, const std::vector<Label>& support, long lo, long hi);

struct AxiomVerdict {
  bool pass = true;
  std::string detail;
  std::vector<Weight> counterexample;
};

struct AxiomReport {
  std::map<std::string, AxiomVerdict> verdicts;  // keys A1..A5, R
  std::size_t root_count = 0;
  std::optional<Weight> isotropic_generator;
  [[nodiscard]] bool all_pass() const;
};

AxiomReport verify_axioms(const RootSystemDesc& desc, const std::vector<Label>& support, long lo, long hi);

/// alpha -> alpha + gamma(alpha_bar) delta.
class ShiftAutomorphism {
 public:
  explicit ShiftAutomorphism(Coords gamma) : gamma_(std::move(gamma)) {}
  [[nodiscard]] Weight apply(const Weight& r) const;
  [[nodiscard]] Weight operator()(const Weight& r) const { return apply(r); }
  [[nodiscard]] const Coords& gamma() const { return gamma_; }

 private:
  Coords gamma_;
};

/// Validates gamma against the family's integrality table; throws RootError
/// naming the violated sector.
ShiftAutomorphism section_shift_auto(const RootSystemDesc& desc, const Coords& gamma);

RationalLattice integral_weight_condition(const RootSystemDesc& desc);

FiberSets fiber_sets(const RootSystemDesc& desc);

}  // namespace lars
