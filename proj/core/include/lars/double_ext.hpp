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
 * @file double_ext.hpp
 * @brief Double extensions of (twisted) loop algebras and their root data.
 *
 * Elements are triples (z, x, t) = z c + x + t d with bracket
 *
 *   [(z, x, t), (z', x', t')] = (w(x, x'), [x, x'] + t D x' - t' D x, 0)
 *
 * where D = t d/dt, w(x, y) = k(Dx, y) and k = s * (degree-0 part of tr(xy)).
 * The trace scale s is chosen per realization so that k restricted to the
 * Cartan subalgebra is the transport of the normalized root form.
 *
 * Realizations (slot weights in parentheses):
 *   A^(1)   sl_J                     (j: e_j)
 *   B^(1)   o_2J+1                   (+j: e_j, 0: 0, -j: -e_j)
 *   C^(1)   sp_2J
 *   D^(1)   o_2J
 *   B^(2)   o_2J' with J' = J + {j0}, sigma = Ad(g), g swapping +j0 and -j0
 *   C^(2)   sl_2J, sigma(x) = -S- x^T S-^-1
 *   C^(2) alternative: sl_2J with S+ in place of S-
 *   BC^(2)  sl_2J+1, sigma(x) = -S x^T S^-1 with the odd S
 */

#include <map>
#include <optional>
#include <vector>

#include "lars/catalog.hpp"
#include "lars/loop.hpp"

namespace lars {

class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtElement {
  Gaussian z;
  LoopMatrix x;
  Gaussian t;

  explicit ExtElement(SchemePtr s) : x(std::move(s)) {}
  ExtElement(Gaussian z_, LoopMatrix x_, Gaussian t_) : z(std::move(z_)), x(std::move(x_)), t(std::move(t_)) {}
  static ExtElement c(const SchemePtr& s) { return {Gaussian(1), LoopMatrix(s), Gaussian(0)}; }
  static ExtElement d(const SchemePtr& s) { return {Gaussian(0), LoopMatrix(s), Gaussian(1)}; }

  [[nodiscard]] bool is_zero() const { return z.is_zero() && x.is_zero() && t.is_zero(); }
  [[nodiscard]] std::string to_string() const;

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) { return {a.z + b.z, a.x + b.x, a.t + b.t}; }
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) { return {a.z - b.z, a.x - b.x, a.t - b.t}; }
  friend ExtElement operator*(const Gaussian& s, const ExtElement& a) {
    return {s * a.z, Laurent(s) * a.x, s * a.t};
  }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.z == b.z && a.x == b.x && a.t == b.t;
  }
};

ExtElement ext_bracket(const ExtElement& a, const ExtElement& b, const Rational& trace_scale = Rational(1));
Gaussian ext_form(const ExtElement& a, const ExtElement& b, const Rational& trace_scale = Rational(1));

class Realization {
 public:
  /// Realization of an affine catalog descriptor; throws RealizationError
  /// for finite levels.
  static Realization make(const RootSystemDesc& desc);

  [[nodiscard]] const RootSystemDesc& desc() const { return desc_; }
  [[nodiscard]] const AlgebraTag& tag() const { return tag_; }
  [[nodiscard]] const std::optional<InvolutionSpec>& sigma() const { return sigma_; }
  [[nodiscard]] const SchemePtr& scheme() const { return tag_.scheme; }
  [[nodiscard]] const Rational& trace_scale() const { return trace_scale_; }
  /// Cartan weight (epsilon coordinates over desc().J) of each slot.
  [[nodiscard]] const std::vector<Coords>& slot_weights() const { return slot_weights_; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] ExtElement bracket(const ExtElement& a, const ExtElement& b) const {
    return ext_bracket(a, b, trace_scale_);
  }
  [[nodiscard]] Gaussian form(const ExtElement& a, const ExtElement& b) const { return ext_form(a, b, trace_scale_); }
  /// Matrix part lies in the algebra and is fixed by the twisted involution.
  [[nodiscard]] bool contains(const ExtElement& a) const;

  /// Diagonal matrix of a Cartan element; throws for h outside the Cartan
  /// subalgebra (e.g. non-traceless h for sl_J).
  [[nodiscard]] ExtElement embed(const CartanElement& h) const;
  /// Inverse of embed; nullopt if the element is not in the Cartan subalgebra.
  [[nodiscard]] std::optional<CartanElement> to_cartan(const ExtElement& a) const;
  /// c, d and a basis of the finite Cartan part.
  [[nodiscard]] std::vector<ExtElement> cartan_basis() const;
  [[nodiscard]] std::size_t cartan_rank() const;

 private:
  Realization(RootSystemDesc desc, AlgebraTag tag, std::optional<InvolutionSpec> sigma, Rational trace_scale);
  RootSystemDesc desc_;
  AlgebraTag tag_;
  std::optional<InvolutionSpec> sigma_;
  Rational trace_scale_;
  std::vector<Coords> slot_weights_;
};

/// Value of a weight on a Cartan element of the realization.
Gaussian eval(const Weight& w, const ExtElement& h, const Realization& real);

struct RootSpaces {
  long max_degree = 0;
  /// Root -> deterministic basis (reduced echelon kernel of the defining
  /// constraints); the zero weight at degree 0 is kept separately.
  std::map<Weight, std::vector<ExtElement>> spaces;
  std::vector<ExtElement> cartan_part;

  [[nodiscard]] const std::vector<ExtElement>& at(const Weight& r) const;
  [[nodiscard]] std::vector<Weight> roots() const;
};

/// Exact simultaneous eigenspace decomposition for Laurent degrees |q| <=
/// max_degree. Throws RealizationError on any weight outside the catalog, a
/// non-isotropic space of dimension != 1, a failed eigenvector check, or a
/// degree-0 weight-0 space larger than the Cartan subalgebra.
RootSpaces root_spaces(const Realization& real, long max_degree);

/// True iff the extracted root set equals the catalog enumeration over the
/// same degree window.
bool matches_catalog(const Realization& real, const RootSpaces& rs);

/// [x_a, x_-a] rescaled so that a takes the value 2. Throws RealizationError
/// when a vanishes on the bracket.
ExtElement coroot_from_bracket(const Realization& real, const RootSpaces& rs, const Weight& alpha);

struct IntegrabilityReport {
  bool nilpotent = true;
  /// Largest k with (ad x)^k y != 0 over the tested y.
  int max_power = 0;
};

/// ad x_a and ad x_-a are nilpotent on the span of the root spaces of F and
/// the Cartan subalgebra. Throws RootError("no coroot") for isotropic a and
/// RealizationError("enlarge window") if F leaves the extracted window.
IntegrabilityReport check_integrable(const Realization& real, const RootSpaces& rs, const Weight& alpha,
                                     const std::vector<Weight>& F, int max_power = 8);

}  // namespace lars
