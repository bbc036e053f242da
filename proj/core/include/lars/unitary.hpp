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
 * @file unitary.hpp
 * @brief Antilinear star involution on double extensions, the hermitian
 * form k(x, y*) and exact semidefiniteness certificates.
 *
 * star(z c + sum_q t^q x_q + t d) = conj(z) c + sum_q t^-q conj(x_q)^T + conj(t) d.
 */

#include "lars/double_ext.hpp"
#include "lars/linalg.hpp"

namespace lars {

class UnitaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StarInvolution {
 public:
  /// Throws UnitaryError if star does not commute with the realization's
  /// twisted involution (checked on every matrix unit) or does not preserve
  /// the matrix algebra.
  static StarInvolution make(const Realization& real);
  /// star followed by conjugation with diag(signs); still an antilinear
  /// involutive antiautomorphism, but with the wrong sign on root vectors
  /// joining slots of opposite sign. Used as a sentinel.
  static StarInvolution with_signs(const Realization& real, std::vector<int> signs);

  [[nodiscard]] ExtElement apply(const ExtElement& x) const;
  [[nodiscard]] ExtElement operator()(const ExtElement& x) const { return apply(x); }

 private:
  StarInvolution() = default;
  std::vector<int> signs_;
};

/// The plain formula, without compatibility checks.
ExtElement star(const ExtElement& x);

/// G(i, j) = k(b_i, star(b_j)).
CMatrix kappa_sigma_gram(const Realization& real, const std::vector<ExtElement>& basis, const StarInvolution& s);

/// Exact pivoted elimination; throws AlgebraError for non-hermitian input.
PsdReport is_psd_hermitian(const CMatrix& g);

/// Window basis of the core: root vectors of every window root and the
/// finite Cartan part, plus c.
std::vector<ExtElement> core_basis(const Realization& real, const RootSpaces& rs);

/// lambda with star(x) = lambda y, for y the unique multiple of y0 with
/// [x, y] equal to the coroot of alpha. Throws UnitaryError if star(x) is not
/// proportional to y0.
Gaussian star_factor(const Realization& real, const Weight& alpha, const ExtElement& x, const ExtElement& y0,
                     const StarInvolution& s);

/// star_factor of s for the canonical root vectors; throws UnitaryError
/// naming alpha unless the factor is a positive rational.
Rational check_root_sl2_positivity(const Realization& real, const RootSpaces& rs, const Weight& alpha,
                                   const StarInvolution& s);

}  // namespace lars
