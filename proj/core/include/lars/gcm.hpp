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
 * @file gcm.hpp
 * @brief Simple systems, generalized Cartan matrices and their type.
 *
 * Convention: a_ij = alpha_i(coroot_j) = <alpha_i, alpha_j>. Columns of A
 * pair against coroots, so a positive null vector of A gives the coroot
 * labels of the central element and a positive null vector of A^T the root
 * labels of delta.
 */

#include <optional>
#include <string>
#include <vector>

#include "lars/catalog.hpp"
#include "lars/linalg.hpp"

namespace lars {

class GcmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GcmType { Finite, Affine, Indefinite };

std::string to_string(GcmType t);

/// Square integer matrix with diagonal 2, nonpositive off-diagonal entries and
/// symmetric zero pattern. Stored over Q for use with the exact solvers.
class GCMatrix {
 public:
  /// Throws GcmError naming the first offending entry.
  explicit GCMatrix(QMatrix entries);

  [[nodiscard]] std::size_t size() const { return a_.rows(); }
  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  [[nodiscard]] const QMatrix& matrix() const { return a_; }
  friend bool operator==(const GCMatrix&, const GCMatrix&) = default;

 private:
  QMatrix a_;
};

struct GcmComponent {
  std::vector<std::size_t> indices;
  GcmType type = GcmType::Finite;
  /// Finite: n > 0 with A n > 0. Affine: integer n > 0, gcd 1, A n = 0.
  /// Indefinite: n > 0 with A n < 0 when one was found, else empty.
  std::vector<Rational> witness;
};

struct GcmTypeReport {
  GcmType type = GcmType::Finite;  // worst over components
  std::vector<GcmComponent> components;
};

/// Pairwise distinct, non-isotropic, linearly independent, and no pairwise
/// difference is a root of the given system.
bool simple_system_check(const std::vector<Weight>& roots, const RootSystemDesc& desc);

/// Standard simple system over J = (j_1, ..., j_n): e_i - e_{i+1} plus the
/// family's last node, and for affine levels the extra root of delta level 1
/// (level 0 for the alternative C^(2) presentation).
std::vector<Weight> standard_simple_system(const RootSystemDesc& desc);

GCMatrix cartan_matrix(const std::vector<Weight>& roots, const FormSpec& form);

/// Connected components of the graph with edges a_ij != 0.
std::vector<std::vector<std::size_t>> components(const GCMatrix& a);

GcmTypeReport classify_type(const GCMatrix& a);

/// Positive diagonal e with A diag(e) symmetric, normalized so the first
/// entry of each component is 1; nullopt if A is not symmetrizable.
std::optional<std::vector<Rational>> symmetrizer(const GCMatrix& a);

/// Strictly positive primitive integer vector spanning ker(A^T), for an
/// indecomposable affine matrix; these are the coefficients of delta.
std::vector<Rational> root_labels(const GCMatrix& a);

/// Strictly positive primitive integer vector spanning ker(A); coefficients
/// of the canonical central element on the simple coroots.
std::vector<Rational> coroot_labels(const GCMatrix& a);

}  // namespace lars
