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
 * @file certificates.hpp
 * @brief Finite-size certificates for isomorphisms and non-isomorphisms
 * between double-extended loop realizations.
 *
 * The three isomorphisms hold only for infinite label sets, where a
 * realization with labels J and one with labels J' absorb each other. At
 * finite size they are certified by a pair of injective Lie algebra maps
 * J -> J' and J' -> J + more, each built from an isometric embedding e of
 * the underlying quadratic spaces:
 *
 *   psi(x)   = scale_t( Ad(w(t)) (e x e+) ),  e+ = S_src^-1 e^T S_dst
 *   psi^(c)  = r c,       r = rho s_dst / s_src
 *   psi^(x)  = psi(x) + rho s_dst tr0(H psi(x)) c
 *   psi^(d)  = (1/rho) d - H - (rho s_dst tr(H^2) / 2) c
 *
 * where w(t) = diag(t^weight), H = diag(weight), scale_t rescales Laurent
 * degrees by rho in {1/2, 1, 2} and s is the trace scale. These corrections
 * make psi^ bracket preserving, and it multiplies the invariant form by the
 * constant s_dst / s_src.
 */

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lars/double_ext.hpp"

namespace lars {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmbeddingMap {
  RootSystemDesc source;
  RootSystemDesc target;
  /// Target slots x source slots, and its form adjoint.
  QMatrix e;
  QMatrix e_plus;
  /// Degree weight per target slot.
  std::vector<int> weights;
  Rational rho{1};
  std::string note;

  [[nodiscard]] Rational central_scale(const Realization& src, const Realization& dst) const;
  [[nodiscard]] ExtElement apply(const ExtElement& a, const Realization& src, const Realization& dst) const;
};

/// Slot images as weighted target slot names, e.g. {"0", {{"+4", 1}, {"-4", 1/2}}}.
using SlotImages = std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rational>>>>;

/// Builds e from slot images (unlisted source slots map to the target slot
/// of the same name) and checks that it is an isometry of the defining forms.
EmbeddingMap make_embedding(const Realization& src, const Realization& dst, const SlotImages& images,
                            std::vector<int> weights = {}, Rational rho = Rational(1), std::string note = {});

enum class IsoPair { BD, CBC, BB };

std::string to_string(IsoPair p);
IsoPair parse_iso_pair(std::string_view s);

/// The two embeddings certifying the pair at label size n.
std::vector<EmbeddingMap> iso_pair_maps(IsoPair pair, std::size_t n);

struct EmbeddingCheck {
  bool ok = true;
  std::size_t basis_size = 0;
  std::size_t pairs_checked = 0;
  /// The map multiplies the invariant form by s_dst / s_src.
  Rational form_factor{1};
  std::string failure;
};

/// Window basis of a realization: root vectors, finite Cartan part, c, d.
std::vector<ExtElement> window_basis(const Realization& real, long window);

/// Checks membership of every image, bracket preservation and form
/// proportionality on every pair of the given basis.
EmbeddingCheck verify_embedding(const EmbeddingMap& map, const std::vector<ExtElement>& basis);

struct ObstructionEvidence {
  LoopMatrix x;
  LoopMatrix conjugator;
  LoopMatrix structure;
  Gaussian p3_x;
  Gaussian p3_conjugated;
  Gaussian p3_neg_transposed;

  /// p3(x) != 0, p3 fixed by conjugation and negated by -S x^T S^-1.
  [[nodiscard]] bool holds() const;
};

/// Recomputes the p3 values from the three matrices.
ObstructionEvidence obstruction_from(LoopMatrix x, LoopMatrix conjugator, LoopMatrix structure);

/// Random traceless integer matrix x of the given size with p3(x) != 0, a
/// random invertible conjugator, and the structure matrix of the signed
/// scheme of that size (S- for even sizes, the odd S otherwise).
ObstructionEvidence sample_obstruction(std::size_t size, std::mt19937_64& rng);

}  // namespace lars
