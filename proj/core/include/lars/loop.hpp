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
 * @file loop.hpp
 * @brief Finite-support matrices over Laurent polynomials and the classical
 * matrix Lie algebras they carry.
 *
 * Index schemes:
 *   J      slots j
 *   2J     slots +j then -j
 *   2J+1   slots +j, then 0, then -j
 *
 * Structure matrices on the signed schemes:
 *   S+ = sum E(j,-j) + E(-j,j)            o_2J  = { x : x^T S+ + S+ x = 0 }
 *   S- = sum E(j,-j) - E(-j,j)            sp_2J = { x : x^T S- + S- x = 0 }
 *   S  = E(0,0) + sum E(j,-j) + E(-j,j)   o_2J+1 likewise
 */

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lars/linalg.hpp"
#include "lars/root_model.hpp"

namespace lars {

class LoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MatrixScheme {
 public:
  enum class Kind { J, TwoJ, TwoJ1 };

  MatrixScheme(Kind kind, std::vector<Label> labels);
  static std::shared_ptr<const MatrixScheme> make(Kind kind, std::vector<Label> labels);
  /// Parses "J", "2J", "2J+1".
  static Kind parse_kind(std::string_view s);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] std::string kind_name() const;
  [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  /// Slot names: "j" for scheme J, "+j" / "-j" / "0" otherwise.
  [[nodiscard]] const std::string& name(std::size_t slot) const { return names_.at(slot); }
  [[nodiscard]] std::size_t slot(std::string_view name) const;
  [[nodiscard]] std::size_t plus(std::size_t label_index) const;
  [[nodiscard]] std::size_t minus(std::size_t label_index) const;
  [[nodiscard]] std::size_t zero() const;
  /// Slot paired with `slot` by S: +j <-> -j, 0 <-> 0. Throws on scheme J.
  [[nodiscard]] std::size_t partner(std::size_t slot) const;
  /// +1 for +j and 0, -1 for -j.
  [[nodiscard]] int sign(std::size_t slot) const;
  /// Index into labels() of a signed slot; nullopt for 0.
  [[nodiscard]] std::optional<std::size_t> label_index(std::size_t slot) const;

  friend bool operator==(const MatrixScheme& a, const MatrixScheme& b) {
    return a.kind_ == b.kind_ && a.labels_ == b.labels_;
  }

 private:
  Kind kind_;
  std::vector<Label> labels_;
  std::vector<std::string> names_;
};

using SchemePtr = std::shared_ptr<const MatrixScheme>;

/// Matrix with finitely many nonzero Laurent entries.
class LoopMatrix {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using Entries = std::map<Key, Laurent>;

  explicit LoopMatrix(SchemePtr scheme) : scheme_(std::move(scheme)) {}
  static LoopMatrix unit(const SchemePtr& s, std::size_t r, std::size_t c, const Laurent& coeff = Laurent(1));
  static LoopMatrix identity(const SchemePtr& s);
  /// Constant matrix from a dense rational or Gaussian matrix.
  static LoopMatrix from_dense(const SchemePtr& s, const CMatrix& m);

  [[nodiscard]] const SchemePtr& scheme() const { return scheme_; }
  [[nodiscard]] const Entries& entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] Laurent get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Laurent& v);
  void add(std::size_t r, std::size_t c, const Laurent& v);

  [[nodiscard]] LoopMatrix transpose() const;
  /// Entrywise complex conjugation of coefficients.
  [[nodiscard]] LoopMatrix conj() const;
  /// Entrywise map on the Laurent entries.
  template <typename F>
  [[nodiscard]] LoopMatrix map_entries(F f) const {
    LoopMatrix out(scheme_);
    for (const auto& [k, v] : entries_) out.set(k.first, k.second, f(v));
    return out;
  }
  [[nodiscard]] bool is_constant() const;
  /// Degree-q coefficient matrix as a constant LoopMatrix.
  [[nodiscard]] LoopMatrix degree_part(std::int64_t q) const;
  [[nodiscard]] std::set<std::int64_t> degrees() const;
  [[nodiscard]] CMatrix dense_constant() const;
  [[nodiscard]] Laurent trace() const;
  [[nodiscard]] std::string to_string() const;

  LoopMatrix& operator+=(const LoopMatrix& o);
  LoopMatrix& operator-=(const LoopMatrix& o);
  friend LoopMatrix operator+(LoopMatrix a, const LoopMatrix& b) { return a += b; }
  friend LoopMatrix operator-(LoopMatrix a, const LoopMatrix& b) { return a -= b; }
  friend LoopMatrix operator*(const Laurent& s, const LoopMatrix& a);
  friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
  LoopMatrix operator-() const;
  friend bool operator==(const LoopMatrix& a, const LoopMatrix& b);

 private:
  void require_same(const LoopMatrix& o) const;
  SchemePtr scheme_;
  Entries entries_;
};

/// xy - yx.
LoopMatrix bracket(const LoopMatrix& x, const LoopMatrix& y);

/// Degree-0 coefficient of tr(xy).
Gaussian loop_form(const LoopMatrix& x, const LoopMatrix& y);

/// Entrywise t d/dt.
LoopMatrix derive_D(const LoopMatrix& x);

struct AlgebraTag {
  enum class Kind { gl, sl, o2J, o2J1, sp };
  Kind kind = Kind::gl;
  SchemePtr scheme;
  /// Structure matrix for o2J (S+), o2J1 (odd S) and sp (S-).
  std::optional<LoopMatrix> S;

  static AlgebraTag gl(SchemePtr scheme);
  static AlgebraTag sl(SchemePtr scheme);
  static AlgebraTag o_even(const std::vector<Label>& J);
  static AlgebraTag o_odd(const std::vector<Label>& J);
  static AlgebraTag sp(const std::vector<Label>& J);
  [[nodiscard]] std::string name() const;
};

/// S+ (sign = +1) or S- (sign = -1) on a 2J scheme, odd S on 2J+1.
LoopMatrix structure_matrix(const SchemePtr& scheme, int sign);

bool member(const AlgebraTag& tag, const LoopMatrix& x);

/// Constant involutive automorphism of the matrix algebra.
class InvolutionSpec {
 public:
  enum class Kind { Adjoint, NegTransposeConj };

  /// x -> g x g^-1; g^2 must be scalar.
  static InvolutionSpec adjoint(const LoopMatrix& g);
  /// x -> -S x^T S^-1; S must be symmetric or skew.
  static InvolutionSpec neg_transpose(const LoopMatrix& S);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const LoopMatrix& matrix() const { return m_; }
  [[nodiscard]] const LoopMatrix& inverse_matrix() const { return inv_; }
  [[nodiscard]] LoopMatrix apply(const LoopMatrix& x) const;
  /// t^q x -> (-1)^q t^q sigma(x).
  [[nodiscard]] LoopMatrix apply_twisted(const LoopMatrix& x) const;

 private:
  InvolutionSpec(Kind k, LoopMatrix m, LoopMatrix inv) : kind_(k), m_(std::move(m)), inv_(std::move(inv)) {}
  Kind kind_;
  LoopMatrix m_;
  LoopMatrix inv_;
};

/// Inverse of a constant matrix; throws LoopError if singular.
LoopMatrix constant_inverse(const LoopMatrix& m);

LoopMatrix apply_involution(const InvolutionSpec& sigma, const LoopMatrix& x);

/// Fixed by the twisted involution: even degrees in the +1 eigenspace, odd
/// degrees in the -1 eigenspace. Throws LoopError if x is not a member.
bool twisted_member(const LoopMatrix& x, const InvolutionSpec& sigma, const AlgebraTag& tag);

/// tr(x^3) of a constant matrix; throws LoopError for nonconstant input.
Gaussian p3(const LoopMatrix& x);

/// phi(x) = beta_{v,x} - beta_{x,v} with beta_{v,w}(u) = beta(v,u) w, i.e.
/// x (B^T v)^T - v (B^T x)^T for beta(a, b) = a^T B b. Requires beta(v,v) != 0
/// and beta(v,x) = 0.
LoopMatrix quad_phi(const SchemePtr& scheme, const std::vector<Rational>& v, const std::vector<Rational>& x,
                    const QMatrix& beta);

/// Integer weights per slot; conjugation by diag(t^w) shifts the degree of
/// entry (a, b) by w(a) - w(b).
struct BlockSpec {
  std::vector<int> weight;

  /// Blocks of V = Kv + V1+ + V1- + V2+ + V2- with weights (0, 1, -1, 0, 0);
  /// slots not listed in v1_plus or v1_minus get weight 0.
  static BlockSpec five_block(const SchemePtr& scheme, const std::vector<std::size_t>& v1_plus,
                              const std::vector<std::size_t>& v1_minus);
};

LoopMatrix conjugation_iso(const LoopMatrix& xi, const BlockSpec& blocks);

}  // namespace lars
