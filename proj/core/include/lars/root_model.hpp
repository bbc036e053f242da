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
 * @file root_model.hpp
 * @brief The Cartan space Kc + h + Kd, its dual, and the root calculus on it.
 *
 * A Cartan element is a triple (z, h, t) = z c + h + t d, where h is a
 * finitely supported diagonal element with coordinates on the basis dual to
 * the epsilon functionals. A weight is a triple (z, f, t) with z = value on
 * c, f = epsilon coordinates of the finite part and t = value on d. Roots
 * are weights with z = 0, integral epsilon coordinates and integral t (the
 * delta coefficient); the isotropic root delta is (0, 0, 1).
 *
 * The invariant form on the span of the roots is scale * sum_j f_j f'_j;
 * delta is isotropic. Coroots satisfy r(coroot(r)) = 2 and are the images
 * of 2 r / (r, r) under the form transport (the "sharp" map) that sends
 * delta to c.
 */

#include <map>
#include <string>
#include <vector>

#include "lars/exact.hpp"

namespace lars {

/// Raised when a root-calculus precondition fails (isotropic root, weight
/// with central part where none is allowed, malformed candidate root).
class RootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Opaque index label. Labels consisting of digits compare numerically and
/// sort before all other labels, which compare lexicographically.
using Label = std::string;

struct LabelLess {
  bool operator()(const Label& a, const Label& b) const;
};

/// Finitely supported rational coordinates; zero entries are never stored.
class Coords {
 public:
  using Map = std::map<Label, Rational, LabelLess>;

  Coords() = default;
  Coords(std::initializer_list<std::pair<const Label, Rational>> init);

  [[nodiscard]] Rational get(const Label& j) const;
  void set(const Label& j, const Rational& v);
  void add(const Label& j, const Rational& v);
  [[nodiscard]] const Map& entries() const { return m_; }
  [[nodiscard]] bool is_zero() const { return m_.empty(); }
  [[nodiscard]] std::size_t support_size() const { return m_.size(); }

  Coords& operator+=(const Coords& o);
  Coords& operator-=(const Coords& o);
  Coords& operator*=(const Rational& s);
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(const Rational& s, Coords a) { return a *= s; }
  Coords operator-() const;
  friend bool operator==(const Coords&, const Coords&) = default;

  /// Euclidean pairing sum_j a_j b_j.
  friend Rational dot(const Coords& a, const Coords& b);

 private:
  Map m_;
};

enum class Family { A, B, C, D, BC };

std::string to_string(Family f);

/// Element z c + h + t d of the Cartan subalgebra.
struct CartanElement {
  Rational z;
  Coords h;
  Rational t;

  static CartanElement c() { return {Rational(1), {}, Rational(0)}; }
  static CartanElement d() { return {Rational(0), {}, Rational(1)}; }

  friend bool operator==(const CartanElement&, const CartanElement&) = default;
  friend CartanElement operator+(const CartanElement& a, const CartanElement& b) {
    return {a.z + b.z, a.h + b.h, a.t + b.t};
  }
  friend CartanElement operator*(const Rational& s, const CartanElement& a) {
    return {s * a.z, s * a.h, s * a.t};
  }
  [[nodiscard]] std::string to_string() const;
};

/// Linear functional on the Cartan subalgebra: (value on c, epsilon
/// coordinates, value on d).
struct Weight {
  Rational z;
  Coords f;
  Rational t;

  static Weight delta() { return {Rational(0), {}, Rational(1)}; }
  /// Root (alpha, m): z = 0, finite part alpha, delta coefficient m.
  static Weight root(Coords alpha, long m) { return {Rational(0), std::move(alpha), Rational(m)}; }

  /// z = 0, integral epsilon coordinates and integral delta coefficient.
  [[nodiscard]] bool is_root_shaped() const;
  [[nodiscard]] bool is_zero() const { return z.is_zero() && f.is_zero() && t.is_zero(); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b);
  friend Weight operator+(const Weight& a, const Weight& b) { return {a.z + b.z, a.f + b.f, a.t + b.t}; }
  friend Weight operator-(const Weight& a, const Weight& b) { return {a.z - b.z, a.f - b.f, a.t - b.t}; }
  friend Weight operator*(const Rational& s, const Weight& a) { return {s * a.z, s * a.f, s * a.t}; }
  Weight operator-() const { return {-z, -f, -t}; }
};

/// Normalization of the epsilon form: (e_i, e_j) = scale * delta_ij.
struct FormSpec {
  Family family = Family::A;
  Rational scale{1};

  /// Scale 1/2 for family C (long roots +-2e_j of square length 2), 1 otherwise.
  static FormSpec for_family(Family f);
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

/// lambda(z c + h + t d) = z lambda(c) + lambda_0(h) + t lambda(d).
Rational eval(const Weight& w, const CartanElement& x);

/// Invariant form on the span of the roots; delta is isotropic. Throws
/// RootError when either argument has a nonzero central part.
Rational inner(const Weight& a, const Weight& b, const FormSpec& form);

/// Form transport of a z-free weight into the Cartan subalgebra: delta maps
/// to c and e_j to scale * e_j.
CartanElement sharp(const Weight& a, const FormSpec& form);

/// Coroot 2 r^sharp / (r, r). Throws RootError("no coroot") for isotropic r.
CartanElement coroot(const Weight& r, const FormSpec& form);

/// <beta, alpha> = beta(coroot(alpha)); equals 2 (alpha, beta) / (alpha, alpha)
/// for z-free beta.
Rational pair(const Weight& beta, const Weight& alpha, const FormSpec& form);

/// r_alpha(beta) = beta - <beta, alpha> alpha.
Weight reflect(const Weight& beta, const Weight& alpha, const FormSpec& form);

}  // namespace lars
