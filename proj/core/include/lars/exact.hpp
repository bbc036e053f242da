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
 * @file exact.hpp
 * @brief Exact scalars: rationals, Gaussian rationals Q(i), and Laurent
 * polynomials in one variable t with Gaussian coefficients.
 *
 * Every value is canonical after construction, so structural equality is
 * mathematical equality. No floating point is used anywhere.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lars {

/// Raised for violated preconditions of the exact algebra (division by
/// zero, malformed literals, non-integral values where integers are needed).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : v_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q", "p" or "-p/q". Throws AlgebraError on malformed input.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;
  /// Largest integer not exceeding the value.
  [[nodiscard]] mpz_class floor() const;
  /// Value as a machine integer; throws if not an integer or out of range.
  [[nodiscard]] long to_long() const;
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

  [[nodiscard]] const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// Nonnegative generator of the subgroup of Q generated by a and b.
Rational rational_gcd(const Rational& a, const Rational& b);

/// Element re + im*i of the Gaussian rationals Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] Gaussian conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
  [[nodiscard]] Gaussian inverse() const;
  [[nodiscard]] std::string to_string() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) {
    return os << g.to_string();
  }

 private:
  Rational re_;
  Rational im_;
};

/// Free-function form of complex conjugation.
inline Gaussian gaussian_conj(const Gaussian& a) { return a.conj(); }

/// Laurent polynomial sum_k c_k t^k with Gaussian coefficients. Zero
/// coefficients are never stored; the empty map is the zero polynomial.
class Laurent {
 public:
  using Terms = std::map<std::int64_t, Gaussian>;

  Laurent() = default;
  Laurent(Gaussian constant);  // NOLINT(google-explicit-constructor)
  Laurent(long constant) : Laurent(Gaussian(constant)) {}  // NOLINT
  explicit Laurent(const Terms& terms);

  static Laurent monomial(std::int64_t degree, const Gaussian& coeff = Gaussian(1));

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// True when only the degree-0 coefficient may be nonzero.
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Gaussian coeff(std::int64_t degree) const;
  [[nodiscard]] std::int64_t min_degree() const;
  [[nodiscard]] std::int64_t max_degree() const;

  /// t d/dt.
  [[nodiscard]] Laurent derive() const;
  /// Coefficientwise complex conjugation.
  [[nodiscard]] Laurent conj() const;
  /// t -> t^{-1}.
  [[nodiscard]] Laurent flip() const;
  /// t -> -t.
  [[nodiscard]] Laurent negate_variable() const;
  /// t -> t^k for k != 0.
  [[nodiscard]] Laurent substitute_power(std::int64_t k) const;
  /// Inverse of substitute_power: t^{k m} -> t^m. Throws if some degree is
  /// not divisible by k.
  [[nodiscard]] Laurent contract_power(std::int64_t k) const;
  /// Parts of even / odd degree.
  [[nodiscard]] Laurent even_part() const;
  [[nodiscard]] Laurent odd_part() const;
  /// Multiplication by t^k.
  [[nodiscard]] Laurent shift(std::int64_t k) const;
  [[nodiscard]] std::string to_string() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Gaussian& s);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Gaussian& s) { return a *= s; }
  friend Laurent operator*(const Gaussian& s, Laurent a) { return a *= s; }
  Laurent operator-() const;

  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    return os << p.to_string();
  }

 private:
  Terms terms_;
};

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) { return a * b; }
inline Gaussian laurent_coeff(const Laurent& a, std::int64_t degree) { return a.coeff(degree); }

}  // namespace lars
