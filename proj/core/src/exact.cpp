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

#include "lars/exact.hpp"

#include <cctype>
#include <climits>
#include <sstream>

namespace lars {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw AlgebraError("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw AlgebraError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw AlgebraError("malformed rational literal: '" + std::string(s) + "'");
  }
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw AlgebraError("malformed rational literal: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw AlgebraError("inverse of zero");
  return Rational(mpq_class(v_.get_den(), v_.get_num()));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

long Rational::to_long() const {
  if (!is_integer()) throw AlgebraError("not an integer: " + to_string());
  if (!v_.get_num().fits_slong_p()) throw AlgebraError("integer out of range: " + to_string());
  return v_.get_num().get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw AlgebraError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
  mpz_class g;
  const mpz_class x = a.numerator() * b.denominator();
  const mpz_class y = b.numerator() * a.denominator();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Rational(g, a.denominator() * b.denominator());
}

// ---------------------------------------------------------------- Gaussian

Gaussian Gaussian::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw AlgebraError("inverse of zero");
  return {re_ / n, -im_ / n};
}

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string s;
  if (!re_.is_zero()) s = re_.to_string() + (im_.sign() > 0 ? "+" : "");
  return s + im_.to_string() + "i";
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(Gaussian constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

Laurent::Laurent(const Terms& terms) {
  for (const auto& [k, c] : terms) {
    if (!c.is_zero()) terms_.emplace(k, c);
  }
}

Laurent Laurent::monomial(std::int64_t degree, const Gaussian& coeff) {
  Laurent p;
  if (!coeff.is_zero()) p.terms_.emplace(degree, coeff);
  return p;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Gaussian Laurent::coeff(std::int64_t degree) const {
  const auto it = terms_.find(degree);
  return it == terms_.end() ? Gaussian() : it->second;
}

std::int64_t Laurent::min_degree() const {
  if (terms_.empty()) throw AlgebraError("degree of the zero polynomial");
  return terms_.begin()->first;
}

std::int64_t Laurent::max_degree() const {
  if (terms_.empty()) throw AlgebraError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Laurent Laurent::derive() const {
  Laurent p;
  for (const auto& [k, c] : terms_) {
    if (k != 0) p.terms_.emplace(k, c * Gaussian(Rational(k)));
  }
  return p;
}

Laurent Laurent::conj() const {
  Laurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, c.conj());
  return p;
}

Laurent Laurent::flip() const {
  Laurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(-k, c);
  return p;
}

Laurent Laurent::negate_variable() const {
  Laurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, (k % 2 == 0) ? c : -c);
  return p;
}

Laurent Laurent::substitute_power(std::int64_t k) const {
  if (k == 0) throw AlgebraError("substitution t -> t^0");
  Laurent p;
  for (const auto& [d, c] : terms_) p.terms_.emplace(d * k, c);
  return p;
}

Laurent Laurent::contract_power(std::int64_t k) const {
  if (k == 0) throw AlgebraError("contraction by 0");
  Laurent p;
  for (const auto& [d, c] : terms_) {
    if (d % k != 0) {
      throw AlgebraError("degree " + std::to_string(d) + " not divisible by " + std::to_string(k));
    }
    p.terms_.emplace(d / k, c);
  }
  return p;
}

Laurent Laurent::even_part() const {
  Laurent p;
  for (const auto& [k, c] : terms_) {
    if (k % 2 == 0) p.terms_.emplace(k, c);
  }
  return p;
}

Laurent Laurent::odd_part() const {
  Laurent p;
  for (const auto& [k, c] : terms_) {
    if (k % 2 != 0) p.terms_.emplace(k, c);
  }
  return p;
}

Laurent Laurent::shift(std::int64_t k) const {
  Laurent p;
  for (const auto& [d, c] : terms_) p.terms_.emplace(d + k, c);
  return p;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k != 0) os << "t^" << k;
  }
  return os.str();
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator*=(const Gaussian& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) {
      auto [it, inserted] = p.terms_.try_emplace(i + j, x * y);
      if (!inserted) it->second += x * y;
    }
  }
  std::erase_if(p.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return p;
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
  return p;
}

}  // namespace lars
