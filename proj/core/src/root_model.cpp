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

#include "lars/root_model.hpp"

#include <algorithm>
#include <cctype>

namespace lars {

namespace {

bool all_digits(const Label& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

bool LabelLess::operator()(const Label& a, const Label& b) const {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da;
  if (da) {
    // Compare numerically without overflow: strip leading zeros, then length.
    const auto na = a.find_first_not_of('0');
    const auto nb = b.find_first_not_of('0');
    const std::string_view sa = na == Label::npos ? std::string_view{} : std::string_view(a).substr(na);
    const std::string_view sb = nb == Label::npos ? std::string_view{} : std::string_view(b).substr(nb);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  return a < b;
}

Coords::Coords(std::initializer_list<std::pair<const Label, Rational>> init) {
  for (const auto& [k, v] : init) add(k, v);
}

Rational Coords::get(const Label& j) const {
  const auto it = m_.find(j);
  return it == m_.end() ? Rational(0) : it->second;
}

void Coords::set(const Label& j, const Rational& v) {
  if (v.is_zero()) {
    m_.erase(j);
  } else {
    m_[j] = v;
  }
}

void Coords::add(const Label& j, const Rational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m_.try_emplace(j, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) m_.erase(it);
  }
}

Coords& Coords::operator+=(const Coords& o) {
  for (const auto& [k, v] : o.m_) add(k, v);
  return *this;
}

Coords& Coords::operator-=(const Coords& o) {
  for (const auto& [k, v] : o.m_) add(k, -v);
  return *this;
}

Coords& Coords::operator*=(const Rational& s) {
  if (s.is_zero()) {
    m_.clear();
    return *this;
  }
  for (auto& [k, v] : m_) v *= s;
  return *this;
}

Coords Coords::operator-() const {
  Coords c = *this;
  c *= Rational(-1);
  return c;
}

Rational dot(const Coords& a, const Coords& b) {
  const auto& small = a.m_.size() <= b.m_.size() ? a : b;
  const auto& large = a.m_.size() <= b.m_.size() ? b : a;
  Rational s;
  for (const auto& [k, v] : small.m_) {
    const auto it = large.m_.find(k);
    if (it != large.m_.end()) s += v * it->second;
  }
  return s;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
  }
  return "?";
}

namespace {

std::string coords_string(const Coords& c, const char* basis) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [k, v] : c.entries()) {
    if (!s.empty()) s += v.sign() > 0 ? "+" : "";
    if (v == Rational(-1)) {
      s += "-";
    } else if (v != Rational(1)) {
      s += v.to_string() + "*";
    }
    s += std::string(basis) + k;
  }
  return s;
}

}  // namespace

std::string CartanElement::to_string() const {
  return "(" + z.to_string() + ", " + coords_string(h, "h") + ", " + t.to_string() + ")";
}

bool Weight::is_root_shaped() const {
  if (!z.is_zero() || !t.is_integer()) return false;
  return std::all_of(f.entries().begin(), f.entries().end(),
                     [](const auto& kv) { return kv.second.is_integer(); });
}

std::string Weight::to_string() const {
  if (z.is_zero()) return "(" + coords_string(f, "e") + ", " + t.to_string() + ")";
  return "(c:" + z.to_string() + ", " + coords_string(f, "e") + ", d:" + t.to_string() + ")";
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.z != b.z) return a.z < b.z;
  if (a.t != b.t) return a.t < b.t;
  return std::lexicographical_compare(
      a.f.entries().begin(), a.f.entries().end(), b.f.entries().begin(), b.f.entries().end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return LabelLess{}(x.first, y.first);
        return x.second < y.second;
      });
}

FormSpec FormSpec::for_family(Family f) {
  return {f, f == Family::C ? Rational(1, 2) : Rational(1)};
}

Rational eval(const Weight& w, const CartanElement& x) {
  return x.z * w.z + dot(w.f, x.h) + x.t * w.t;
}

Rational inner(const Weight& a, const Weight& b, const FormSpec& form) {
  if (!a.z.is_zero() || !b.z.is_zero()) {
    throw RootError("invariant form is only defined on weights without central part");
  }
  return form.scale * dot(a.f, b.f);
}

CartanElement sharp(const Weight& a, const FormSpec& form) {
  if (!a.z.is_zero()) throw RootError("sharp is only defined on weights without central part");
  return {a.t, form.scale * a.f, Rational(0)};
}

CartanElement coroot(const Weight& r, const FormSpec& form) {
  const Rational norm = inner(r, r, form);
  if (norm.is_zero()) throw RootError("no coroot: " + r.to_string() + " is isotropic");
  return (Rational(2) / norm) * sharp(r, form);
}

Rational pair(const Weight& beta, const Weight& alpha, const FormSpec& form) {
  return eval(beta, coroot(alpha, form));
}

Weight reflect(const Weight& beta, const Weight& alpha, const FormSpec& form) {
  return beta - pair(beta, alpha, form) * alpha;
}

}  // namespace lars
