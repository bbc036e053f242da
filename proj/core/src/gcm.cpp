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

#include "lars/gcm.hpp"

#include <algorithm>
#include <numeric>

namespace lars {

std::string to_string(GcmType t) {
  switch (t) {
    case GcmType::Finite: return "finite";
    case GcmType::Affine: return "affine";
    case GcmType::Indefinite: return "indefinite";
  }
  return "?";
}

GCMatrix::GCMatrix(QMatrix entries) : a_(std::move(entries)) {
  if (a_.rows() != a_.cols()) throw GcmError("generalized Cartan matrix must be square");
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      const Rational& x = a_(i, j);
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + x.to_string();
      if (!x.is_integer()) throw GcmError("non-integer " + where);
      if (i == j && x != Rational(2)) throw GcmError("diagonal " + where + " is not 2");
      if (i != j && x > Rational(0)) throw GcmError("positive off-diagonal " + where);
      if (i != j && x.is_zero() != a_(j, i).is_zero()) throw GcmError("asymmetric zero pattern at " + where);
    }
  }
}

bool simple_system_check(const std::vector<Weight>& roots, const RootSystemDesc& desc) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].f.is_zero() || !contains(desc, roots[i])) return false;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const Weight diff = roots[i] - roots[j];
      if (diff.is_zero() || contains(desc, diff)) return false;
    }
  }
  std::vector<Label> sup;
  for (const auto& r : roots)
    for (const auto& [k, v] : r.f.entries())
      if (std::find(sup.begin(), sup.end(), k) == sup.end()) sup.push_back(k);
  QMatrix m(roots.size(), sup.size() + 1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t k = 0; k < sup.size(); ++k) m(i, k) = roots[i].f.get(sup[k]);
    m(i, sup.size()) = roots[i].t;
  }
  return rank(m) == roots.size();
}

std::vector<Weight> standard_simple_system(const RootSystemDesc& desc) {
  const auto& J = desc.J;
  const std::size_t n = J.size();
  const Rational one(1);
  std::vector<Weight> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(Weight::root(Coords{{J[i], one}, {J[i + 1], -one}}, 0));
  const Coords e1{{J.front(), one}};
  const Coords en{{J.back(), one}};
  Coords top;  // highest root of the reduced finite part whose negative closes the affine diagram
  switch (desc.family) {
    case Family::A:
      if (n < 2) throw RootError("A needs at least two labels");
      top = Coords{{J.front(), one}, {J.back(), -one}};
      break;
    case Family::B:
    case Family::BC:
      out.push_back(Weight::root(en, 0));
      top = n >= 2 ? Coords{{J[0], one}, {J[1], one}} : e1;
      break;
    case Family::C: out.push_back(Weight::root(Rational(2) * en, 0)); top = Rational(2) * e1; break;
    case Family::D:
      if (n < 2) throw RootError("D needs at least two labels");
      out.push_back(Weight::root(Coords{{J[n - 2], one}, {J[n - 1], one}}, 0));
      top = Coords{{J[0], one}, {J[1], one}};
      break;
  }
  if (desc.level == Level::Twisted) {
    // Twisted levels close the diagram with the lowest root that sits on level 1.
    if (desc.family == Family::B) top = e1;
    if (desc.family == Family::C) top = n >= 2 ? Coords{{J[0], one}, {J[1], one}} : e1;
    if (desc.family == Family::BC) top = Rational(2) * e1;
  }
  if (desc.is_affine()) out.push_back(Weight::root(-top, 1));
  if (desc.alternative) {
    // Linear shift (a, m) -> (a, m + sum(a)/2) carries C^(2) onto the alternative presentation.
    for (auto& r : out) {
      Rational s;
      for (const auto& [k, v] : r.f.entries()) s += v;
      r.t += s / Rational(2);
    }
  }
  return out;
}

GCMatrix cartan_matrix(const std::vector<Weight>& roots, const FormSpec& form) {
  QMatrix a(roots.size(), roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) a(i, j) = pair(roots[i], roots[j], form);
  // Symmetric companion ((alpha_i, alpha_j)) must exist for a root-system matrix.
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (inner(roots[i], roots[j], form) != inner(roots[j], roots[i], form)) throw GcmError("form is not symmetric");
  return GCMatrix(std::move(a));
}

std::vector<std::vector<std::size_t>> components(const GCMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] < 0 && !a(i, j).is_zero()) {
          comp[j] = comp[s];
          members.push_back(j);
          stack.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

QMatrix sub(const QMatrix& a, const std::vector<std::size_t>& idx) {
  QMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = a(idx[i], idx[j]);
  return s;
}

// Scales a vector of one sign to a positive primitive integer vector;
// returns empty if the entries are not all nonzero of one sign.
std::vector<Rational> positive_primitive(std::vector<Rational> v) {
  if (v.empty()) return {};
  const int sgn = v.front().sign();
  if (sgn == 0) return {};
  for (const auto& x : v)
    if (x.sign() != sgn) return {};
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class g = 0;
  for (auto& x : v) {
    x = x * Rational(l) * Rational(sgn);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
  }
  for (auto& x : v) x = x / Rational(g);
  return v;
}

// Exists n >= 1 (entrywise) with sign * A n >= 1?
std::optional<std::vector<Rational>> strict_positive_image(const QMatrix& a, int sign) {
  const std::size_t n = a.rows();
  // sign*A(1 + x) - s = 1, x, s >= 0  <=>  [sign*A, -I] (x, s) = 1 - sign*A 1.
  QMatrix lp(n, 2 * n);
  std::vector<Rational> rhs(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lp(i, j) = Rational(sign) * a(i, j);
      rhs[i] -= Rational(sign) * a(i, j);
    }
    lp(i, n + i) = Rational(-1);
  }
  const auto res = lp_feasible(lp, rhs);
  if (!res.feasible) return std::nullopt;
  std::vector<Rational> u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = Rational(1) + res.solution[j];
  return u;
}

}  // namespace

GcmTypeReport classify_type(const GCMatrix& a) {
  GcmTypeReport rep;
  for (const auto& idx : components(a)) {
    GcmComponent c;
    c.indices = idx;
    const QMatrix s = sub(a.matrix(), idx);
    const auto ker = nullspace(s);
    std::vector<Rational> pos = ker.size() == 1 ? positive_primitive(ker[0]) : std::vector<Rational>{};
    if (!pos.empty()) {
      c.type = GcmType::Affine;
      c.witness = std::move(pos);
    } else if (auto u = strict_positive_image(s, 1); u && !determinant(s).is_zero()) {
      c.type = GcmType::Finite;
      c.witness = std::move(*u);
    } else {
      c.type = GcmType::Indefinite;
      if (auto w = strict_positive_image(s, -1)) c.witness = std::move(*w);
    }
    rep.type = std::max(rep.type, c.type);
    rep.components.push_back(std::move(c));
  }
  return rep;
}

std::optional<std::vector<Rational>> symmetrizer(const GCMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::optional<Rational>> e(n);
  for (const auto& comp : components(a)) {
    e[comp.front()] = Rational(1);
    std::vector<std::size_t> stack{comp.front()};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j).is_zero()) continue;
        // a_ij e_j = a_ji e_i
        const Rational ej = a(j, i) * *e[i] / a(i, j);
        if (!e[j]) {
          e[j] = ej;
          stack.push_back(j);
        } else if (*e[j] != ej) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Rational> out;
  for (const auto& x : e) out.push_back(*x);
  return out;
}

std::vector<Rational> coroot_labels(const GCMatrix& a) {
  const auto ker = nullspace(a.matrix());
  auto v = ker.size() == 1 ? positive_primitive(ker[0]) : std::vector<Rational>{};
  if (v.empty()) throw GcmError("matrix is not of indecomposable affine type");
  return v;
}

std::vector<Rational> root_labels(const GCMatrix& a) {
  const auto ker = nullspace(a.matrix().transpose());
  auto v = ker.size() == 1 ? positive_primitive(ker[0]) : std::vector<Rational>{};
  if (v.empty()) throw GcmError("matrix is not of indecomposable affine type");
  return v;
}

}  // namespace lars
