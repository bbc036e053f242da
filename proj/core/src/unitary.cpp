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

#include "lars/unitary.hpp"

namespace lars {

ExtElement star(const ExtElement& x) {
  LoopMatrix out(x.x.scheme());
  for (const auto& [k, v] : x.x.entries()) out.set(k.second, k.first, v.conj().flip());
  return {x.z.conj(), std::move(out), x.t.conj()};
}

StarInvolution StarInvolution::make(const Realization& real) {
  const auto& s = real.scheme();
  for (std::size_t a = 0; a < s->size(); ++a)
    for (std::size_t b = 0; b < s->size(); ++b) {
      const ExtElement e{Gaussian(0), LoopMatrix::unit(s, a, b), Gaussian(0)};
      if (real.sigma()) {
        const auto lhs = real.sigma()->apply(star(e).x);
        const auto rhs = star({Gaussian(0), real.sigma()->apply(e.x), Gaussian(0)}).x;
        if (lhs != rhs) throw UnitaryError("star does not commute with the twisted involution of " + real.name());
      }
    }
  return {};
}

StarInvolution StarInvolution::with_signs(const Realization& real, std::vector<int> signs) {
  if (signs.size() != real.scheme()->size()) throw UnitaryError("one sign per slot expected");
  StarInvolution s = make(real);
  s.signs_ = std::move(signs);
  return s;
}

ExtElement StarInvolution::apply(const ExtElement& x) const {
  ExtElement y = star(x);
  if (signs_.empty()) return y;
  LoopMatrix m(y.x.scheme());
  for (const auto& [k, v] : y.x.entries()) m.set(k.first, k.second, Gaussian(signs_[k.first] * signs_[k.second]) * v);
  return {y.z, std::move(m), y.t};
}

CMatrix kappa_sigma_gram(const Realization& real, const std::vector<ExtElement>& basis, const StarInvolution& s) {
  CMatrix g(basis.size(), basis.size());
  std::vector<ExtElement> starred;
  starred.reserve(basis.size());
  for (const auto& b : basis) starred.push_back(s(b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = real.form(basis[i], starred[j]);
  return g;
}

PsdReport is_psd_hermitian(const CMatrix& g) { return psd_check(g); }

std::vector<ExtElement> core_basis(const Realization& real, const RootSpaces& rs) {
  std::vector<ExtElement> out{ExtElement::c(real.scheme())};
  for (const auto& h : rs.cartan_part) out.push_back(h);
  for (const auto& [_, space] : rs.spaces) out.insert(out.end(), space.begin(), space.end());
  return out;
}

Gaussian star_factor(const Realization& real, const Weight& alpha, const ExtElement& x, const ExtElement& y0,
                     const StarInvolution& s) {
  const Gaussian v = eval(alpha, real.bracket(x, y0), real);
  if (v.is_zero()) throw UnitaryError("root vanishes on [x_a, x_-a] at " + alpha.to_string());
  const ExtElement y = (Gaussian(2) / v) * y0;
  const ExtElement sx = s(x);
  for (const auto& [k, e] : y.x.entries()) {
    const auto& d = *e.terms().begin();
    const Gaussian lambda = sx.x.get(k.first, k.second).coeff(d.first) / d.second;
    if (sx == lambda * y) return lambda;
    break;
  }
  throw UnitaryError("star does not map the root space of " + alpha.to_string() + " onto its opposite");
}

Rational check_root_sl2_positivity(const Realization& real, const RootSpaces& rs, const Weight& alpha,
                                   const StarInvolution& s) {
  if (inner(alpha, alpha, real.desc().form).is_zero()) throw RootError("no coroot");
  const Gaussian lambda = star_factor(real, alpha, rs.at(alpha).front(), rs.at(-alpha).front(), s);
  if (!lambda.is_real() || lambda.re().sign() <= 0)
    throw UnitaryError("non-positive factor " + lambda.to_string() + " at " + alpha.to_string());
  return lambda.re();
}

}  // namespace lars
