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

#include "lars/double_ext.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lars {

namespace {

const Label kExtraLabel = "j0";

Rational as_rational(const Gaussian& g) {
  if (!g.is_real()) throw RealizationError("expected a real coefficient");
  return g.re();
}

}  // namespace

std::string ExtElement::to_string() const {
  std::ostringstream os;
  os << "(" << z.to_string() << ", " << x.to_string() << ", " << t.to_string() << ")";
  return os.str();
}

ExtElement ext_bracket(const ExtElement& a, const ExtElement& b, const Rational& trace_scale) {
  const LoopMatrix da = derive_D(a.x);
  const LoopMatrix db = derive_D(b.x);
  Gaussian z = Gaussian(trace_scale) * loop_form(da, b.x);
  LoopMatrix x = bracket(a.x, b.x) + Laurent(a.t) * db - Laurent(b.t) * da;
  return {std::move(z), std::move(x), Gaussian(0)};
}

Gaussian ext_form(const ExtElement& a, const ExtElement& b, const Rational& trace_scale) {
  return Gaussian(trace_scale) * loop_form(a.x, b.x) + a.z * b.t + b.z * a.t;
}

Realization::Realization(RootSystemDesc desc, AlgebraTag tag, std::optional<InvolutionSpec> sigma,
                         Rational trace_scale)
    : desc_(std::move(desc)), tag_(std::move(tag)), sigma_(std::move(sigma)), trace_scale_(std::move(trace_scale)) {
  const auto& sch = *tag_.scheme;
  slot_weights_.resize(sch.size());
  if (sch.kind() == MatrixScheme::Kind::J) {
    for (std::size_t i = 0; i < sch.size(); ++i) slot_weights_[i].set(sch.labels()[i], Rational(1));
    return;
  }
  for (std::size_t i = 0; i < sch.labels().size(); ++i) {
    const Label& j = sch.labels()[i];
    if (!desc_.has_label(j)) continue;
    slot_weights_[sch.plus(i)].set(j, Rational(1));
    slot_weights_[sch.minus(i)].set(j, Rational(-1));
  }
}

Realization Realization::make(const RootSystemDesc& desc) {
  using K = MatrixScheme::Kind;
  if (!desc.is_affine()) throw RealizationError("realizations exist for affine descriptors only");
  const auto& J = desc.J;
  const bool twisted = desc.level == Level::Twisted;
  // Trace scale 1 / (form scale * tr(H_j^2)).
  const auto scale_for = [&](long hsq) { return Rational(1) / (desc.form.scale * Rational(hsq)); };

  switch (desc.family) {
    case Family::A:
      return {desc, AlgebraTag::sl(MatrixScheme::make(K::J, J)), std::nullopt, scale_for(1)};
    case Family::D:
      return {desc, AlgebraTag::o_even(J), std::nullopt, scale_for(2)};
    case Family::B: {
      if (!twisted) return {desc, AlgebraTag::o_odd(J), std::nullopt, scale_for(2)};
      std::vector<Label> big = J;
      big.push_back(kExtraLabel);
      AlgebraTag tag = AlgebraTag::o_even(big);
      const auto& s = tag.scheme;
      const std::size_t k = s->labels().size() - 1;
      LoopMatrix g = LoopMatrix::identity(s);
      g.set(s->plus(k), s->plus(k), Laurent());
      g.set(s->minus(k), s->minus(k), Laurent());
      g.set(s->plus(k), s->minus(k), Laurent(1));
      g.set(s->minus(k), s->plus(k), Laurent(1));
      return {desc, std::move(tag), InvolutionSpec::adjoint(g), scale_for(2)};
    }
    case Family::C: {
      if (!twisted) return {desc, AlgebraTag::sp(J), std::nullopt, scale_for(2)};
      auto s = MatrixScheme::make(K::TwoJ, J);
      return {desc, AlgebraTag::sl(s), InvolutionSpec::neg_transpose(structure_matrix(s, desc.alternative ? 1 : -1)),
              scale_for(2)};
    }
    case Family::BC: {
      if (!twisted) throw RealizationError("BC appears at the twisted level only");
      auto s = MatrixScheme::make(K::TwoJ1, J);
      return {desc, AlgebraTag::sl(s), InvolutionSpec::neg_transpose(structure_matrix(s, 1)), scale_for(2)};
    }
  }
  throw RealizationError("unsupported descriptor " + desc.name());
}

std::string Realization::name() const {
  std::string n = tag_.name();
  if (sigma_) n += sigma_->kind() == InvolutionSpec::Kind::Adjoint ? " twisted by Ad(g)" : " twisted by -S x^T S^-1";
  return n;
}

bool Realization::contains(const ExtElement& a) const {
  if (!member(tag_, a.x)) return false;
  return !sigma_ || twisted_member(a.x, *sigma_, tag_);
}

std::size_t Realization::cartan_rank() const {
  return desc_.J.size() - (desc_.family == Family::A ? 1 : 0);
}

ExtElement Realization::embed(const CartanElement& h) const {
  const auto& s = tag_.scheme;
  LoopMatrix x(s);
  Rational trace;
  for (const auto& [j, v] : h.h.entries()) {
    if (!desc_.has_label(j)) throw RealizationError("Cartan coordinate outside the label set: " + j);
    const auto it = std::find(s->labels().begin(), s->labels().end(), j);
    const auto i = static_cast<std::size_t>(it - s->labels().begin());
    if (s->kind() == MatrixScheme::Kind::J) {
      x.set(i, i, Laurent(Gaussian(v)));
      trace += v;
    } else {
      x.set(s->plus(i), s->plus(i), Laurent(Gaussian(v)));
      x.set(s->minus(i), s->minus(i), Laurent(Gaussian(-v)));
    }
  }
  if (!trace.is_zero()) throw RealizationError("Cartan element is not traceless");
  return {Gaussian(h.z), std::move(x), Gaussian(h.t)};
}

std::optional<CartanElement> Realization::to_cartan(const ExtElement& a) const {
  if (!a.z.is_real() || !a.t.is_real() || !a.x.is_constant()) return std::nullopt;
  CartanElement h{a.z.re(), {}, a.t.re()};
  const auto& s = tag_.scheme;
  for (const auto& [k, v] : a.x.entries()) {
    if (k.first != k.second) return std::nullopt;
    const Gaussian c = v.coeff(0);
    if (!c.is_real()) return std::nullopt;
    if (s->kind() == MatrixScheme::Kind::J) {
      h.h.set(s->labels()[k.first], c.re());
    } else if (const auto li = s->label_index(k.first); li && s->sign(k.first) > 0) {
      h.h.set(s->labels()[*li], c.re());
    }
  }
  for (const auto& [j, v] : h.h.entries())
    if (!desc_.has_label(j)) return std::nullopt;
  try {
    if (embed(h) == a) return h;
  } catch (const RealizationError&) {
  }
  return std::nullopt;
}

std::vector<ExtElement> Realization::cartan_basis() const {
  std::vector<ExtElement> out{ExtElement::c(scheme()), ExtElement::d(scheme())};
  const auto& J = desc_.J;
  for (std::size_t i = 0; i < J.size(); ++i) {
    CartanElement h;
    if (desc_.family == Family::A) {
      if (i + 1 == J.size()) break;
      h.h.set(J[i], Rational(1));
      h.h.set(J[i + 1], Rational(-1));
    } else {
      h.h.set(J[i], Rational(1));
    }
    out.push_back(embed(h));
  }
  return out;
}

Gaussian eval(const Weight& w, const ExtElement& h, const Realization& real) {
  // Split into real and imaginary parts; each must be a rational Cartan element.
  const auto part = [](const ExtElement& a, bool imag) {
    const auto pick = [imag](const Gaussian& g) { return Gaussian(imag ? g.im() : g.re()); };
    LoopMatrix x = a.x.map_entries([&](const Laurent& l) {
      Laurent::Terms terms;
      for (const auto& [q, c] : l.terms()) terms[q] = pick(c);
      return Laurent(terms);
    });
    return ExtElement{pick(a.z), std::move(x), pick(a.t)};
  };
  const auto re = real.to_cartan(part(h, false));
  const auto im = real.to_cartan(part(h, true));
  if (!re || !im) throw RealizationError("element is not in the Cartan subalgebra");
  return {eval(w, *re), eval(w, *im)};
}

const std::vector<ExtElement>& RootSpaces::at(const Weight& r) const {
  const auto it = spaces.find(r);
  if (it == spaces.end()) throw RealizationError("no root space at " + r.to_string());
  return it->second;
}

std::vector<Weight> RootSpaces::roots() const {
  std::vector<Weight> out;
  out.reserve(spaces.size());
  for (const auto& [w, _] : spaces) out.push_back(w);
  return out;
}

namespace {

// Matrix units grouped by their Cartan weight.
std::map<Weight, std::vector<LoopMatrix::Key>> unit_groups(const Realization& real) {
  std::map<Weight, std::vector<LoopMatrix::Key>> groups;
  const auto& w = real.slot_weights();
  for (std::uint32_t a = 0; a < w.size(); ++a)
    for (std::uint32_t b = 0; b < w.size(); ++b) groups[Weight{Rational(0), w[a] - w[b], Rational(0)}].push_back({a, b});
  return groups;
}

// Constraint image of one matrix unit at degree q: membership and twist.
std::vector<LoopMatrix> constraints(const Realization& real, const LoopMatrix& unit, long q) {
  std::vector<LoopMatrix> out;
  const auto& tag = real.tag();
  if (tag.S) out.push_back(unit.transpose() * *tag.S + *tag.S * unit);
  if (real.sigma()) {
    const Laurent sign(q % 2 == 0 ? 1 : -1);
    out.push_back(real.sigma()->apply(unit) - sign * unit);
  }
  return out;
}

}  // namespace

RootSpaces root_spaces(const Realization& real, long max_degree) {
  if (max_degree < 0) throw RealizationError("degree window must be nonnegative");
  RootSpaces rs;
  rs.max_degree = max_degree;
  const auto& s = real.scheme();
  const bool traceless = real.tag().kind == AlgebraTag::Kind::sl;
  const auto groups = unit_groups(real);
  const auto basis = real.cartan_basis();

  for (const auto& [mu, units] : groups) {
    for (long q = -max_degree; q <= max_degree; ++q) {
      // Rows indexed by (constraint block, position); columns by unit.
      std::map<std::pair<std::size_t, LoopMatrix::Key>, std::vector<std::pair<std::size_t, Rational>>> rows;
      for (std::size_t k = 0; k < units.size(); ++k) {
        const auto unit = LoopMatrix::unit(s, units[k].first, units[k].second);
        const auto cs = constraints(real, unit, q);
        for (std::size_t b = 0; b < cs.size(); ++b)
          for (const auto& [pos, v] : cs[b].entries()) rows[{b, pos}].push_back({k, as_rational(v.coeff(0))});
      }
      QMatrix m(rows.size() + (traceless ? 1 : 0), units.size());
      std::size_t r = 0;
      for (const auto& [_, row] : rows) {
        for (const auto& [k, v] : row) m(r, k) += v;
        ++r;
      }
      if (traceless)
        for (std::size_t k = 0; k < units.size(); ++k)
          if (units[k].first == units[k].second) m(r, k) = Rational(1);

      std::vector<ExtElement> space;
      for (const auto& v : nullspace(m)) {
        LoopMatrix x(s);
        for (std::size_t k = 0; k < units.size(); ++k)
          if (!v[k].is_zero()) x.set(units[k].first, units[k].second, Laurent::monomial(q, Gaussian(v[k])));
        space.emplace_back(Gaussian(0), std::move(x), Gaussian(0));
      }
      if (space.empty()) continue;

      const Weight root{Rational(0), mu.f, Rational(q)};
      if (mu.f.is_zero() && q == 0) {
        if (space.size() != real.cartan_rank())
          throw RealizationError("degree-0 weight-0 space has dimension " + std::to_string(space.size()));
        rs.cartan_part = std::move(space);
        continue;
      }
      if (!contains(real.desc(), root)) throw RealizationError("weight outside the catalog: " + root.to_string());
      if (!mu.f.is_zero() && space.size() != 1)
        throw RealizationError("root space " + root.to_string() + " has dimension " + std::to_string(space.size()));
      for (const auto& x : space)
        for (const auto& h : basis)
          if (real.bracket(h, x) != eval(root, h, real) * x)
            throw RealizationError("eigenvector check failed at " + root.to_string());
      rs.spaces.emplace(root, std::move(space));
    }
  }
  return rs;
}

bool matches_catalog(const Realization& real, const RootSpaces& rs) {
  const auto expected = enumerate(real.desc(), real.desc().J, -rs.max_degree, rs.max_degree);
  const std::set<Weight> want(expected.begin(), expected.end());
  std::set<Weight> got;
  for (const auto& [w, _] : rs.spaces) got.insert(w);
  return want == got;
}

ExtElement coroot_from_bracket(const Realization& real, const RootSpaces& rs, const Weight& alpha) {
  if (inner(alpha, alpha, real.desc().form).is_zero()) throw RootError("no coroot");
  const ExtElement b = real.bracket(rs.at(alpha).front(), rs.at(-alpha).front());
  const Gaussian v = eval(alpha, b, real);
  if (v.is_zero()) throw RealizationError("root vanishes on [x_a, x_-a]");
  return (Gaussian(2) / v) * b;
}

IntegrabilityReport check_integrable(const Realization& real, const RootSpaces& rs, const Weight& alpha,
                                     const std::vector<Weight>& F, int max_power) {
  if (inner(alpha, alpha, real.desc().form).is_zero()) throw RootError("no coroot");
  const auto in_window = [&](const Weight& w) {
    const Rational bound(rs.max_degree);
    return w.t <= bound && -w.t <= bound;
  };
  if (!in_window(alpha)) throw RealizationError("enlarge window");
  std::vector<ExtElement> span = real.cartan_basis();
  for (const auto& b : F) {
    if (!in_window(b)) throw RealizationError("enlarge window");
    for (const auto& x : rs.at(b)) span.push_back(x);
  }
  IntegrabilityReport rep;
  for (const auto& x : {rs.at(alpha).front(), rs.at(-alpha).front()}) {
    for (const auto& y0 : span) {
      ExtElement y = y0;
      int k = 0;
      while (true) {
        y = real.bracket(x, y);
        if (y.is_zero()) break;
        ++k;
        if (k > max_power) {
          rep.nilpotent = false;
          break;
        }
      }
      rep.max_power = std::max(rep.max_power, k);
    }
  }
  return rep;
}

}  // namespace lars
