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

#include "lars/certificates.hpp"

namespace lars {

namespace {

QMatrix to_rational(const CMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) throw CertificateError("form matrix must be rational");
      out(i, j) = m(i, j).re();
    }
  return out;
}

QMatrix form_matrix(const Realization& r) {
  if (r.tag().S) return to_rational(r.tag().S->dense_constant());
  if (r.sigma() && r.sigma()->kind() == InvolutionSpec::Kind::NegTransposeConj)
    return to_rational(r.sigma()->matrix().dense_constant());
  throw CertificateError("realization " + r.desc().name() + " carries no defining form");
}

// Laurent degrees multiplied by rho.
Laurent scale_degrees(const Laurent& v, const Rational& rho) {
  if (rho == Rational(1)) return v;
  if (rho.denominator() == 1) return v.substitute_power(rho.numerator().get_si());
  if (rho.numerator() == 1) return v.contract_power(rho.denominator().get_si());
  throw CertificateError("unsupported degree scale " + rho.to_string());
}

LoopMatrix weight_matrix(const SchemePtr& s, const std::vector<int>& weights) {
  LoopMatrix h(s);
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0) h.set(i, i, Laurent(weights[i]));
  return h;
}

}  // namespace

Rational EmbeddingMap::central_scale(const Realization& src, const Realization& dst) const {
  return rho * dst.trace_scale() / src.trace_scale();
}

ExtElement EmbeddingMap::apply(const ExtElement& a, const Realization& src, const Realization& dst) const {
  const auto& ts = dst.scheme();
  LoopMatrix psi(ts);
  for (const auto& [k, v] : a.x.entries()) {
    for (std::size_t r = 0; r < e.rows(); ++r) {
      if (e(r, k.first).is_zero()) continue;
      for (std::size_t c = 0; c < e_plus.cols(); ++c) {
        if (e_plus(k.second, c).is_zero()) continue;
        const Rational f = e(r, k.first) * e_plus(k.second, c);
        psi.add(r, c, (v * Gaussian(f)).shift(weights[r] - weights[c]));
      }
    }
  }
  psi = psi.map_entries([&](const Laurent& v) { return scale_degrees(v, rho); });

  const LoopMatrix h = weight_matrix(ts, weights);
  const Gaussian sd(rho * dst.trace_scale());
  Gaussian z = Gaussian(central_scale(src, dst)) * a.z + sd * loop_form(h, psi);
  ExtElement out{std::move(z), std::move(psi), Gaussian(0)};
  if (!a.t.is_zero()) {
    const ExtElement d_img{-sd * loop_form(h, h) / Gaussian(2), -h, Gaussian(Rational(1) / rho)};
    out = out + a.t * d_img;
  }
  return out;
}

EmbeddingMap make_embedding(const Realization& src, const Realization& dst, const SlotImages& images,
                            std::vector<int> weights, Rational rho, std::string note) {
  const auto& ss = *src.scheme();
  const auto& ds = *dst.scheme();
  EmbeddingMap m;
  m.source = src.desc();
  m.target = dst.desc();
  m.e = QMatrix(ds.size(), ss.size());
  m.weights = weights.empty() ? std::vector<int>(ds.size(), 0) : std::move(weights);
  if (m.weights.size() != ds.size()) throw CertificateError("one degree weight per target slot expected");
  m.rho = std::move(rho);
  m.note = std::move(note);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string& name = ss.name(i);
    const auto it = std::find_if(images.begin(), images.end(), [&](const auto& p) { return p.first == name; });
    if (it == images.end()) {
      m.e(ds.slot(name), i) = Rational(1);
    } else {
      for (const auto& [tname, coeff] : it->second) m.e(ds.slot(tname), i) += coeff;
    }
  }
  const QMatrix s_src = form_matrix(src);
  const QMatrix s_dst = form_matrix(dst);
  const auto inv = inverse(s_src);
  if (!inv) throw CertificateError("singular source form");
  m.e_plus = *inv * m.e.transpose() * s_dst;
  if (m.e.transpose() * s_dst * m.e != s_src) throw CertificateError("slot embedding is not an isometry");
  if (m.e_plus * m.e != QMatrix::identity(ss.size())) throw CertificateError("slot embedding has no left inverse");
  return m;
}

std::string to_string(IsoPair p) {
  switch (p) {
    case IsoPair::BD: return "B1-D1";
    case IsoPair::CBC: return "C2-BC2";
    case IsoPair::BB: return "B1-B2";
  }
  return "?";
}

IsoPair parse_iso_pair(std::string_view s) {
  for (IsoPair p : {IsoPair::BD, IsoPair::CBC, IsoPair::BB})
    if (s == to_string(p)) return p;
  throw CertificateError("unknown pair '" + std::string(s) + "' (expected B1-D1, C2-BC2 or B1-B2)");
}

std::vector<EmbeddingMap> iso_pair_maps(IsoPair pair, std::size_t n) {
  const auto lbl = [](std::size_t k) { return std::to_string(k); };
  const auto real = [](Family f, Level l, std::size_t k, bool alt = false) {
    return Realization::make(RootSystemDesc::make(f, l, k, alt));
  };
  // Odd slot into a fresh hyperbolic plane: e0 -> e_k + e_-k / 2.
  const auto odd_slot = [&](std::size_t k) {
    return SlotImages{{"0", {{"+" + lbl(k), Rational(1)}, {"-" + lbl(k), Rational(1, 2)}}}};
  };
  std::vector<EmbeddingMap> out;
  switch (pair) {
    case IsoPair::BD: {
      out.push_back(make_embedding(real(Family::D, Level::Untwisted, n), real(Family::B, Level::Untwisted, n), {}, {},
                                   Rational(1), "o(2J) into o(2J+1) by label inclusion"));
      out.push_back(make_embedding(real(Family::B, Level::Untwisted, n), real(Family::D, Level::Untwisted, n + 1),
                                   odd_slot(n + 1), {}, Rational(1), "o(2J+1) into o(2J+2), e0 -> e+ + e-/2"));
      break;
    }
    case IsoPair::CBC: {
      out.push_back(make_embedding(real(Family::C, Level::Twisted, n, true), real(Family::BC, Level::Twisted, n), {},
                                   {}, Rational(1), "(sl(2J), S+) into (sl(2J+1), S) by label inclusion"));
      out.push_back(make_embedding(real(Family::BC, Level::Twisted, n), real(Family::C, Level::Twisted, n + 1, true),
                                   odd_slot(n + 1), {}, Rational(1), "(sl(2J+1), S) into (sl(2J+2), S+)"));
      break;
    }
    case IsoPair::BB: {
      // Twisted side: the g-fixed vector v = e+j0 + e-j0 goes to e+b + e-b and
      // the g-odd vector w = e+j0 - e-j0 to e+a - e-a, where w(t) carries
      // weights +1, -1 on +a, -a; conjugation then leaves only even degrees.
      const auto src = real(Family::B, Level::Twisted, n);
      const auto dst = real(Family::B, Level::Untwisted, n + 2);
      const std::string a = lbl(n + 1);
      const std::string b = lbl(n + 2);
      const Rational h(1, 2);
      SlotImages img{{"+j0", {{"+" + b, h}, {"-" + b, h}, {"+" + a, h}, {"-" + a, -h}}},
                     {"-j0", {{"+" + b, h}, {"-" + b, h}, {"+" + a, -h}, {"-" + a, h}}}};
      std::vector<int> w(dst.scheme()->size(), 0);
      w[dst.scheme()->slot("+" + a)] = 1;
      w[dst.scheme()->slot("-" + a)] = -1;
      out.push_back(make_embedding(src, dst, img, std::move(w), Rational(1, 2),
                                   "twisted o(2J+2) into o(2J+5) by w(t)-conjugation, t^2 -> t"));
      out.push_back(make_embedding(real(Family::B, Level::Untwisted, n), real(Family::B, Level::Twisted, n + 1),
                                   odd_slot(n + 1), {}, Rational(2),
                                   "o(2J+1) into the g-fixed part of o(2J+4), t -> t^2"));
      break;
    }
  }
  return out;
}

std::vector<ExtElement> window_basis(const Realization& real, long window) {
  const auto rs = root_spaces(real, window);
  std::vector<ExtElement> out{ExtElement::c(real.scheme()), ExtElement::d(real.scheme())};
  out.insert(out.end(), rs.cartan_part.begin(), rs.cartan_part.end());
  for (const auto& [_, space] : rs.spaces) out.insert(out.end(), space.begin(), space.end());
  return out;
}

EmbeddingCheck verify_embedding(const EmbeddingMap& map, const std::vector<ExtElement>& basis) {
  const auto src = Realization::make(map.source);
  const auto dst = Realization::make(map.target);
  EmbeddingCheck rep;
  rep.basis_size = basis.size();
  rep.form_factor = dst.trace_scale() / src.trace_scale();
  const Gaussian factor(rep.form_factor);
  std::vector<ExtElement> img;
  img.reserve(basis.size());
  for (const auto& b : basis) {
    try {
      img.push_back(map.apply(b, src, dst));
    } catch (const std::exception& ex) {
      rep.ok = false;
      rep.failure = "cannot map " + b.to_string() + ": " + ex.what();
      return rep;
    }
    if (!dst.contains(img.back())) {
      rep.ok = false;
      rep.failure = "image outside the target: " + b.to_string();
      return rep;
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      ++rep.pairs_checked;
      if (dst.form(img[i], img[j]) != factor * src.form(basis[i], basis[j])) {
        rep.ok = false;
        rep.failure = "form not preserved on " + basis[i].to_string() + ", " + basis[j].to_string();
        return rep;
      }
      if (i == j) continue;
      if (map.apply(src.bracket(basis[i], basis[j]), src, dst) != dst.bracket(img[i], img[j])) {
        rep.ok = false;
        rep.failure = "bracket not preserved on " + basis[i].to_string() + ", " + basis[j].to_string();
        return rep;
      }
    }
  return rep;
}

bool ObstructionEvidence::holds() const {
  return !p3_x.is_zero() && p3_conjugated == p3_x && p3_neg_transposed == -p3_x;
}

ObstructionEvidence obstruction_from(LoopMatrix x, LoopMatrix conjugator, LoopMatrix structure) {
  const LoopMatrix a_inv = constant_inverse(conjugator);
  const auto neg = InvolutionSpec::neg_transpose(structure);
  Gaussian px = p3(x);
  Gaussian pc = p3(conjugator * x * a_inv);
  Gaussian pn = p3(neg.apply(x));
  return {std::move(x), std::move(conjugator), std::move(structure), std::move(px), std::move(pc), std::move(pn)};
}

ObstructionEvidence sample_obstruction(std::size_t size, std::mt19937_64& rng) {
  if (size < 2) throw CertificateError("obstruction samples need size >= 2");
  std::vector<Label> labels;
  for (std::size_t k = 1; k <= size / 2; ++k) labels.push_back(std::to_string(k));
  const bool even = size % 2 == 0;
  const auto s = MatrixScheme::make(even ? MatrixScheme::Kind::TwoJ : MatrixScheme::Kind::TwoJ1, labels);
  std::uniform_int_distribution<long> coeff(-3, 3);
  const auto random_matrix = [&] {
    LoopMatrix m(s);
    for (std::size_t i = 0; i < s->size(); ++i)
      for (std::size_t j = 0; j < s->size(); ++j) m.set(i, j, Laurent(coeff(rng)));
    return m;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LoopMatrix x = random_matrix();
    x.add(0, 0, -x.trace());
    if (p3(x).is_zero()) continue;
    LoopMatrix a = random_matrix();
    if (determinant(a.dense_constant()).is_zero()) continue;
    return obstruction_from(std::move(x), std::move(a), structure_matrix(s, even ? -1 : 1));
  }
  throw CertificateError("no sample with nonzero p3 found");
}

}  // namespace lars
