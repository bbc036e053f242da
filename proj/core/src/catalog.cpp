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

#include "lars/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <tuple>

#include "lars/linalg.hpp"

namespace lars {

std::string to_string(Level l) {
  switch (l) {
    case Level::Finite: return "finite";
    case Level::Untwisted: return "1";
    case Level::Twisted: return "2";
  }
  return "?";
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::Short: return "short";
    case Sector::Long: return "long";
    case Sector::Extralong: return "extralong";
    case Sector::Isotropic: return "isotropic";
    case Sector::Nonroot: return "nonroot";
  }
  return "?";
}

RootSystemDesc RootSystemDesc::make(Family family, Level level, std::size_t n, bool alternative) {
  if (n == 0) throw RootError("index set must be nonempty");
  if (level == Level::Untwisted && family == Family::BC) {
    throw RootError("BC^(1) is not a locally affine family of the catalog");
  }
  if (level == Level::Twisted && (family == Family::A || family == Family::D)) {
    throw RootError(to_string(family) + "^(2) is not a locally affine family of the catalog");
  }
  if (alternative && !(family == Family::C && level == Level::Twisted)) {
    throw RootError("the alternative presentation exists only for C^(2)");
  }
  RootSystemDesc d;
  d.family = family;
  d.level = level;
  d.form = FormSpec::for_family(family);
  d.alternative = alternative;
  d.J.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) d.J.push_back(std::to_string(i));
  return d;
}

RootSystemDesc RootSystemDesc::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw RootError("descriptor needs '<family><n>:<level>': " + std::string(text));
  std::string_view head = text.substr(0, colon);
  std::string_view tail = text.substr(colon + 1);
  Family family;
  if (head.starts_with("BC")) {
    family = Family::BC;
    head.remove_prefix(2);
  } else if (!head.empty() && std::string_view("ABCD").find(head[0]) != std::string_view::npos) {
    family = static_cast<Family>(std::string_view("ABCD").find(head[0]));
    head.remove_prefix(1);
  } else {
    throw RootError("unknown family in descriptor: " + std::string(text));
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc{} || ptr != head.data() + head.size() || n == 0) {
    throw RootError("bad rank in descriptor: " + std::string(text));
  }
  bool alternative = false;
  if (tail.ends_with("alt")) {
    alternative = true;
    tail.remove_suffix(3);
  }
  Level level;
  if (tail == "1") {
    level = Level::Untwisted;
  } else if (tail == "2") {
    level = Level::Twisted;
  } else if (tail == "finite") {
    level = Level::Finite;
  } else {
    throw RootError("bad level in descriptor: " + std::string(text));
  }
  return make(family, level, n, alternative);
}

std::string RootSystemDesc::name() const {
  return to_string(family) + std::to_string(J.size()) + ":" + to_string(level) + (alternative ? "alt" : "");
}

bool RootSystemDesc::has_label(const Label& j) const {
  return std::find(J.begin(), J.end(), j) != J.end();
}

bool Progression::contains(const Rational& x) const {
  if (empty || !x.is_integer()) return false;
  mpz_class r = (x.numerator() - offset) % step;
  return r == 0;
}

std::string Progression::to_string() const {
  if (empty) return "{}";
  std::string s = step == 1 ? "Z" : std::to_string(step) + "Z";
  if (offset != 0) s += "+" + std::to_string(offset);
  return s;
}

bool RationalLattice::contains(const Rational& x) const { return (x / step).is_integer(); }

std::string RationalLattice::to_string() const {
  return step == Rational(1) ? "Z" : step.to_string() + "Z";
}

namespace {

enum class Shape { Zero, Unit, Pair, PairA, Double, Other };

// Unit = +-e_j, Pair = +-e_i +- e_j with equal signs, PairA = e_i - e_j,
// Double = +-2e_j.
Shape shape_of(const Coords& a) {
  const auto& e = a.entries();
  if (e.empty()) return Shape::Zero;
  if (e.size() == 1) {
    const Rational v = e.begin()->second.abs();
    if (v == Rational(1)) return Shape::Unit;
    if (v == Rational(2)) return Shape::Double;
    return Shape::Other;
  }
  if (e.size() == 2) {
    const Rational x = e.begin()->second;
    const Rational y = std::next(e.begin())->second;
    if (x.abs() != Rational(1) || y.abs() != Rational(1)) return Shape::Other;
    return x == y ? Shape::Pair : Shape::PairA;
  }
  return Shape::Other;
}

bool in_family(Family f, Shape s) {
  const bool pair = s == Shape::Pair || s == Shape::PairA;
  switch (f) {
    case Family::A: return s == Shape::PairA;
    case Family::B: return pair || s == Shape::Unit;
    case Family::C: return pair || s == Shape::Double;
    case Family::D: return pair;
    case Family::BC: return pair || s == Shape::Unit || s == Shape::Double;
  }
  return false;
}

bool labels_in(const RootSystemDesc& desc, const Coords& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [&](const auto& kv) { return desc.has_label(kv.first); });
}

bool is_even(const Rational& m) { return (m.numerator() % 2) == 0; }

}  // namespace

bool finite_member(Family family, const Coords& alpha) { return in_family(family, shape_of(alpha)); }

bool contains(const RootSystemDesc& desc, const Weight& r) {
  if (!r.is_root_shaped()) throw RootError("malformed root candidate " + r.to_string());
  if (!labels_in(desc, r.f)) return false;
  const Shape s = shape_of(r.f);
  if (s == Shape::Zero) return desc.is_affine() && !r.t.is_zero();
  if (!in_family(desc.family, s)) return false;
  switch (desc.level) {
    case Level::Finite: return r.t.is_zero();
    case Level::Untwisted: return true;
    case Level::Twisted:
      switch (desc.family) {
        case Family::B: return s != Shape::Pair && s != Shape::PairA ? true : is_even(r.t);
        case Family::C:
          if (s != Shape::Double) return true;
          return desc.alternative ? !is_even(r.t) : is_even(r.t);
        case Family::BC: return s != Shape::Double || !is_even(r.t);
        default: return false;
      }
  }
  return false;
}

Sector classify(const RootSystemDesc& desc, const Weight& r) {
  if (!r.is_root_shaped() || !contains(desc, r)) return Sector::Nonroot;
  if (r.f.is_zero()) return Sector::Isotropic;
  const Rational len = inner(r, r, desc.form);
  if (len == Rational(1)) return Sector::Short;
  if (len == Rational(2)) return Sector::Long;
  if (len == Rational(4)) return Sector::Extralong;
  throw RootError("unexpected square length " + len.to_string());
}

std::vector<Coords> finite_roots(Family family, const std::vector<Label>& support) {
  std::vector<Coords> out;
  const bool units = family == Family::B || family == Family::BC;
  const bool doubles = family == Family::C || family == Family::BC;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (long s : {1L, -1L}) {
      if (units) out.push_back(Coords{{support[i], Rational(s)}});
      if (doubles) out.push_back(Coords{{support[i], Rational(2 * s)}});
    }
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      for (long s : {1L, -1L}) {
        for (long u : {1L, -1L}) {
          if (family == Family::A && s == u) continue;
          out.push_back(Coords{{support[i], Rational(s)}, {support[j], Rational(u)}});
        }
      }
    }
  }
  return out;
}

std::vector<Weight> enumerate(const RootSystemDesc& desc, const std::vector<Label>& support, long lo, long hi) {
  std::vector<Label> sup;
  for (const auto& j : support) {
    if (desc.has_label(j) && std::find(sup.begin(), sup.end(), j) == sup.end()) sup.push_back(j);
  }
  const auto fin = finite_roots(desc.family, sup);
  std::vector<Weight> out;
  for (long m = lo; m <= hi; ++m) {
    if (!desc.is_affine() && m != 0) continue;
    if (desc.is_affine() && m != 0) out.push_back(Weight::root({}, m));
    for (const auto& a : fin) {
      Weight r = Weight::root(a, m);
      if (contains(desc, r)) out.push_back(std::move(r));
    }
  }
  const auto key = [&](const Weight& w) {
    std::vector<Rational> k{w.t};
    for (const auto& j : sup) k.push_back(w.f.get(j));
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return key(a) < key(b); });
  return out;
}

bool AxiomReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.pass; });
}

namespace {

std::vector<Rational> coordinates(const Weight& w, const std::vector<Label>& sup) {
  std::vector<Rational> v;
  v.reserve(sup.size() + 1);
  for (const auto& j : sup) v.push_back(w.f.get(j));
  v.push_back(w.t);
  return v;
}

QMatrix stack(const std::vector<Weight>& ws, const std::vector<Label>& sup) {
  QMatrix m(ws.size(), sup.size() + 1);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const auto v = coordinates(ws[i], sup);
    for (std::size_t k = 0; k < v.size(); ++k) m(i, k) = v[k];
  }
  return m;
}

}  // namespace

namespace {

// Smaller is nicer; compares (negative lead, t != 0, lead label).
std::tuple<bool, bool, Label> witness_rank(const Weight& a) {
  const auto& [label, coeff] = *a.f.entries().begin();
  return {coeff < Rational(0), !a.t.is_zero(), label};
}

}  // namespace

AxiomReport verify_axioms(const RootSystemDesc& desc, const std::vector<Label>& support, long lo, long hi) {
  if (support.size() < 2) throw RootError("verify_axioms needs at least two support labels");
  AxiomReport rep;
  const auto all = enumerate(desc, support, lo, hi);
  std::vector<Weight> R;
  for (const auto& w : all) {
    if (!w.f.is_zero()) R.push_back(w);
  }
  rep.root_count = R.size();
  const FormSpec& form = desc.form;

  AxiomVerdict a1;
  for (const auto& r : R) {
    if (inner(r, r, form).is_zero()) {
      a1 = {false, "isotropic element among non-isotropic roots", {r}};
      break;
    }
  }
  const std::size_t rank_r = rank(stack(R, support));
  const std::size_t rank_all = rank(stack(all, support));
  if (a1.pass && rank_r != rank_all) {
    a1 = {false, "span of non-isotropic roots has rank " + std::to_string(rank_r) + ", truncation has rank " +
                     std::to_string(rank_all), {}};
  }
  if (a1.pass) a1.detail = "rank " + std::to_string(rank_r);
  rep.verdicts["A1"] = a1;

  AxiomVerdict a2, a3, red;
  for (const auto& a : R) {
    for (const auto& b : R) {
      const Rational p = pair(b, a, form);
      if (a2.pass && !p.is_integer()) a2 = {false, "pairing " + p.to_string() + " not integral", {b, a}};
      if (a3.pass && p.is_integer()) {
        const Weight img = b - p * a;
        if (img.f.is_zero() || !contains(desc, img)) a3 = {false, "reflection leaves the root set", {b, a, img}};
      }
    }
    // Report the most readable witness: positive leading coordinate at
    // delta degree 0 and the earliest leading label.
    const Weight twice = Rational(2) * a;
    if (contains(desc, twice) && (red.pass || witness_rank(a) < witness_rank(red.counterexample[0]))) {
      red = {false, "2 * root is a root", {a, twice}};
    }
  }
  rep.verdicts["A2"] = a2;
  rep.verdicts["A3"] = a3;
  rep.verdicts["R"] = red;

  // Connectivity of the non-orthogonality graph by union-find.
  AxiomVerdict a4;
  std::vector<std::size_t> parent(R.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (std::size_t j = i + 1; j < R.size(); ++j) {
      if (!dot(R[i].f, R[j].f).is_zero()) parent[find(i)] = find(j);
    }
  }
  for (std::size_t i = 1; i < R.size(); ++i) {
    if (find(i) != find(0)) {
      a4 = {false, "pairing graph is disconnected", {R[0], R[i]}};
      break;
    }
  }
  rep.verdicts["A4"] = a4;

  // Radical of the form on Span R, then its intersection with the Z-span.
  AxiomVerdict a5;
  const auto basis = row_reduce(stack(R, support));
  const std::size_t r = basis.pivot_columns.size();
  QMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Rational s;
      for (std::size_t k = 0; k < support.size(); ++k) s += basis.reduced(i, k) * basis.reduced(j, k);
      gram(i, j) = form.scale * s;
    }
  }
  const auto rad = nullspace(gram);
  if (rad.empty()) {
    a5 = {false, "V0 = 0: the form is nondegenerate on the span (locally finite)", {}};
  } else if (rad.size() != 1) {
    a5 = {false, "radical has dimension " + std::to_string(rad.size()), {}};
  } else {
    std::vector<Rational> v(support.size() + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += rad[0][i] * basis.reduced(i, k);
    }
    const bool along_delta =
        std::all_of(v.begin(), v.end() - 1, [](const Rational& x) { return x.is_zero(); }) && !v.back().is_zero();
    IntegerLattice lat(support.size() + 1);
    for (const auto& w : R) lat.insert(coordinates(w, support));
    const auto g = lat.last_axis_generator();
    if (!along_delta) {
      a5 = {false, "radical is not spanned by delta", {}};
    } else if (!g) {
      a5 = {false, "radical meets the Z-span trivially", {}};
    } else {
      rep.isotropic_generator = Weight{Rational(0), {}, Rational(*g)};
      a5.detail = "generator " + rep.isotropic_generator->to_string();
      if (*g != 1) {
        a5.pass = false;
        a5.detail += " is not +-delta";
      }
    }
  }
  rep.verdicts["A5"] = a5;
  return rep;
}

Weight ShiftAutomorphism::apply(const Weight& r) const {
  Weight out = r;
  out.t += dot(gamma_, r.f);
  return out;
}

ShiftAutomorphism section_shift_auto(const RootSystemDesc& desc, const Coords& gamma) {
  if (!desc.is_affine()) throw RootError("shift automorphisms need an affine level");
  // Reduced finite image: BC collapses to B; C^(1) keeps its long roots.
  Family red = desc.family == Family::BC ? Family::B : desc.family;
  for (const auto& a : finite_roots(red, desc.J)) {
    const Rational g = dot(gamma, a);
    const Rational len = desc.form.scale * dot(a, a);
    const std::string sector = len == Rational(1) ? "short" : "long";
    const bool twisted_long = desc.level == Level::Twisted && desc.family != Family::BC && len == Rational(2);
    const Rational need = twisted_long ? Rational(2) : Rational(1);
    if (!(g / need).is_integer()) {
      throw RootError("shift violates integrality on the " + sector + " sector: gamma(" + Weight::root(a, 0).to_string() +
                      ") = " + g.to_string() + " not in " + (twisted_long ? "2Z" : "Z"));
    }
  }
  return ShiftAutomorphism(gamma);
}

RationalLattice integral_weight_condition(const RootSystemDesc& desc) {
  switch (desc.level) {
    case Level::Finite: throw RootError("integral weight condition needs an affine level");
    case Level::Untwisted: return {Rational(1)};
    case Level::Twisted: return {desc.family == Family::BC ? Rational(2) : Rational(1, 2)};
  }
  return {Rational(1)};
}

FiberSets fiber_sets(const RootSystemDesc& desc) {
  if (!desc.is_affine()) throw RootError("fiber sets need an affine level");
  FiberSets fs;
  fs.S = Progression::none();
  fs.L = Progression::none();
  fs.E = Progression::none();
  const Progression all{1, 0, false};
  const bool has_short = desc.family == Family::B || desc.family == Family::C || desc.family == Family::BC;
  if (desc.level == Level::Untwisted) {
    if (has_short) fs.S = all;
    fs.L = all;
  } else if (desc.family == Family::BC) {
    fs.S = all;
    fs.L = all;
    fs.E = {2, 1, false};
  } else {
    fs.S = all;
    fs.L = desc.alternative ? Progression{2, 1, false} : Progression{2, 0, false};
  }
  long g = 0;
  long m = 1;
  for (const auto* p : {&fs.S, &fs.L, &fs.E}) {
    if (p->empty) continue;
    g = std::gcd(g, std::gcd(p->step, p->offset));
  }
  for (const auto* p : {&fs.S, &fs.L, &fs.E}) {
    if (p->empty) continue;
    m = std::lcm(m, p->step / std::gcd(p->step, g));
  }
  fs.m = m;
  return fs;
}

}  // namespace lars
