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

#include "lars/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "lars/certificate.hpp"
#include "lars/grading.hpp"
#include "lars/unitary.hpp"
#include "lars/weyl.hpp"

namespace lars {

namespace {

const char* const kLocallyAffine[] = {"A4:1", "B4:1", "C4:1", "D4:1", "B4:2", "C4:2", "BC4:2"};
const char* const kPresentations[] = {"A3:1", "B3:1", "C3:1", "D3:1", "B3:2", "C3:2", "C3:2alt", "BC3:2"};

// Failure message collector: the first few problems, plus a count.
class Problems {
 public:
  void add(const std::string& what) {
    if (list_.size() < 3) list_.push_back(what);
    ++count_;
  }
  [[nodiscard]] bool empty() const { return count_ == 0; }
  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << count_ << " problem(s)";
    for (const auto& p : list_) os << "; " << p;
    return os.str();
  }

 private:
  std::vector<std::string> list_;
  std::size_t count_ = 0;
};

CheckResult timed(int id, std::string name, const std::function<std::pair<bool, std::string>()>& body,
                  double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{id, std::move(name), false, {}, 0};
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && r.seconds > limit_seconds) {
    r.pass = false;
    r.detail += "; exceeded the " + std::to_string(static_cast<int>(limit_seconds)) + " s budget";
  }
  return r;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Gaussian small_gaussian(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return {Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
}

}  // namespace

Json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

CheckResult check_axiom_suite() {
  return timed(1, "axiom suite", [] {
    Problems p;
    for (const char* name : kLocallyAffine) {
      const auto desc = RootSystemDesc::parse(name);
      const auto rep = verify_axioms(desc, desc.J, -4, 4);
      for (const auto& [ax, v] : rep.verdicts)
        if (!v.pass) p.add(std::string(name) + " fails " + ax + ": " + v.detail);
    }
    const auto bc = RootSystemDesc::parse("BC4:finite");
    const auto rep = verify_axioms(bc, bc.J, 0, 0);
    const auto& r = rep.verdicts.at("R");
    const Coords two_e1{{"1", Rational(2)}};
    const bool witnessed = std::any_of(r.counterexample.begin(), r.counterexample.end(),
                                       [&](const Weight& w) { return w.f == two_e1; });
    if (r.pass || !witnessed) p.add("finite BC4 does not fail (R) with witness 2e1");
    return std::pair{p.empty(), p.empty() ? "7 families pass A1-A5 and R at |m| <= 4; finite BC4 fails R at 2e1"
                                          : p.str()};
  }, 30);
}

CheckResult check_realization_match() {
  return timed(2, "realization match", [] {
    Problems p;
    std::size_t roots = 0;
    for (const char* name : kPresentations) {
      const auto real = Realization::make(RootSystemDesc::parse(name));
      const auto rs = root_spaces(real, 3);
      if (!matches_catalog(real, rs)) p.add(std::string(name) + ": root set differs from the catalog");
      for (const auto& [w, b] : rs.spaces)
        if (!w.f.is_zero() && b.size() != 1) p.add(std::string(name) + ": dim " + w.to_string() + " != 1");
      roots += rs.spaces.size();
    }
    return std::pair{p.empty(), p.empty() ? "8 presentations, " + std::to_string(roots) + " window roots match"
                                          : p.str()};
  }, 60);
}

CheckResult check_coroot_formula() {
  return timed(3, "coroot formula", [] {
    Problems p;
    std::size_t n = 0;
    for (const char* name : kPresentations) {
      const auto desc = RootSystemDesc::parse(name);
      const auto real = Realization::make(desc);
      const auto rs = root_spaces(real, 3);
      for (const auto& [w, _] : rs.spaces) {
        if (w.f.is_zero()) continue;
        ++n;
        if (coroot_from_bracket(real, rs, w) != real.embed(coroot(w, desc.form)))
          p.add(std::string(name) + " at " + w.to_string());
      }
    }
    return std::pair{p.empty(), p.empty() ? std::to_string(n) + " coroots agree exactly" : p.str()};
  });
}

CheckResult check_two_affine(std::mt19937_64& rng) {
  return timed(4, "(2-Aff) and semidefiniteness", [&rng] {
    Problems p;
    std::size_t samples = 0;
    for (const char* name : kLocallyAffine) {
      const auto desc = RootSystemDesc::parse(name);
      std::vector<Weight> roots;
      for (const auto& r : enumerate(desc, desc.J, -4, 4))
        if (!r.f.is_zero()) roots.push_back(r);
      for (int k = 0; k < 500; ++k, ++samples) {
        const Weight& a = roots[pick(rng, roots.size())];
        const Weight& b = roots[pick(rng, roots.size())];
        const Rational prod = pair(a, b, desc.form) * pair(b, a, desc.form);
        const bool bounded = prod.is_integer() && prod >= Rational(0) && prod <= Rational(4);
        QMatrix g(2, 2);
        g(0, 0) = inner(a, a, desc.form);
        g(0, 1) = g(1, 0) = inner(a, b, desc.form);
        g(1, 1) = inner(b, b, desc.form);
        const bool psd = psd_check(g).psd;
        if (!bounded) p.add(std::string(name) + ": product " + prod.to_string());
        if (!psd) p.add(std::string(name) + ": Gram not PSD");
        if (psd != (prod <= Rational(4))) p.add(std::string(name) + ": equivalence fails");
      }
    }
    return std::pair{p.empty(), p.empty() ? std::to_string(samples) + " sampled pairs satisfy both conditions"
                                          : p.str()};
  });
}

CheckResult check_grading(std::mt19937_64& rng) {
  return timed(5, "grading", [&rng] {
    Problems p;
    const Weight loop{Rational(1), {}, Rational(0)};
    for (const char* name : {"A3:1", "B3:1", "C3:1", "D3:1"}) {
      const auto desc = RootSystemDesc::parse(name);
      const auto rs = root_spaces(Realization::make(desc), 3);
      for (const auto& [w, _] : rs.spaces)
        if (grade(loop, w, desc.form) != w.t) p.add(std::string(name) + ": grade of " + w.to_string());
    }
    for (const char* name : kPresentations) {
      const auto desc = RootSystemDesc::parse(name);
      for (int k = 0; k < 20; ++k) {
        const auto rep = grading(sample_integral_weight(desc, rng), desc, 4);
        for (const auto& [g, _] : rep.grades) {
          const bool ok = rep.degenerate ? g.is_zero() : (g / rep.generator).is_integer();
          if (!ok) p.add(std::string(name) + ": grade " + g.to_string() + " outside " + rep.generator.to_string() + "Z");
        }
      }
    }
    return std::pair{p.empty(), p.empty() ? "loop grading exact; 20 integral weights per family are cyclic" : p.str()};
  });
}

CheckResult check_weight_sets() {
  return timed(6, "weight sets", [] {
    Problems p;
    const FormSpec a_form = FormSpec::for_family(Family::A);
    // sl2, lambda(coroot) = 3.
    const Weight a1 = Weight::root({{"1", Rational(1)}, {"2", Rational(-1)}}, 0);
    const Weight l3{Rational(0), {{"1", Rational(3)}}, Rational(0)};
    std::set<Rational> values;
    for (const auto& [w, _] : weight_set(l3, {a1}, a_form, 10).elements) values.insert(eval(w, coroot(a1, a_form)));
    if (values != std::set<Rational>{Rational(3), Rational(1), Rational(-1), Rational(-3)}) p.add("sl2 string");

    // A2 adjoint weight: six roots and zero.
    const auto simple = standard_simple_system(RootSystemDesc::parse("A3:finite"));
    const Weight rho{Rational(0), {{"1", Rational(1)}, {"3", Rational(-1)}}, Rational(0)};
    const auto ws = weight_set(rho, simple, a_form, 10);
    const auto orb = orbit(rho, simple, {}, a_form);
    if (ws.size() != 7 || orb.elements.size() != 6) p.add("A2 set size " + std::to_string(ws.size()));
    std::set<Weight> hull;
    for (long x = -4; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y) {
        const Weight mu = rho - Rational(x) * simple[0] - Rational(y) * simple[1];
        if (hull_membership(mu, orb.elements).member) hull.insert(mu);
      }
    std::set<Weight> got;
    for (const auto& [w, _] : ws.elements) got.insert(w);
    if (got != hull) p.add("A2 set differs from conv(W rho) on the lattice");

    // A1^(1), level one, slice of delta-depth <= 3 against the parabola.
    const std::vector<Weight> aff{a1, Weight::delta() - a1};
    const Weight basic{Rational(1), {}, Rational(0)};
    std::set<Weight> slice;
    for (const auto& [w, _] : weight_set(basic, aff, a_form, 12).elements)
      if (w.t >= Rational(-3)) slice.insert(w);
    std::set<Weight> expect;
    for (long x = -3; x <= 3; ++x)
      for (long b = -3; b <= -x * x; ++b) expect.insert(basic + Rational(x) * a1 + Rational(b) * Weight::delta());
    if (slice != expect) p.add("A1^(1) slice has " + std::to_string(slice.size()) + " elements");
    return std::pair{p.empty(), p.empty() ? "sl2 {3,1,-1,-3}; A2 7 points = hull; A1^(1) slice 10 points" : p.str()};
  });
}

CheckResult check_gcm() {
  return timed(7, "generalized Cartan matrices", [] {
    Problems p;
    const auto aff = RootSystemDesc::parse("A2:1");
    const auto a = cartan_matrix(standard_simple_system(aff), aff.form);
    const auto rep = classify_type(a);
    if (rep.type != GcmType::Affine) p.add("A1^(1) is " + to_string(rep.type));
    if (root_labels(a) != std::vector<Rational>{Rational(1), Rational(1)}) p.add("A1^(1) null vector");
    for (const char* name : {"A3:finite", "B2:finite"}) {
      const auto d = RootSystemDesc::parse(name);
      const auto t = classify_type(cartan_matrix(standard_simple_system(d), d.form)).type;
      if (t != GcmType::Finite) p.add(std::string(name) + " is " + to_string(t));
    }
    QMatrix m(2, 2);
    m(0, 0) = m(1, 1) = Rational(2);
    m(0, 1) = m(1, 0) = Rational(-3);
    if (classify_type(GCMatrix(m)).type != GcmType::Indefinite) p.add("[[2,-3],[-3,2]] not indefinite");
    return std::pair{p.empty(), p.empty() ? "affine (1,1); A2, B2 finite; [[2,-3],[-3,2]] indefinite" : p.str()};
  });
}

CheckResult check_p3_obstruction(std::mt19937_64& rng) {
  return timed(8, "p3 obstruction", [&rng] {
    Problems p;
    for (int k = 0; k < 50; ++k)
      if (!sample_obstruction(4, rng).holds()) p.add("sample " + std::to_string(k));
    const auto cert = obstruction_certificate(4, rng);
    const auto back = Certificate::from_json(Json::parse(cert.to_json().dump()));
    const auto rep = replay(back);
    if (!rep.ok) p.add("replay: " + rep.detail);
    return std::pair{p.empty(), p.empty() ? "50 samples; certificate replays (" + rep.detail + ")" : p.str()};
  });
}

CheckResult check_iso_certificates() {
  return timed(9, "isomorphism certificates", [] {
    Problems p;
    std::size_t pairs = 0;
    for (IsoPair pr : {IsoPair::BD, IsoPair::CBC, IsoPair::BB}) {
      const auto cert = isomorphism_certificate(pr, 3, 3);
      for (const auto& m : cert.payload.at("maps")) pairs += m.at("pairs_checked").get<std::size_t>();
      const auto rep = replay(Certificate::from_json(Json::parse(cert.to_json().dump())));
      if (!rep.ok) p.add(to_string(pr) + " replay: " + rep.detail);
    }
    return std::pair{p.empty(), p.empty() ? "3 pairs, 6 embeddings, " + std::to_string(pairs) +
                                                " basis pairs preserved; replays pass"
                                          : p.str()};
  });
}

CheckResult check_unitary() {
  return timed(10, "unitary form", [] {
    Problems p;
    std::size_t roots = 0;
    for (const char* name : {"A2:1", "A3:1"}) {
      const auto real = Realization::make(RootSystemDesc::parse(name));
      const auto rs = root_spaces(real, 3);
      const auto star = StarInvolution::make(real);
      const auto gram = kappa_sigma_gram(real, core_basis(real, rs), star);
      const auto rep = is_psd_hermitian(gram);
      if (!rep.psd) p.add(std::string(name) + ": Gram not PSD");
      if (!replay(psd_certificate(gram, rep)).ok) p.add(std::string(name) + ": PSD certificate does not replay");
      for (const auto& [w, _] : rs.spaces) {
        if (w.f.is_zero()) continue;
        ++roots;
        (void)check_root_sl2_positivity(real, rs, w, star);
      }
    }
    return std::pair{p.empty(), p.empty() ? "sl2, sl3 cores PSD; " + std::to_string(roots) + " positive factors"
                                          : p.str()};
  });
}

CheckResult check_jacobi(std::mt19937_64& rng) {
  return timed(11, "Jacobi and invariance", [&rng] {
    Problems p;
    // Loop level: random gl matrices on a 2J+1 scheme.
    const auto s = MatrixScheme::make(MatrixScheme::Kind::TwoJ1, {"1", "2", "3"});
    std::uniform_int_distribution<long> deg(-3, 3);
    const auto random_loop = [&] {
      LoopMatrix m(s);
      for (int k = 0; k < 5; ++k)
        m.add(pick(rng, s->size()), pick(rng, s->size()), Laurent::monomial(deg(rng), small_gaussian(rng)));
      return m;
    };
    for (int k = 0; k < 200; ++k) {
      const auto x = random_loop();
      const auto y = random_loop();
      const auto z = random_loop();
      if (!(bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero())
        p.add("loop Jacobi");
      if (loop_form(bracket(x, y), z) != loop_form(x, bracket(y, z))) p.add("loop invariance");
    }
    // Double extension of twisted BC.
    const auto real = Realization::make(RootSystemDesc::parse("BC3:2"));
    const auto rs = root_spaces(real, 3);
    const auto roots = rs.roots();
    const auto basis = real.cartan_basis();
    const auto random_ext = [&] {
      ExtElement e(real.scheme());
      for (int k = 0; k < 4; ++k) {
        const auto& space = rs.at(roots[pick(rng, roots.size())]);
        e = e + small_gaussian(rng) * space[pick(rng, space.size())];
      }
      for (const auto& h : basis) e = e + small_gaussian(rng) * h;
      return e;
    };
    for (int k = 0; k < 200; ++k) {
      const auto a = random_ext();
      const auto b = random_ext();
      const auto c = random_ext();
      const auto& R = real;
      if (!(R.bracket(a, R.bracket(b, c)) + R.bracket(b, R.bracket(c, a)) + R.bracket(c, R.bracket(a, b))).is_zero())
        p.add("extension Jacobi");
      if (R.form(R.bracket(a, b), c) != R.form(a, R.bracket(b, c))) p.add("extension invariance");
    }
    return std::pair{p.empty(), p.empty() ? "200 loop and 200 extension triples exact" : p.str()};
  }, 300);
}

std::vector<CheckResult> run_suite(std::mt19937_64& rng, const std::vector<int>& only) {
  const std::vector<std::function<CheckResult()>> all{
      [] { return check_axiom_suite(); },      [] { return check_realization_match(); },
      [] { return check_coroot_formula(); },   [&] { return check_two_affine(rng); },
      [&] { return check_grading(rng); },      [] { return check_weight_sets(); },
      [] { return check_gcm(); },              [&] { return check_p3_obstruction(rng); },
      [] { return check_iso_certificates(); }, [] { return check_unitary(); },
      [&] { return check_jacobi(rng); }};
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    out.push_back(all[i]());
  }
  return out;
}

}  // namespace lars
