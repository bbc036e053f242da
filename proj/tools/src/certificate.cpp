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

#include "lars/certificate.hpp"

namespace lars {

Json Certificate::to_json() const { return {{"kind", kind}, {"replayable", replayable}, {"payload", payload}}; }

Certificate Certificate::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("payload")) throw IoError("not a certificate");
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.replayable = j.value("replayable", false);
  c.payload = j.at("payload");
  return c;
}

namespace {

Json map_json(const EmbeddingMap& m, const std::vector<ExtElement>& basis, const Realization& src,
              const Realization& dst, const EmbeddingCheck& check) {
  Json b = Json::array();
  Json img = Json::array();
  for (const auto& x : basis) {
    b.push_back(to_json(x));
    img.push_back(to_json(m.apply(x, src, dst)));
  }
  return {{"source", m.source.name()},
          {"target", m.target.name()},
          {"note", m.note},
          {"e", to_json(m.e)},
          {"e_plus", to_json(m.e_plus)},
          {"weights", m.weights},
          {"rho", to_json(m.rho)},
          {"form_factor", to_json(check.form_factor)},
          {"pairs_checked", check.pairs_checked},
          {"basis", std::move(b)},
          {"images", std::move(img)}};
}

EmbeddingMap map_from_json(const Json& j) {
  EmbeddingMap m;
  m.source = RootSystemDesc::parse(j.at("source").get<std::string>());
  m.target = RootSystemDesc::parse(j.at("target").get<std::string>());
  m.note = j.value("note", "");
  m.e = qmatrix_from_json(j.at("e"));
  m.e_plus = qmatrix_from_json(j.at("e_plus"));
  m.weights = j.at("weights").get<std::vector<int>>();
  m.rho = rational_from_json(j.at("rho"));
  return m;
}

ReplayResult replay_isomorphism(const Json& p) {
  std::size_t pairs = 0;
  for (const auto& mj : p.at("maps")) {
    const EmbeddingMap m = map_from_json(mj);
    const auto src = Realization::make(m.source);
    const auto dst = Realization::make(m.target);
    if (m.e.rows() != dst.scheme()->size() || m.e.cols() != src.scheme()->size() ||
        m.e_plus * m.e != QMatrix::identity(src.scheme()->size()))
      return {false, "embedding matrices do not fit " + m.source.name() + " -> " + m.target.name()};
    std::vector<ExtElement> basis;
    for (const auto& b : mj.at("basis")) basis.push_back(ext_from_json(b));
    const auto& images = mj.at("images");
    if (images.size() != basis.size()) return {false, "basis and image lists differ in length"};
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!src.contains(basis[i])) return {false, "basis element outside the source: " + basis[i].to_string()};
      if (m.apply(basis[i], src, dst) != ext_from_json(images.at(i)))
        return {false, "listed image differs from the map at " + basis[i].to_string()};
    }
    const auto check = verify_embedding(m, basis);
    if (!check.ok) return {false, check.failure};
    if (check.form_factor != rational_from_json(mj.at("form_factor"))) return {false, "form factor mismatch"};
    pairs += check.pairs_checked;
  }
  return {true, std::to_string(pairs) + " basis pairs re-verified"};
}

ReplayResult replay_obstruction(const Json& p) {
  const auto ev = obstruction_from(loop_matrix_from_json(p.at("x")), loop_matrix_from_json(p.at("conjugator")),
                                   loop_matrix_from_json(p.at("structure")));
  if (ev.p3_x != gaussian_from_json(p.at("p3_x"))) return {false, "p3(x) differs from the recorded value"};
  if (!ev.holds()) return {false, "p3 evidence does not hold"};
  return {true, "p3(x) = " + ev.p3_x.to_string() + ", conjugation keeps it, -S x^T S^-1 negates it"};
}

ReplayResult replay_psd(const Json& p) {
  const Json& g = p.at("gram");
  const std::size_t n = g.size();
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(i, k) = gaussian_from_json(g.at(i).at(k));
  const bool claimed = p.at("psd").get<bool>();
  if (!claimed) {
    // Re-check the witness minor directly.
    const auto idx = p.at("witness").get<std::vector<std::size_t>>();
    CMatrix minor(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) minor(i, k) = m(idx[i], idx[k]);
    const Gaussian det = determinant(minor);
    if (!det.is_real() || det.re().sign() >= 0) return {false, "witness minor is not negative"};
    return {true, "principal minor " + det.to_string() + " < 0"};
  }
  const auto rep = psd_check(m);
  if (!rep.psd) return {false, "matrix is not semidefinite"};
  std::vector<Rational> pivots;
  for (const auto& v : p.at("pivots")) pivots.push_back(rational_from_json(v));
  if (pivots != rep.pivots) return {false, "pivot list differs"};
  return {true, std::to_string(rep.pivots.size()) + " positive pivots, kernel " + std::to_string(rep.kernel_dimension)};
}

}  // namespace

Certificate isomorphism_certificate(IsoPair pair, std::size_t n, long window) {
  Certificate c{"isomorphism", true, Json::object()};
  c.payload["pair"] = to_string(pair);
  c.payload["n"] = n;
  c.payload["window"] = window;
  Json maps = Json::array();
  for (const auto& m : iso_pair_maps(pair, n)) {
    const auto src = Realization::make(m.source);
    const auto dst = Realization::make(m.target);
    const auto basis = window_basis(src, window);
    const auto check = verify_embedding(m, basis);
    if (!check.ok) throw CertificateError(m.note + ": " + check.failure);
    maps.push_back(map_json(m, basis, src, dst, check));
  }
  c.payload["maps"] = std::move(maps);
  return c;
}

Certificate obstruction_certificate(std::size_t size, std::mt19937_64& rng) {
  const auto ev = sample_obstruction(size, rng);
  if (!ev.holds()) throw CertificateError("sampled p3 evidence does not hold");
  return {"obstruction",
          true,
          {{"pair", "A1-C2"},
           {"x", to_json(ev.x)},
           {"conjugator", to_json(ev.conjugator)},
           {"structure", to_json(ev.structure)},
           {"p3_x", scalar_json(ev.p3_x)},
           {"p3_conjugated", scalar_json(ev.p3_conjugated)},
           {"p3_neg_transposed", scalar_json(ev.p3_neg_transposed)}}};
}

Certificate psd_certificate(const CMatrix& gram, const PsdReport& report) {
  Json pivots = Json::array();
  for (const auto& p : report.pivots) pivots.push_back(to_json(p));
  Json payload{{"gram", to_json(gram)}, {"psd", report.psd}, {"pivots", pivots},
               {"kernel_dimension", report.kernel_dimension}};
  if (!report.psd) {
    payload["witness"] = report.witness;
    payload["witness_determinant"] = to_json(report.witness_determinant);
  }
  return {"psd", true, std::move(payload)};
}

Json to_json(const AxiomReport& report) {
  Json verdicts = Json::object();
  for (const auto& [name, v] : report.verdicts) {
    Json entry{{"status", v.pass ? "pass" : "fail"}};
    if (!v.detail.empty()) entry["detail"] = v.detail;
    if (!v.counterexample.empty()) {
      Json ce = Json::array();
      for (const auto& w : v.counterexample) ce.push_back(to_json(w));
      entry["counterexample"] = std::move(ce);
    }
    verdicts[name] = std::move(entry);
  }
  Json out{{"verdicts", std::move(verdicts)}, {"root_count", report.root_count}, {"all_pass", report.all_pass()}};
  if (report.isotropic_generator) out["isotropic_generator"] = to_json(*report.isotropic_generator);
  return out;
}

Certificate axiom_certificate(const RootSystemDesc& desc, long lo, long hi, const AxiomReport& report) {
  Json payload = to_json(report);
  payload["system"] = desc.name();
  payload["window"] = {lo, hi};
  return {"axiom-report", false, std::move(payload)};
}

ReplayResult replay(const Certificate& cert) {
  if (!cert.replayable) return {false, "certificate of kind '" + cert.kind + "' is not replayable"};
  try {
    if (cert.kind == "isomorphism") return replay_isomorphism(cert.payload);
    if (cert.kind == "obstruction") return replay_obstruction(cert.payload);
    if (cert.kind == "psd") return replay_psd(cert.payload);
  } catch (const Json::exception& e) {
    return {false, std::string("malformed payload: ") + e.what()};
  } catch (const std::runtime_error& e) {
    return {false, e.what()};
  }
  return {false, "unknown certificate kind '" + cert.kind + "'"};
}

}  // namespace lars
