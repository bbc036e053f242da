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

#include "lars/io.hpp"

#include <filesystem>
#include <fstream>

namespace lars {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw IoError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const AlgebraError& e) {
      throw IoError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw IoError("expected a rational string, got " + j.dump());
}

Json to_json(const Gaussian& g) { return {{"re", to_json(g.re())}, {"im", to_json(g.im())}}; }

Json scalar_json(const Gaussian& g) { return g.is_real() ? to_json(g.re()) : to_json(g); }

Gaussian gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return {re, im};
  }
  return {rational_from_json(j)};
}

Json to_json(const Laurent& l) {
  Json out = Json::object();
  for (const auto& [q, c] : l.terms()) out[std::to_string(q)] = scalar_json(c);
  return out;
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_object()) return Laurent(gaussian_from_json(j));
  Laurent::Terms terms;
  for (const auto& [k, v] : j.items()) {
    std::int64_t q = 0;
    try {
      std::size_t used = 0;
      q = std::stoll(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw IoError("bad Laurent degree '" + k + "'");
    }
    const Gaussian c = gaussian_from_json(v);
    if (!c.is_zero()) terms[q] = c;
  }
  return Laurent(terms);
}

Json to_json(const Coords& c) {
  Json out = Json::object();
  for (const auto& [k, v] : c.entries()) out[k] = to_json(v);
  return out;
}

Coords coords_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("expected an object of label coordinates");
  Coords c;
  for (const auto& [k, v] : j.items()) c.set(k, rational_from_json(v));
  return c;
}

Json to_json(const Weight& w) { return {{"c", to_json(w.z)}, {"eps", to_json(w.f)}, {"d", to_json(w.t)}}; }

Weight weight_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("expected a weight object");
  Weight w;
  if (j.contains("c")) w.z = rational_from_json(j.at("c"));
  if (j.contains("eps")) w.f = coords_from_json(j.at("eps"));
  if (j.contains("d")) w.t = rational_from_json(j.at("d"));
  for (const auto& [k, _] : j.items())
    if (k != "c" && k != "eps" && k != "d") throw IoError("unknown weight field '" + k + "'");
  return w;
}

Weight root_from_json(const Json& j) {
  const Weight w = weight_from_json(j);
  if (!w.is_root_shaped()) throw IoError("not root-shaped (needs c = 0, integral eps and d): " + j.dump());
  return w;
}

Json to_json(const CartanElement& h) { return {{"c", to_json(h.z)}, {"eps", to_json(h.h)}, {"d", to_json(h.t)}}; }

Json to_json(const LoopMatrix& m) {
  const auto& s = *m.scheme();
  Json entries = Json::object();
  for (const auto& [k, v] : m.entries()) entries["(" + s.name(k.first) + "," + s.name(k.second) + ")"] = to_json(v);
  return {{"scheme", s.kind_name()}, {"J", s.labels()}, {"entries", entries}};
}

LoopMatrix loop_matrix_from_json(const Json& j) {
  SchemePtr s;
  try {
    s = MatrixScheme::make(MatrixScheme::parse_kind(field(j, "scheme").get<std::string>()),
                           field(j, "J").get<std::vector<Label>>());
  } catch (const LoopError& e) {
    throw IoError(e.what());
  } catch (const Json::exception& e) {
    throw IoError(e.what());
  }
  LoopMatrix m(s);
  if (!j.contains("entries")) return m;
  for (const auto& [k, v] : j.at("entries").items()) {
    const auto comma = k.find(',');
    if (k.size() < 5 || k.front() != '(' || k.back() != ')' || comma == std::string::npos)
      throw IoError("bad entry key '" + k + "'");
    try {
      m.add(s->slot(k.substr(1, comma - 1)), s->slot(k.substr(comma + 1, k.size() - comma - 2)),
            laurent_from_json(v));
    } catch (const LoopError& e) {
      throw IoError(e.what());
    }
  }
  return m;
}

Json to_json(const ExtElement& e) { return {{"c", scalar_json(e.z)}, {"x", to_json(e.x)}, {"d", scalar_json(e.t)}}; }

ExtElement ext_from_json(const Json& j) {
  return {gaussian_from_json(field(j, "c")), loop_matrix_from_json(field(j, "x")), gaussian_from_json(field(j, "d"))};
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) throw IoError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j.at(i).at(k));
  }
  return m;
}

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Json parse_json_argument(const std::string& text) {
  std::error_code ec;
  if (!text.empty() && text.front() != '{' && text.front() != '[' && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    try {
      return Json::parse(in);
    } catch (const Json::exception& e) {
      throw IoError(text + ": " + e.what());
    }
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lars
