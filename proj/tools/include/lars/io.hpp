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

#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings of the exact types.
 *
 *   Rational     "p/q" or "p"
 *   Gaussian     {"re": "p/q", "im": "p/q"}; scalar slots also accept "p/q"
 *   Laurent      {"<degree>": scalar, ...}
 *   Weight       {"c": "p/q", "eps": {"<label>": "p/q"}, "d": "p/q"}
 *   LoopMatrix   {"scheme": "2J+1", "J": [...], "entries": {"(+a,-b)": Laurent}}
 *   ExtElement   {"c": scalar, "x": LoopMatrix, "d": scalar}
 *
 * A scalar is written as a plain string when real and as an object
 * otherwise. Keys are sorted, so equal values print identically.
 */

#include "json.hpp"

#include "lars/double_ext.hpp"
#include "lars/gcm.hpp"

namespace lars {

using Json = nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Gaussian& g);
/// String when real, object otherwise.
Json scalar_json(const Gaussian& g);
Gaussian gaussian_from_json(const Json& j);

Json to_json(const Laurent& l);
Laurent laurent_from_json(const Json& j);

Json to_json(const Coords& c);
Coords coords_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);
/// Also requires c = 0 and integral eps and d.
Weight root_from_json(const Json& j);

Json to_json(const CartanElement& h);

Json to_json(const LoopMatrix& m);
LoopMatrix loop_matrix_from_json(const Json& j);

Json to_json(const ExtElement& e);
/// The matrix scheme comes from the payload itself.
ExtElement ext_from_json(const Json& j);

Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);
Json to_json(const CMatrix& m);

/// Parses inline JSON, or reads the file when the text names one.
Json parse_json_argument(const std::string& text);

}  // namespace lars
