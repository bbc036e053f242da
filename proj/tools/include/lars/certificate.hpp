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
 * @file certificate.hpp
 * @brief Replayable JSON certificates.
 *
 * Kinds: "isomorphism" (embedding data, window basis and images),
 * "obstruction" (p3 evidence matrices), "psd" (Gram matrix with pivots or a
 * witness minor) and "axiom-report" (not replayable; a record only).
 */

#include <random>

#include "lars/certificates.hpp"
#include "lars/io.hpp"
#include "lars/linalg.hpp"

namespace lars {

struct Certificate {
  std::string kind;
  bool replayable = true;
  Json payload;

  [[nodiscard]] Json to_json() const;
  static Certificate from_json(const Json& j);
};

struct ReplayResult {
  bool ok = false;
  std::string detail;
};

/// Builds and verifies both embeddings of the pair; throws CertificateError
/// when verification fails (a construction bug).
Certificate isomorphism_certificate(IsoPair pair, std::size_t n, long window);

Certificate obstruction_certificate(std::size_t size, std::mt19937_64& rng);

Certificate psd_certificate(const CMatrix& gram, const PsdReport& report);

Certificate axiom_certificate(const RootSystemDesc& desc, long lo, long hi, const AxiomReport& report);

/// Re-verifies from the payload alone.
ReplayResult replay(const Certificate& cert);

Json to_json(const AxiomReport& report);

}  // namespace lars
