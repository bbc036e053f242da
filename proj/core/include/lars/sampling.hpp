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

// Reproducible pseudo-random sampling for property checks. The seed comes
// from the LARS_SEED environment variable when set.

#include <cstdint>
#include <cstdlib>
#include <random>

namespace lars {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed1234ULL;

inline std::uint64_t sampling_seed() {
  const char* s = std::getenv("LARS_SEED");
  return s ? std::strtoull(s, nullptr, 10) : kDefaultSeed;
}

inline std::mt19937_64 make_rng() { return std::mt19937_64(sampling_seed()); }

}  // namespace lars
