// Copyright 2026 The textdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEXTDP_RANDOM_H_
#define TEXTDP_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace textdp {

// All randomness in this library flows through std::mt19937_64 plus the
// helpers below. The standard pins down mt19937_64's output exactly, and we
// never touch std::*_distribution (whose output is implementation-defined),
// so a given seed produces the same bytes on every platform.

// splitmix64 finalizer.
inline std::uint64_t MixBits(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent per-item seed from a master seed, e.g. one stream per sentence.
inline std::uint64_t DeriveSeed(std::uint64_t master_seed, std::uint64_t index) {
  return MixBits(master_seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Uniform draw in [0, 1) with 53-bit resolution.
inline double UnitHalfOpen(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform draw in the open interval (0, 1). Never returns an exact endpoint,
// which keeps `r <= p` exact at both p = 0 (never fires) and p = 1 (always).
inline double UnitOpen(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// FNV-1a, used to derive seeds from strings.
inline std::uint64_t HashBytes(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace textdp

#endif  // TEXTDP_RANDOM_H_
