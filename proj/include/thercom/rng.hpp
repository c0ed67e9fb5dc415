// Copyright 2026 The thercom Authors
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

#include <cstdint>
#include <random>

namespace thercom {

using Engine = std::mt19937_64;

/// splitmix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the independent stream owned by chunk `chunk` of a run seeded with
/// `master`. Depends only on the pair, never on which worker runs the chunk.
constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t chunk) {
  return mix64(mix64(master) ^ mix64(chunk + 0x632be59bd9b4e019ULL));
}

inline Engine make_stream(std::uint64_t master, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(stream_seed(master, chunk)),
                    static_cast<std::uint32_t>(stream_seed(master, chunk) >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return Engine(seq);
}

}  // namespace thercom
