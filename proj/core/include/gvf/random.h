// Copyright 2026 The GVF Toolkit Authors.
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

// Platform-independent seeded randomness and hashing. std::*_distribution
// output is implementation-defined, so the pipeline draws through these
// helpers to keep generated files byte-identical across toolchains.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace gvf {

constexpr std::uint64_t Fnv1a64(std::string_view data,
                                std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// SplitMix64 (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  // Uniform in [0, n) by rejection; n must be > 0.
  constexpr std::size_t UniformIndex(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  constexpr double UniformUnit() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  constexpr bool Bernoulli(double p) { return UniformUnit() < p; }

 private:
  std::uint64_t state_;
};

// Independent stream for one record: results do not depend on processing
// order or on which worker handles the record.
inline SplitMix64 RecordRng(std::uint64_t seed, std::string_view record_id,
                            std::string_view purpose) {
  SplitMix64 mix(seed ^ Fnv1a64(purpose, Fnv1a64("\x1f", Fnv1a64(record_id))));
  return SplitMix64(mix());
}

}  // namespace gvf
