// Copyright 2026 The VCA Bounds Authors
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

#ifndef VCA_RNG_H_
#define VCA_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace vca {

// Seedable, splittable random source. The engine is std::mt19937_64 seeded
// through a SplitMix64 scramble of the user seed; bounded integers use
// rejection sampling so streams are identical across standard libraries.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed);

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);

  // Independent child stream keyed by `stream`; does not advance *this.
  Rng Split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace vca

#endif  // VCA_RNG_H_
