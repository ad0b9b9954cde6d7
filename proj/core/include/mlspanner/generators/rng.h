// Copyright 2026 The mlspanner Authors
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

#ifndef MLSPANNER_GENERATORS_RNG_H_
#define MLSPANNER_GENERATORS_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mlspanner {

// Independent substreams of one seed. Topology, weights and terminals draw
// from different streams so that, e.g., changing the number of levels
// leaves the graph untouched.
enum class Stream : std::uint64_t { kTopology = 1, kWeights = 2, kTerminals = 3 };

// SplitMix64 finaliser; also used to fold several values into one seed.
std::uint64_t Mix64(std::uint64_t x);
std::uint64_t MixSeed(std::initializer_list<std::uint64_t> parts);

// std::mt19937_64 keyed by Mix64(seed, stream). The integer and real draws
// are implemented here rather than with std::uniform_*_distribution, whose
// output differs between standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream);

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int Between(int lo, int hi);
  // Uniform in [0, 1) with 53 random bits.
  double Unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace mlspanner

#endif  // MLSPANNER_GENERATORS_RNG_H_
