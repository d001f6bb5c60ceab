// Copyright 2026 The forumgame Authors.
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

#ifndef FORUMGAME_RANDOM_H_
#define FORUMGAME_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace forumgame {

// Seeded random source with platform-independent output.
//
// std::mt19937_64 is fully specified by the standard, but the standard
// distributions are not, so every draw used by the simulator goes through
// the helpers below. Same seed, same sequence, on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble();

  // Standard normal via Box-Muller; caches the second variate.
  double Normal();

  bool Bernoulli(double p) { return UniformDouble() < p; }

  // Uniform size-`k` subset of {0, ..., n-1}, returned in ascending order.
  std::vector<int> Subset(int n, int k);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Mixes a base seed with a stream id (round index, run index) so that
// independent streams do not overlap. splitmix64 finalizer.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream);

}  // namespace forumgame

#endif  // FORUMGAME_RANDOM_H_
