// Copyright 2026 The hdsim Authors
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
#include <span>
#include <vector>

namespace hdsim::rng {

/// SplitMix64 step; used to derive independent sub-seeds from a base seed.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic sub-seed for (base, stream).  Streams derived this way are
/// independent of evaluation order, which keeps parallel evaluation
/// bit-reproducible.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Seeded draws built directly on std::mt19937_64 raw output.  The standard
/// distributions are implementation-defined, so everything here does its own
/// arithmetic to stay bit-identical across platforms.
class Engine {
 public:
  explicit Engine(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller (two uniforms per draw, no caching).
  double normal();

  /// Poisson variate.  Inversion below mean 10, Hörmann's PTRS transformed
  /// rejection above.
  std::int64_t poisson(double mean);

  /// Index drawn from a normalized probability vector (inverse CDF).
  int categorical(std::span<const double> probs);

  /// n independent categorical draws tallied per bin.
  std::vector<std::int64_t> multinomial(std::span<const double> probs,
                                        std::int64_t n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace hdsim::rng
