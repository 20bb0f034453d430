/*
 * Copyright 2026 The SEBQ Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEBQ_RNG_H_
#define SEBQ_RNG_H_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace sebq {

// All randomness in the library flows through this engine. mt19937_64 is
// fully specified by the standard, so seeded runs are reproducible on every
// platform as long as we avoid the implementation-defined distributions.
using Rng = std::mt19937_64;

// Seeded engine, or one drawn from std::random_device when no seed is given.
Rng MakeRng(std::optional<std::uint64_t> seed);

// Uniform integer in [0, bound). Portable (Lemire's multiply-shift with
// rejection), unlike std::uniform_int_distribution.
std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound);

inline int RandomBit(Rng& rng) { return static_cast<int>(rng() >> 63); }

// Derives an independent seed for a sub-stream (trial i of an experiment).
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index);

template <typename T>
void Shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = UniformBelow(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace sebq

#endif  // SEBQ_RNG_H_
