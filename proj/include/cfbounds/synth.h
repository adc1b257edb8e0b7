// Copyright 2026 The cfbounds Authors.
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

// Ground-truth populations for the binary instrumental-variable model.
//
// Randomness comes from std::mt19937_64 (whose output sequence the C++
// standard fixes) with bounded integers drawn by rejection sampling on the
// raw 64-bit outputs, so a seed reproduces the same draws on every platform.

#ifndef CFBOUNDS_SYNTH_H_
#define CFBOUNDS_SYNTH_H_

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "cfbounds/constraints.h"
#include "cfbounds/rational.h"

namespace cfbounds {

inline constexpr std::uint64_t kDefaultGrid = 10000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Random response distribution on the 16 cells with denominator `grid`: a
// uniformly sized random support, then a uniform-cut composition of `grid`
// over it. Sparse supports are common, which exercises degenerate vertices.
std::vector<Rational> RandomQ(Rng& rng, std::uint64_t grid = kDefaultGrid);

// P q for a random q, with P(z1) = k/100 for a random k in [1, 99].
IvDistribution RandomFeasibleP(std::uint64_t seed, std::uint64_t grid = kDefaultGrid);

// Exact pushforward P q.
IvDistribution Pushforward(const std::vector<Rational>& q, const Rational& p_z1);

// ACE(D -> Y) = P(r_Y = 1) - P(r_Y = 2).
Rational TrueAce(const std::vector<Rational>& q);

struct Population {
  // Units per (r_D, r_Y) cell, indexed 4*j + k, and per assignment arm.
  std::array<std::uint64_t, kIvCellCount> cell_counts{};
  std::array<std::uint64_t, 2> arm_counts{};
  // counts[4*z + 2*y + d]: units observed with (y, d) in arm z.
  std::array<std::uint64_t, kIvObservedCount> observed_counts{};
  std::uint64_t size = 0;
  std::uint64_t seed = 0;
};

struct TrialResult {
  Population population;
  // Empirical P(y, d | z) and P(z1) from the sample.
  IvDistribution empirical;
  // Noise-free pushforward of q.
  IvDistribution exact;
  Rational true_ace;
};

// Samples n units i.i.d. from q, assigns z1 with probability p_z1 and
// evaluates d, y through the model's response functions. Throws
// InvalidArgumentError when an arm receives no units or q's common
// denominator does not fit in 64 bits.
TrialResult SimulateTrial(const std::vector<Rational>& q, const Rational& p_z1, std::uint64_t n,
                          std::uint64_t seed);

// Largest |empirical - exact| over the eight observed parameters.
Rational MaxDeviation(const IvDistribution& a, const IvDistribution& b);

}  // namespace cfbounds

#endif  // CFBOUNDS_SYNTH_H_
