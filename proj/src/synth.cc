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

#include "cfbounds/synth.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cfbounds/errors.h"
#include "cfbounds/rfm.h"

namespace cfbounds {

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgumentError("empty sampling range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::vector<Rational> RandomQ(Rng& rng, std::uint64_t grid) {
  if (grid == 0) throw InvalidArgumentError("grid must be positive");
  std::array<std::size_t, kIvCellCount> cells;
  std::iota(cells.begin(), cells.end(), 0);
  const std::size_t support = 1 + rng.Below(kIvCellCount);
  for (std::size_t i = 0; i < support; ++i) {
    std::swap(cells[i], cells[i + rng.Below(kIvCellCount - i)]);
  }
  std::vector<std::uint64_t> cuts;
  for (std::size_t i = 0; i + 1 < support; ++i) cuts.push_back(rng.Below(grid + 1));
  cuts.push_back(0);
  cuts.push_back(grid);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Rational> q(kIvCellCount, 0);
  for (std::size_t i = 0; i < support; ++i) {
    q[cells[i]] = Rational(static_cast<long long>(cuts[i + 1] - cuts[i]),
                           static_cast<long long>(grid));
  }
  return q;
}

IvDistribution Pushforward(const std::vector<Rational>& q, const Rational& p_z1) {
  if (q.size() != kIvCellCount) throw InvalidArgumentError("q must have 16 cells");
  Rational total = 0;
  for (const auto& v : q) {
    if (v < 0) throw InvalidArgumentError("q has a negative cell");
    total += v;
  }
  if (total != 1) throw InvalidArgumentError("q does not sum to 1");
  return IvDistribution::Make(IvPushforward(q), p_z1);
}

IvDistribution RandomFeasibleP(std::uint64_t seed, std::uint64_t grid) {
  Rng rng(seed);
  std::vector<Rational> q = RandomQ(rng, grid);
  const Rational p_z1(static_cast<long long>(1 + rng.Below(99)), 100);
  return Pushforward(q, p_z1);
}

Rational TrueAce(const std::vector<Rational>& q) {
  if (q.size() != kIvCellCount) throw InvalidArgumentError("q must have 16 cells");
  Rational ace = 0;
  for (std::size_t j = 0; j < 4; ++j) ace += q[4 * j + 1] - q[4 * j + 2];
  return ace;
}

TrialResult SimulateTrial(const std::vector<Rational>& q, const Rational& p_z1, std::uint64_t n,
                          std::uint64_t seed) {
  if (n == 0) throw InvalidArgumentError("sample size must be at least 1");
  TrialResult result;
  result.exact = Pushforward(q, p_z1);
  result.true_ace = TrueAce(q);

  // Integer weights over a common denominator for exact categorical draws.
  BigInt common = 1;
  for (const auto& v : q) common = lcm(common, BigInt(denominator(v)));
  common = lcm(common, BigInt(denominator(p_z1)));
  if (common > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidArgumentError("q and P(z1) denominators are too large for exact sampling");
  }
  const std::uint64_t scale = common.convert_to<std::uint64_t>();
  std::array<std::uint64_t, kIvCellCount> cumulative{};
  std::uint64_t running = 0;
  for (std::size_t c = 0; c < kIvCellCount; ++c) {
    running += (q[c] * common).convert_to<BigInt>().convert_to<std::uint64_t>();
    cumulative[c] = running;
  }
  const std::uint64_t z1_weight =
      (p_z1 * common).convert_to<BigInt>().convert_to<std::uint64_t>();

  // (d, y) for every (z, r_D, r_Y), evaluated once through the response tables.
  const CausalModel model = IvModel();
  std::array<std::array<std::size_t, kIvCellCount>, 2> outcome{};
  for (std::uint64_t z = 0; z < 2; ++z) {
    for (std::uint64_t c = 0; c < kIvCellCount; ++c) {
      const Assignment values = EvaluateFactual(model, {z, c / 4, c % 4});
      outcome[z][c] = IvIndex(static_cast<int>(values[2]), static_cast<int>(values[1]),
                              static_cast<int>(z));
    }
  }

  Rng rng(seed);
  Population& pop = result.population;
  pop.size = n;
  pop.seed = seed;
  for (std::uint64_t unit = 0; unit < n; ++unit) {
    const std::uint64_t draw = rng.Below(scale);
    const std::size_t cell = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), draw) - cumulative.begin());
    const std::size_t z = rng.Below(scale) < z1_weight ? 1 : 0;
    ++pop.cell_counts[cell];
    ++pop.arm_counts[z];
    ++pop.observed_counts[outcome[z][cell]];
  }

  for (std::size_t z = 0; z < 2; ++z) {
    if (pop.arm_counts[z] == 0) {
      throw InvalidArgumentError("arm z" + std::to_string(z) +
                                 " received no units; increase the sample size");
    }
  }
  std::array<Rational, kIvObservedCount> p;
  for (std::size_t i = 0; i < kIvObservedCount; ++i) {
    p[i] = Rational(static_cast<long long>(pop.observed_counts[i]),
                    static_cast<long long>(pop.arm_counts[i / 4]));
  }
  result.empirical = IvDistribution::Make(
      p, Rational(static_cast<long long>(pop.arm_counts[1]), static_cast<long long>(n)));
  return result;
}

Rational MaxDeviation(const IvDistribution& a, const IvDistribution& b) {
  Rational worst = 0;
  for (std::size_t i = 0; i < kIvObservedCount; ++i) {
    worst = std::max(worst, Rational(abs(a.p[i] - b.p[i])));
  }
  return worst;
}

}  // namespace cfbounds
