// Copyright 2026 The infoblotto Authors
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

#include "infoblotto/monte_carlo.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/core.h>

#include "infoblotto/errors.h"
#include "infoblotto/rng.h"

namespace infoblotto {
namespace {

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

ChunkSums SampleChunk(const StrategyProfile& profile,
                      const ValuationMatrix& values,
                      const std::vector<double>& cumulative_prior,
                      std::int64_t begin, std::int64_t end,
                      std::uint64_t seed, std::uint64_t chunk) {
  CounterRng rng(seed, chunk);
  ChunkSums out;
  const std::size_t n = values.battlefields();
  for (std::int64_t s = begin; s < end; ++s) {
    const double u = rng.Uniform();
    const std::size_t state = std::min<std::size_t>(
        std::upper_bound(cumulative_prior.begin(), cumulative_prior.end(), u) -
            cumulative_prior.begin(),
        cumulative_prior.size() - 1);
    double payoff = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x_i = profile.informed[state][j].Quantile(rng.Uniform());
      const double x_u = profile.uninformed[j].Quantile(rng.Uniform());
      if (x_i > x_u) {
        payoff += values(state, j);
      } else if (x_i < x_u) {
        payoff -= values(state, j);
      }
    }
    out.sum += payoff;
    out.sum_sq += payoff * payoff;
  }
  return out;
}

}  // namespace

MonteCarloEstimate MonteCarloValue(const StrategyProfile& profile,
                                   const ValuationMatrix& values,
                                   const Prior& prior, std::int64_t samples,
                                   std::uint64_t seed, Exec exec) {
  if (samples < 1) {
    throw InvalidParameterError(
        fmt::format("sample count {} must be at least 1", samples));
  }
  if (prior.size() != values.states()) {
    throw DimensionMismatchError("prior and valuation state counts differ");
  }
  profile.CheckShape(values.states(), values.battlefields());

  std::vector<double> cumulative;
  double acc = 0.0;
  for (double p : prior.values()) {
    acc += p;
    cumulative.push_back(acc);
  }

  const std::int64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<ChunkSums> partial(static_cast<std::size_t>(chunks));
  ParallelFor(
      partial.size(),
      [&](std::size_t k) {
        const std::int64_t begin = static_cast<std::int64_t>(k) * kMonteCarloChunk;
        const std::int64_t end = std::min(samples, begin + kMonteCarloChunk);
        partial[k] = SampleChunk(profile, values, cumulative, begin, end, seed, k);
      },
      exec);

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkSums& c : partial) {
    sum += c.sum;
    sum_sq += c.sum_sq;
  }
  const double n = static_cast<double>(samples);
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean = sum / n;
  if (samples > 1) {
    const double var = std::max(0.0, (sum_sq - n * est.mean * est.mean) / (n - 1.0));
    est.std_error = std::sqrt(var / n);
  }
  return est;
}

}  // namespace infoblotto
