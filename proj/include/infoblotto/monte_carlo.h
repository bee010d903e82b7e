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

#ifndef INFOBLOTTO_MONTE_CARLO_H_
#define INFOBLOTTO_MONTE_CARLO_H_

#include <cstdint>

#include "infoblotto/game.h"
#include "infoblotto/parallel.h"

namespace infoblotto {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

// Samples per RNG stream. Fixed so the estimate does not depend on the
// number of threads.
inline constexpr std::int64_t kMonteCarloChunk = 1 << 14;

// Unbiased estimate of player I's ex-ante payoff: draw a state from the
// prior, then each battlefield allocation independently by inverse CDF from
// the corresponding marginal. Deterministic in (profile, seed, samples).
// Throws InvalidParameterError for samples < 1.
MonteCarloEstimate MonteCarloValue(const StrategyProfile& profile,
                                   const ValuationMatrix& values,
                                   const Prior& prior, std::int64_t samples,
                                   std::uint64_t seed,
                                   Exec exec = Exec::kOpenMP);

}  // namespace infoblotto

#endif  // INFOBLOTTO_MONTE_CARLO_H_
