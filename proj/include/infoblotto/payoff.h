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

#ifndef INFOBLOTTO_PAYOFF_H_
#define INFOBLOTTO_PAYOFF_H_

#include <cstddef>
#include <span>

#include "infoblotto/game.h"
#include "infoblotto/piecewise_cdf.h"

namespace infoblotto {

// E[sgn(a - b)] for independent a ~ first, b ~ second, with sgn(0) = 0.
// Closed-form over atom/atom, atom/segment and segment/segment pairs.
double BattlefieldPayoff(const PiecewiseCdf& first, const PiecewiseCdf& second);

// Player I's expected payoff when of type `state`:
//   sum_j v(state, j) * BattlefieldPayoff(F_I^j(t_state), F_U^j).
double InterimPayoffInformed(const StrategyProfile& profile,
                             const ValuationMatrix& values, const Prior& prior,
                             std::size_t state);

// Prior-weighted interim payoffs. Zero-sum: U's ex-ante payoff is the negation.
double ExAntePayoffInformed(const StrategyProfile& profile,
                            const ValuationMatrix& values, const Prior& prior);

// Sum of marginal means; the left side of the Lotto budget constraint.
double ExpectedBudget(std::span<const PiecewiseCdf> marginals);

}  // namespace infoblotto

#endif  // INFOBLOTTO_PAYOFF_H_
