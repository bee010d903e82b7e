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

#ifndef INFOBLOTTO_LOTTO3_H_
#define INFOBLOTTO_LOTTO3_H_

#include <cstddef>
#include <string_view>

#include "infoblotto/game.h"
#include "infoblotto/piecewise_cdf.h"

// Three-battlefield General Lotto with cyclic valuations
//   V = c * [[1, a, b], [b, 1, a], [a, b, 1]],   c = 1 / (1 + a + b),
// uniform prior over the three rows, and an informed weak player.
namespace infoblotto::lotto3 {

// Budget-ratio regimes; each has its own multipliers and marginal shapes.
//   kLow:  gamma in (0, 1/3]
//   kMid:  gamma in (1/3, 2/3]
//   kHigh: gamma in (2/3, 1]
enum class Regime { kLow, kMid, kHigh };

std::string_view RegimeName(Regime regime);

// Throws InvalidParameterError for gamma outside (0, 1].
Regime RegimeFor(double gamma);

class LottoParams {
 public:
  // Requires 1 > alpha >= beta > 0, gamma in (0, 1], uninformed_budget > 0.
  LottoParams(double alpha, double beta, double gamma,
              double uninformed_budget = 1.0);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double uninformed_budget() const { return x_u_; }
  double informed_budget() const { return gamma_ * x_u_; }
  // c = 1 / (1 + alpha + beta): the value of the diagonal battlefield.
  double normalization() const { return 1.0 / (1.0 + alpha_ + beta_); }
  Regime regime() const { return RegimeFor(gamma_); }

  Budgets budgets() const { return Budgets(informed_budget(), x_u_); }
  ValuationMatrix Valuations() const;
  Prior prior() const { return Prior::Uniform(3); }

 private:
  double alpha_;
  double beta_;
  double gamma_;
  double x_u_;
};

// Player I's ex-ante equilibrium payoff. Continuous in gamma across the
// regime boundaries and strictly above the complete-information value.
double InformedPayoff(double alpha, double beta, double gamma);

// Both players uninformed: gamma - 1.
double CompleteInfoBaseline(double gamma);

// Lagrange multipliers of the two expected-budget constraints. In every
// regime uninformed == 3 * gamma * informed.
struct Multipliers {
  double informed = 0.0;
  double uninformed = 0.0;
};

Multipliers ComputeMultipliers(const LottoParams& params);

// One "column" of the equilibrium: U's marginal (identical on all
// battlefields) and I's marginal on a battlefield of value c, a*c and b*c.
struct RegimeSolution {
  Regime regime;
  Multipliers multipliers;
  PiecewiseCdf uninformed;
  PiecewiseCdf diagonal;
  PiecewiseCdf alpha_marginal;
  PiecewiseCdf beta_marginal;
};

RegimeSolution SolveRegime(const LottoParams& params);

// 0 -> diagonal (value c), 1 -> alpha, 2 -> beta for battlefield j in state i.
inline std::size_t ValueClass(std::size_t state, std::size_t battlefield) {
  return (battlefield + 3 - state % 3) % 3;
}

// Full 3-type x 3-battlefield profile assembled from SolveRegime().
StrategyProfile BuildEquilibrium(const LottoParams& params);
StrategyProfile AssembleProfile(const RegimeSolution& solution);

struct ZeroCrossing {
  double threshold = 0.0;
  // False when the threshold is >= 1, i.e. I wins for every alpha in (0, 1).
  bool in_unit_interval = false;
};

// With alpha == beta, InformedPayoff(a, a, gamma) > 0 iff a < threshold.
// Throws OutOfRegimeError for gamma <= 1/3, where I never wins.
ZeroCrossing ZeroCrossingAlpha(double gamma);

// Value of buying information for a fraction `cost` of I's budget, starting
// from the complete-information game with alpha == beta:
//   InformedPayoff(a, a, (1 - cost) gamma) - (gamma - 1).
double Voi(double alpha, double gamma, double cost);

struct EquivalentRatio {
  double gamma_e = 0.0;  // root of InformedPayoff(a, a, g) = gamma - 1 (mid/high form)
  bool in_region_b = false;  // gamma_e >= 1/3
};

// Closed form for gamma_e. alpha == 0 is accepted as the limiting case.
EquivalentRatio EquivalentBudgetRatio(double alpha, double gamma);

// Largest budget fraction I can trade for information without losing
// relative to gamma - 1.
double MaxCost(double alpha, double gamma);

// True iff the three interim payoffs of the constructed equilibrium agree
// within 1e-9.
bool InterimEquivalenceCheck(double alpha, double beta, double gamma);

}  // namespace infoblotto::lotto3

#endif  // INFOBLOTTO_LOTTO3_H_
