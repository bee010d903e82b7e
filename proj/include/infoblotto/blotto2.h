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

#ifndef INFOBLOTTO_BLOTTO2_H_
#define INFOBLOTTO_BLOTTO2_H_

#include <optional>

#include "infoblotto/game.h"

// Two-battlefield Colonel Blotto with an informed weak player under the
// uniform prior over the two symmetric valuation rows
//   V = [[v_high, v_low], [v_low, v_high]] / (v_high + v_low).
namespace infoblotto::blotto2 {

class BlottoParams {
 public:
  // Throws InvalidParameterError unless v_high > v_low > 0, and
  // OutOfRegimeError unless X_I / X_U lies in the open interval (1/2, 1).
  BlottoParams(double v_high, double v_low, Budgets budgets);

  static BlottoParams FromRatio(double v_high, double v_low, double gamma,
                                double uninformed_budget = 1.0);

  double v_high() const { return v_high_; }
  double v_low() const { return v_low_; }
  const Budgets& budgets() const { return budgets_; }
  double gamma() const { return budgets_.ratio(); }
  // v_high / v_low, the geometric ratio of the equilibrium weights.
  double value_ratio() const { return v_high_ / v_low_; }

  ValuationMatrix Valuations() const;
  Prior prior() const { return Prior::Uniform(2); }

 private:
  double v_high_;
  double v_low_;
  Budgets budgets_;
};

// X_U = q * d + r with d = X_U - X_I, q = floor(X_U / d), 0 <= r < d.
struct BlottoIndex {
  double d = 0.0;
  int q = 0;
  double r = 0.0;

  bool q_is_odd() const { return q % 2 == 1; }
};

// Integer ratios that are exact in real arithmetic but land a few ulps low in
// floating point (e.g. gamma = 2/3) are snapped to the integer.
BlottoIndex ComputeIndex(const Budgets& budgets);

// Ex-ante equilibrium payoff of the informed player; in (-1, 0).
double InformedPayoff(const BlottoParams& params);

// Complete-information value for the weak player, -1/q. Requires q >= 1.
double GrossWagnerPayoff(int q);

// InformedPayoff - GrossWagnerPayoff(q); strictly positive.
double ValueOfInformation(const BlottoParams& params);

// Sufficient condition for the strong player to secure a nonnegative payoff
// with n battlefields: gamma < 2/n (n even) or gamma < 2/(n+1) (n odd).
bool UninformedGuaranteeCondition(int battlefields, double gamma);

struct BlottoEquilibrium {
  StrategyProfile profile;
  BlottoIndex index;
  double offset = 0.0;  // e in (r, d): location of U's lowest atom.
  double s_a = 0.0;     // normaliser of U's weights.
  double s_b = 0.0;     // normaliser of I's weights.
  // The game value computed from each normaliser, in normalised units.
  double value_from_s_a = 0.0;
  double value_from_s_b = 0.0;
};

// Equilibrium for odd q. Battlefield-1 marginals are equally spaced atoms
// with geometric weights; battlefield 2 receives the remaining budget, so its
// marginal is the reflection x -> X - x.
//
// Throws UnsupportedCaseError for even q and InvalidParameterError when
// `offset` is outside (r, d). Default offset is (r + d) / 2.
BlottoEquilibrium BuildEquilibrium(const BlottoParams& params,
                                   std::optional<double> offset = std::nullopt);

}  // namespace infoblotto::blotto2

#endif  // INFOBLOTTO_BLOTTO2_H_
