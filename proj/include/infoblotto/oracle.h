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

#ifndef INFOBLOTTO_ORACLE_H_
#define INFOBLOTTO_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infoblotto/blotto2.h"
#include "infoblotto/game.h"
#include "infoblotto/lotto3.h"
#include "infoblotto/monte_carlo.h"
#include "infoblotto/parallel.h"

// Independent checks that a profile is an (epsilon-)Bayes-Nash equilibrium.
// Nothing here calls the closed-form payoff formulas except to fill in the
// claimed value of a Certificate.
namespace infoblotto::oracle {

struct Tolerances {
  double deviation = 1e-6;
  double budget = 1e-9;
  double mc_sigmas = 4.0;
  // Added to mc_sigmas * std_error so zero-variance profiles survive the
  // rounding of the sample mean.
  double mc_floor = 1e-12;
};

// Best pure-deviation gain over the profile's own payoff, per player/type.
struct DeviationGaps {
  double uninformed = 0.0;
  std::vector<double> informed;

  double Max() const;
};

// Two-battlefield Blotto. Battlefield-1 marginals must be atomic and
// battlefield 2 must be their reflection about the budget; otherwise throws
// InvalidDistributionError. Scans x in [0, X] on battlefield 1 (remainder on
// battlefield 2) over `grid_points` half-step-offset points plus every point
// where the payoff can jump and the midpoints between them, so the maximum
// of the piecewise-constant deviation payoff is exact.
DeviationGaps BlottoDeviationGap(const StrategyProfile& profile,
                                 const blotto2::BlottoParams& params,
                                 int grid_points = 10000,
                                 Exec exec = Exec::kOpenMP);

// Max over atoms of the mismatch between a battlefield-1 marginal and the
// reflection of its battlefield-2 marginal: 0 when the Blotto constraint
// x1 + x2 = budget binds pointwise.
double BlottoBudgetResidual(const PiecewiseCdf& first,
                            const PiecewiseCdf& second, double budget);

// One marginal's all-pay-auction check: u(x) = sum_k w_k G_k(x) - x, with the
// opponent CDFs G_k tie-adjusted at atoms.
struct SupportCheck {
  // Informed type index, or -1 for the uninformed player.
  int type = -1;
  std::size_t battlefield = 0;
  double slack = 0.0;      // max_x u(x) - max over support of u
  double variation = 0.0;  // max - min of u over the support
};

struct SupportOptimality {
  std::vector<SupportCheck> checks;
  // Per player/type: max over battlefields of slack + variation.
  DeviationGaps gaps;
};

// General Lotto in Lagrangian form: every battlefield is an all-pay auction
// with bid values 2 v p / lambda_I (I, type i) and 2 v / lambda_U weighted by
// p_i (U). Throws InvalidParameterError when multipliers are missing.
SupportOptimality LottoSupportOptimality(
    const StrategyProfile& profile, const lotto3::LottoParams& params,
    const std::optional<lotto3::Multipliers>& multipliers,
    int grid_points = 10000, Exec exec = Exec::kOpenMP);

struct Certificate {
  std::string game;
  double claimed_value = 0.0;
  double exact_value = 0.0;  // ExAntePayoffInformed on the profile
  double best_deviation_gap_uninformed = 0.0;
  std::vector<double> best_deviation_gap_informed;
  double budget_residual_uninformed = 0.0;
  std::vector<double> budget_residual_informed;
  MonteCarloEstimate mc;
  std::uint64_t mc_seed = 0;
  Tolerances tolerances;
  bool pass = false;
};

struct CertifyOptions {
  int grid_points = 10000;
  std::int64_t mc_samples = 1000000;
  std::uint64_t seed = 12345;
  Tolerances tolerances;
  Exec exec = Exec::kOpenMP;
};

// pass iff every gap <= tolerances.deviation, every residual <=
// tolerances.budget and |mc.mean - claimed| <= mc_sigmas * std_error
// (+ mc_floor).
bool Passes(const Certificate& cert);

Certificate Certify(const StrategyProfile& profile,
                    const blotto2::BlottoParams& params,
                    const CertifyOptions& options = {});
Certificate Certify(const StrategyProfile& profile,
                    const lotto3::LottoParams& params,
                    const CertifyOptions& options = {});

}  // namespace infoblotto::oracle

#endif  // INFOBLOTTO_ORACLE_H_
