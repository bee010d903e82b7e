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

#include "infoblotto/blotto2.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "infoblotto/errors.h"

namespace infoblotto::blotto2 {
namespace {

void CheckRegime(double v_high, double v_low, double gamma) {
  if (!std::isfinite(v_high) || !std::isfinite(v_low) || !(v_low > 0.0) ||
      !(v_high > v_low)) {
    throw InvalidParameterError(fmt::format(
        "need v_high > v_low > 0, got v_high={} v_low={}", v_high, v_low));
  }
  if (gamma < 0.5) {
    throw OutOfRegimeError(fmt::format(
        "gamma={} < 1/2: U secures both battlefields regardless of I's "
        "allocation",
        gamma));
  }
  if (!(gamma > 0.5) || !(gamma < 1.0)) {
    throw OutOfRegimeError(fmt::format(
        "gamma={} outside the open interval (1/2, 1) covered by the "
        "two-battlefield solution",
        gamma));
  }
}

// sum_{k=0}^{n-1} c^k
double GeometricSum(double c, int n) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 0; k < n; ++k) {
    sum += term;
    term *= c;
  }
  return sum;
}

}  // namespace

BlottoParams::BlottoParams(double v_high, double v_low, Budgets budgets)
    : v_high_(v_high), v_low_(v_low), budgets_(budgets) {
  CheckRegime(v_high_, v_low_, budgets_.ratio());
}

BlottoParams BlottoParams::FromRatio(double v_high, double v_low, double gamma,
                                     double uninformed_budget) {
  CheckRegime(v_high, v_low, gamma);
  return BlottoParams(v_high, v_low,
                      Budgets(gamma * uninformed_budget, uninformed_budget));
}

ValuationMatrix BlottoParams::Valuations() const {
  const double hi = v_high_ / (v_high_ + v_low_);
  const double lo = v_low_ / (v_high_ + v_low_);
  return ValuationMatrix(2, 2, {hi, lo, lo, hi});
}

BlottoIndex ComputeIndex(const Budgets& budgets) {
  BlottoIndex index;
  index.d = budgets.uninformed() - budgets.informed();
  if (!(index.d > 0.0)) {
    throw OutOfRegimeError("equal budgets: X_U - X_I must be positive");
  }
  const double ratio = budgets.uninformed() / index.d;
  const double nearest = std::round(ratio);
  double q = std::floor(ratio);
  if (std::abs(ratio - nearest) <= 1e-12 * nearest) q = nearest;
  index.q = static_cast<int>(q);
  index.r = budgets.uninformed() - q * index.d;
  if (index.r < 0.0) index.r = 0.0;
  return index;
}

double InformedPayoff(const BlottoParams& params) {
  const int q = ComputeIndex(params.budgets()).q;
  const double c = params.value_ratio();
  if (q % 2 == 1) {
    return -1.0 / (2.0 * GeometricSum(c, (q - 1) / 2 + 1) - 1.0);
  }
  const double low_share = params.v_low() / (params.v_high() + params.v_low());
  return -low_share / GeometricSum(c, q / 2);
}

double GrossWagnerPayoff(int q) {
  if (q < 1) {
    throw InvalidParameterError(fmt::format("q={} must be at least 1", q));
  }
  return -1.0 / static_cast<double>(q);
}

double ValueOfInformation(const BlottoParams& params) {
  return InformedPayoff(params) -
         GrossWagnerPayoff(ComputeIndex(params.budgets()).q);
}

bool UninformedGuaranteeCondition(int battlefields, double gamma) {
  if (battlefields < 1) {
    throw InvalidParameterError(
        fmt::format("battlefield count {} must be positive", battlefields));
  }
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw InvalidParameterError(
        fmt::format("gamma={} outside (0, 1)", gamma));
  }
  const double n = static_cast<double>(battlefields);
  const double threshold = battlefields % 2 == 0 ? 2.0 / n : 2.0 / (n + 1.0);
  return gamma < threshold;
}

BlottoEquilibrium BuildEquilibrium(const BlottoParams& params,
                                   std::optional<double> offset) {
  BlottoEquilibrium eq;
  eq.index = ComputeIndex(params.budgets());
  const int q = eq.index.q;
  const double d = eq.index.d;
  const double r = eq.index.r;
  if (!eq.index.q_is_odd()) {
    throw UnsupportedCaseError(fmt::format(
        "q={} is even: only the payoff is available, equilibrium strategies "
        "are constructed for odd q",
        q));
  }
  eq.offset = offset.value_or(0.5 * (r + d));
  if (!(eq.offset > r) || !(eq.offset < d)) {
    throw InvalidParameterError(fmt::format(
        "offset e={} must lie in the open interval ({}, {})", eq.offset, r, d));
  }

  const int h = (q - 1) / 2;
  const double c = params.value_ratio();
  const double v_hi = params.v_high();
  const double v_lo = params.v_low();
  const double x_i = params.budgets().informed();
  const double x_u = params.budgets().uninformed();

  // When X_U / d is an integer (r = 0) the top informed atom sits exactly on
  // X_I; rounding in k * d can overshoot by an ulp, so locations are clamped.
  const auto at = [](double x, double cap) { return std::min(x, cap); };

  // Uninformed: atoms at e + (k-1)d, k = 1..q, weights c^{|k - (h+1)|}.
  std::vector<Atom> uninformed;
  for (int k = 1; k <= q; ++k) {
    uninformed.push_back(
        {at(eq.offset + (k - 1) * d, x_u), std::pow(c, std::abs(k - (h + 1)))});
  }
  eq.s_a = 1.0 + 2.0 * (GeometricSum(c, h + 1) - 1.0);

  // Informed: the shared boundary atom at h*d, type 1 climbs above it with
  // weights c^{q-1-k}, type 2 descends below it with weights c^k.
  const double boundary = v_lo * std::pow(c, h) / (v_hi + v_lo);
  std::vector<Atom> type1{{at(h * d, x_i), boundary}};
  for (int k = h + 1; k <= q - 1; ++k) {
    type1.push_back({at(k * d, x_i), std::pow(c, q - 1 - k)});
  }
  std::vector<Atom> type2;
  for (int k = 0; k <= h - 1; ++k) type2.push_back({at(k * d, x_i), std::pow(c, k)});
  type2.push_back({at(h * d, x_i), boundary});
  eq.s_b = boundary + GeometricSum(c, h);

  auto normalise = [](std::vector<Atom>& atoms, double s) {
    for (Atom& a : atoms) a.mass /= s;
  };
  normalise(uninformed, eq.s_a);
  normalise(type1, eq.s_b);
  normalise(type2, eq.s_b);

  PiecewiseCdf u1(std::move(uninformed), {});
  PiecewiseCdf t1(std::move(type1), {});
  PiecewiseCdf t2(std::move(type2), {});
  PiecewiseCdf u2 = u1.Reflected(x_u);
  PiecewiseCdf t1b = t1.Reflected(x_i);
  PiecewiseCdf t2b = t2.Reflected(x_i);
  eq.profile.informed = {{std::move(t1), std::move(t1b)},
                         {std::move(t2), std::move(t2b)}};
  eq.profile.uninformed = {std::move(u1), std::move(u2)};

  // I's equilibrium value is -v_low(1+c)/s_a = -v_low/s_b in raw units.
  eq.value_from_s_a = -v_lo * (1.0 + c) / eq.s_a / (v_hi + v_lo);
  eq.value_from_s_b = -v_lo / eq.s_b / (v_hi + v_lo);
  return eq;
}

}  // namespace infoblotto::blotto2
