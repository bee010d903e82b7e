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

#include "infoblotto/lotto3.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "infoblotto/errors.h"
#include "infoblotto/payoff.h"

namespace infoblotto::lotto3 {
namespace {

constexpr double kOneThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;

// Atoms whose closed-form mass vanishes at a regime boundary are dropped;
// anything clearly negative is a construction bug.
constexpr double kNegligibleMass = 1e-14;

void CheckValues(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(beta > 0.0) ||
      !(alpha >= beta) || !(alpha < 1.0)) {
    throw InvalidParameterError(fmt::format(
        "need 1 > alpha >= beta > 0, got alpha={} beta={}", alpha, beta));
  }
}

void CheckGamma(double gamma) {
  if (!std::isfinite(gamma) || !(gamma > 0.0) || !(gamma <= 1.0)) {
    throw InvalidParameterError(
        fmt::format("gamma={} outside (0, 1]", gamma));
  }
}

PiecewiseCdf Marginal(double atom_at_zero, std::vector<Segment> segments) {
  std::vector<Atom> atoms;
  if (atom_at_zero < -kNegligibleMass) {
    throw InvalidDistributionError(
        fmt::format("negative atom mass {} at zero", atom_at_zero));
  }
  if (atom_at_zero > kNegligibleMass) atoms.push_back({0.0, atom_at_zero});
  return PiecewiseCdf(std::move(atoms), std::move(segments));
}

}  // namespace

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kLow:
      return "low";
    case Regime::kMid:
      return "mid";
    case Regime::kHigh:
      return "high";
  }
  return "unknown";
}

Regime RegimeFor(double gamma) {
  CheckGamma(gamma);
  if (gamma <= kOneThird) return Regime::kLow;
  if (gamma <= kTwoThirds) return Regime::kMid;
  return Regime::kHigh;
}

LottoParams::LottoParams(double alpha, double beta, double gamma,
                         double uninformed_budget)
    : alpha_(alpha), beta_(beta), gamma_(gamma), x_u_(uninformed_budget) {
  CheckValues(alpha_, beta_);
  CheckGamma(gamma_);
  if (!std::isfinite(x_u_) || !(x_u_ > 0.0)) {
    throw InvalidParameterError(
        fmt::format("uninformed budget {} must be positive", x_u_));
  }
}

ValuationMatrix LottoParams::Valuations() const {
  const double c = normalization();
  const double a = alpha_ * c;
  const double b = beta_ * c;
  return ValuationMatrix(3, 3, {c, a, b, b, c, a, a, b, c});
}

double InformedPayoff(double alpha, double beta, double gamma) {
  CheckValues(alpha, beta);
  const double c = 1.0 / (1.0 + alpha + beta);
  switch (RegimeFor(gamma)) {
    case Regime::kLow:
      return 3.0 * gamma * c - 1.0;
    case Regime::kMid:
      return c * ((1.0 - 1.0 / (3.0 * gamma)) *
                      (3.0 * gamma * alpha + (1.0 - alpha)) +
                  1.0) -
             1.0;
    case Regime::kHigh: {
      // The beta term carries (1 - 2/(3 gamma))^2; it vanishes to second
      // order at gamma = 2/3 and reduces to the mid form when beta == alpha.
      const double f = 1.0 - 2.0 / (3.0 * gamma);
      return c * (2.0 - 1.0 / (3.0 * gamma) + alpha * (2.0 - 1.0 / gamma) +
                  3.0 * beta * gamma * f * f) -
             1.0;
    }
  }
  return 0.0;
}

double CompleteInfoBaseline(double gamma) {
  CheckGamma(gamma);
  return gamma - 1.0;
}

Multipliers ComputeMultipliers(const LottoParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double g = params.gamma();
  const double scale = params.normalization() / params.uninformed_budget();
  Multipliers m;
  switch (params.regime()) {
    case Regime::kLow:
      m.informed = scale;
      break;
    case Regime::kMid:
      m.informed = scale * ((1.0 - a) / (9.0 * g * g) + a);
      break;
    case Regime::kHigh:
      m.informed = scale * (b + (1.0 + 3.0 * a - 4.0 * b) / (9.0 * g * g));
      break;
  }
  m.uninformed = 3.0 * g * m.informed;
  return m;
}

RegimeSolution SolveRegime(const LottoParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.normalization();
  const Multipliers m = ComputeMultipliers(params);
  const double li = m.informed;
  const double lu = m.uninformed;
  const double scale = 2.0 * c / 3.0;

  switch (params.regime()) {
    case Regime::kLow: {
      const double top = scale / li;
      return RegimeSolution{
          Regime::kLow, m,
          Marginal(0.0, {{0.0, top, 1.5 * li / c}}),
          Marginal(1.0 - lu / li, {{0.0, top, 1.5 * lu / c}}),
          PiecewiseCdf::PointMass(0.0),
          PiecewiseCdf::PointMass(0.0)};
    }
    case Regime::kMid: {
      const double i1 = scale * (a / li - a / lu);
      const double i2 = scale * (a / li + (1.0 - a) / lu);
      return RegimeSolution{
          Regime::kMid, m,
          Marginal(0.0, {{0.0, i1, 1.5 * li / (a * c)},
                         {i1, i2, 1.5 * li / c}}),
          Marginal(0.0, {{i1, i2, 1.5 * lu / c}}),
          Marginal(2.0 - lu / li, {{0.0, i1, 1.5 * lu / (a * c)}}),
          PiecewiseCdf::PointMass(0.0)};
    }
    case Regime::kHigh: {
      const double i1 = scale * (b / li - 2.0 * b / lu);
      const double i2 = scale * (b / li + (a - 2.0 * b) / lu);
      const double i3 = scale * (b / li + (a - 2.0 * b + 1.0) / lu);
      return RegimeSolution{
          Regime::kHigh, m,
          Marginal(0.0, {{0.0, i1, 1.5 * li / (b * c)},
                         {i1, i2, 1.5 * li / (a * c)},
                         {i2, i3, 1.5 * li / c}}),
          Marginal(0.0, {{i2, i3, 1.5 * lu / c}}),
          Marginal(0.0, {{i1, i2, 1.5 * lu / (a * c)}}),
          Marginal(3.0 - lu / li, {{0.0, i1, 1.5 * lu / (b * c)}})};
    }
  }
  throw InvalidParameterError("unknown regime");
}

StrategyProfile AssembleProfile(const RegimeSolution& solution) {
  const PiecewiseCdf* by_class[3] = {&solution.diagonal,
                                     &solution.alpha_marginal,
                                     &solution.beta_marginal};
  StrategyProfile profile;
  profile.informed.resize(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      profile.informed[i].push_back(*by_class[ValueClass(i, j)]);
    }
  }
  profile.uninformed.assign(3, solution.uninformed);
  return profile;
}

StrategyProfile BuildEquilibrium(const LottoParams& params) {
  return AssembleProfile(SolveRegime(params));
}

ZeroCrossing ZeroCrossingAlpha(double gamma) {
  if (!std::isfinite(gamma) || !(gamma > kOneThird) || gamma > 1.0) {
    throw OutOfRegimeError(fmt::format(
        "gamma={}: no win region; I cannot win for gamma <= 1/3", gamma));
  }
  ZeroCrossing z;
  z.threshold = (kOneThird - gamma) / (3.0 * gamma * gamma - 4.0 * gamma + kOneThird);
  z.in_unit_interval = z.threshold > 0.0 && z.threshold < 1.0;
  return z;
}

double Voi(double alpha, double gamma, double cost) {
  CheckGamma(gamma);
  if (!std::isfinite(cost) || cost < 0.0 || !(cost < 1.0)) {
    throw InvalidParameterError(
        fmt::format("information cost {} outside [0, 1)", cost));
  }
  const double purchased = (1.0 - cost) * gamma;
  if (!(purchased > 0.0)) {
    throw InvalidParameterError("remaining budget ratio is zero");
  }
  return InformedPayoff(alpha, alpha, purchased) - CompleteInfoBaseline(gamma);
}

EquivalentRatio EquivalentBudgetRatio(double alpha, double gamma) {
  if (!std::isfinite(alpha) || alpha < 0.0 || !(alpha < 1.0)) {
    throw InvalidParameterError(
        fmt::format("alpha={} outside [0, 1)", alpha));
  }
  CheckGamma(gamma);
  const double ca = 1.0 / (1.0 + 2.0 * alpha);
  const double lin = 2.0 * (1.0 - alpha) * ca - gamma;
  const double disc =
      std::sqrt(lin * lin + 4.0 * ca * ca * alpha * (1.0 - alpha));
  EquivalentRatio out;
  if (lin > 0.0) {
    // Rationalised positive root; finite as alpha -> 0.
    out.gamma_e = 2.0 * ca * (1.0 - alpha) / (3.0 * (lin + disc));
  } else {
    out.gamma_e = (-lin + disc) / (6.0 * alpha * ca);
  }
  out.in_region_b = out.gamma_e >= kOneThird;
  return out;
}

double MaxCost(double alpha, double gamma) {
  const EquivalentRatio eq = EquivalentBudgetRatio(alpha, gamma);
  if (eq.in_region_b) return (gamma - eq.gamma_e) / gamma;
  const double ca = 1.0 / (1.0 + 2.0 * alpha);
  return 1.0 - 1.0 / (3.0 * ca);
}

bool InterimEquivalenceCheck(double alpha, double beta, double gamma) {
  const LottoParams params(alpha, beta, gamma);
  const StrategyProfile profile = BuildEquilibrium(params);
  const ValuationMatrix values = params.Valuations();
  const Prior prior = params.prior();
  std::vector<double> interim;
  for (std::size_t i = 0; i < values.states(); ++i) {
    interim.push_back(InterimPayoffInformed(profile, values, prior, i));
  }
  const auto [lo, hi] = std::minmax_element(interim.begin(), interim.end());
  return *hi - *lo <= 1e-9;
}

}  // namespace infoblotto::lotto3
