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

#include "infoblotto/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/core.h>

#include "infoblotto/errors.h"
#include "infoblotto/payoff.h"

namespace infoblotto::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Blotto: pure allocations x to battlefield 1, budget - x to battlefield 2.

class BlottoPayoff {
 public:
  BlottoPayoff(const blotto2::BlottoParams& params)
      : values_(params.Valuations()),
        x_i_(params.budgets().informed()),
        x_u_(params.budgets().uninformed()),
        tie_tolerance_(1e-12 * x_u_) {}

  // I's payoff in state i when I plays y and U plays x on battlefield 1.
  double Informed(std::size_t state, double y, double x) const {
    return values_(state, 0) * Sign(y - x) +
           values_(state, 1) * Sign((x_i_ - y) - (x_u_ - x));
  }

 private:
  // Differences of budgets and atom locations land a few ulps off zero
  // where the exact arithmetic ties; those are ties.
  double Sign(double diff) const {
    if (std::abs(diff) <= tie_tolerance_) return 0.0;
    return diff > 0.0 ? 1.0 : -1.0;
  }

  ValuationMatrix values_;
  double x_i_;
  double x_u_;
  double tie_tolerance_;
};

// Breakpoints, the midpoints between consecutive breakpoints, the interval
// ends and a half-step-offset uniform grid on [0, top].
std::vector<double> ScanPoints(std::vector<double> breaks, double top,
                               int grid_points) {
  breaks.push_back(0.0);
  breaks.push_back(top);
  std::erase_if(breaks, [top](double b) { return b < 0.0 || b > top; });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<double> points = breaks;
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    points.push_back(0.5 * (breaks[k - 1] + breaks[k]));
  }
  const double step = top / static_cast<double>(grid_points);
  for (int k = 0; k < grid_points; ++k) points.push_back((k + 0.5) * step);
  return points;
}

const std::vector<Atom>& RequireAtomic(const PiecewiseCdf& f) {
  if (!f.IsAtomic()) {
    throw InvalidDistributionError(
        "Blotto deviation scan needs atomic battlefield-1 marginals");
  }
  return f.atoms();
}

// ---------------------------------------------------------------------------
// Lotto: u(x) = sum_k w_k G_k(x) - x.

struct WeightedCdf {
  const PiecewiseCdf* cdf;
  double weight;
};

double BestResponseValue(const std::vector<WeightedCdf>& opponent, double x) {
  double tie = 0.0, right = 0.0, left = 0.0;
  for (const WeightedCdf& g : opponent) {
    const double f = g.cdf->Cdf(x);
    const double f_left = g.cdf->CdfLeft(x);
    right += g.weight * f;
    left += g.weight * f_left;
    tie += g.weight * 0.5 * (f + f_left);
  }
  return std::max({tie, right, left}) - x;
}

SupportCheck CheckMarginal(const PiecewiseCdf& own,
                           const std::vector<WeightedCdf>& opponent,
                           int grid_points, Exec exec) {
  double top = own.SupportMax();
  std::vector<double> breaks = own.Breakpoints();
  for (const WeightedCdf& g : opponent) {
    top = std::max(top, g.cdf->SupportMax());
    const auto b = g.cdf->Breakpoints();
    breaks.insert(breaks.end(), b.begin(), b.end());
  }
  if (!(top > 0.0)) top = 1.0;
  const std::vector<double> all = ScanPoints(breaks, top, grid_points);
  const double best = ScanMax(
      all, [&](double x) { return BestResponseValue(opponent, x); }, exec);

  // Atoms carry mass, so their exact tie value counts. Continuous pieces are
  // judged by one-sided limits, which ignore measure-zero coincidences.
  auto tie_value = [&](double x) {
    double u = 0.0;
    for (const WeightedCdf& g : opponent) u += g.weight * g.cdf->TieAdjustedCdf(x);
    return u - x;
  };
  auto right_value = [&](double x) {
    double u = 0.0;
    for (const WeightedCdf& g : opponent) u += g.weight * g.cdf->Cdf(x);
    return u - x;
  };
  auto left_value = [&](double x) {
    double u = 0.0;
    for (const WeightedCdf& g : opponent) u += g.weight * g.cdf->CdfLeft(x);
    return u - x;
  };

  double support_max = -kInf;
  double support_min = kInf;
  auto note = [&](double u) {
    support_max = std::max(support_max, u);
    support_min = std::min(support_min, u);
  };
  for (const Atom& a : own.atoms()) note(tie_value(a.location));
  const double step = top / static_cast<double>(grid_points);
  for (const Segment& s : own.segments()) {
    note(right_value(s.left));
    note(left_value(s.right));
    note(right_value(0.5 * (s.left + s.right)));
    std::vector<double> inner;
    for (double x = (std::floor(s.left / step) + 0.5) * step; x < s.right; x += step) {
      if (x > s.left) inner.push_back(x);
    }
    if (!inner.empty()) {
      const double hi = ScanMax(inner, right_value, exec);
      const double lo = -ScanMax(inner, [&](double x) { return -right_value(x); }, exec);
      note(hi);
      note(lo);
    }
  }
  SupportCheck check;
  check.slack = best - support_max;
  check.variation = support_max - support_min;
  return check;
}

}  // namespace

double DeviationGaps::Max() const {
  double m = uninformed;
  for (double g : informed) m = std::max(m, g);
  return m;
}

double BlottoBudgetResidual(const PiecewiseCdf& first,
                            const PiecewiseCdf& second, double budget) {
  const auto& a = RequireAtomic(first);
  const auto& b = RequireAtomic(second);
  if (a.size() != b.size()) return kInf;
  double residual = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Atom& mirror = b[b.size() - 1 - k];
    residual = std::max(residual, std::abs(a[k].location + mirror.location - budget));
    residual = std::max(residual, std::abs(a[k].mass - mirror.mass));
  }
  return residual;
}

DeviationGaps BlottoDeviationGap(const StrategyProfile& profile,
                                 const blotto2::BlottoParams& params,
                                 int grid_points, Exec exec) {
  if (grid_points < 1) {
    throw InvalidParameterError("grid_points must be positive");
  }
  profile.CheckShape(2, 2);
  const BlottoPayoff payoff(params);
  const Prior prior = params.prior();
  const double x_i = params.budgets().informed();
  const double x_u = params.budgets().uninformed();
  const double d = x_u - x_i;

  const std::vector<Atom>& u_atoms = RequireAtomic(profile.uninformed[0]);
  std::vector<const std::vector<Atom>*> i_atoms;
  for (std::size_t t = 0; t < 2; ++t) {
    i_atoms.push_back(&RequireAtomic(profile.informed[t][0]));
  }

  // U's deviation payoff: -sum_i p_i E_{y ~ F_I(t_i)} payoff_I(y, x).
  auto uninformed_value = [&](double x) {
    double total = 0.0;
    for (std::size_t t = 0; t < 2; ++t) {
      double typed = 0.0;
      for (const Atom& a : *i_atoms[t]) typed += a.mass * payoff.Informed(t, a.location, x);
      total += prior[t] * typed;
    }
    return -total;
  };
  auto informed_value = [&](std::size_t t, double y) {
    double total = 0.0;
    for (const Atom& b : u_atoms) total += b.mass * payoff.Informed(t, y, b.location);
    return total;
  };

  DeviationGaps gaps;
  {
    std::vector<double> breaks;
    for (const auto* atoms : i_atoms) {
      for (const Atom& a : *atoms) {
        breaks.push_back(a.location);
        breaks.push_back(a.location + d);
      }
    }
    const auto points = ScanPoints(std::move(breaks), x_u, grid_points);
    const double best = ScanMax(points, uninformed_value, exec);
    double played = 0.0;
    for (const Atom& b : u_atoms) played += b.mass * uninformed_value(b.location);
    gaps.uninformed = best - played;
  }
  for (std::size_t t = 0; t < 2; ++t) {
    std::vector<double> breaks;
    for (const Atom& b : u_atoms) {
      breaks.push_back(b.location);
      breaks.push_back(b.location - d);
    }
    const auto points = ScanPoints(std::move(breaks), x_i, grid_points);
    auto value = [&](double y) { return informed_value(t, y); };
    const double best = ScanMax(points, value, exec);
    double played = 0.0;
    for (const Atom& a : *i_atoms[t]) played += a.mass * value(a.location);
    gaps.informed.push_back(best - played);
  }
  return gaps;
}

SupportOptimality LottoSupportOptimality(
    const StrategyProfile& profile, const lotto3::LottoParams& params,
    const std::optional<lotto3::Multipliers>& multipliers, int grid_points,
    Exec exec) {
  if (!multipliers.has_value()) {
    throw InvalidParameterError(
        "Lotto support check needs the budget multipliers");
  }
  if (!(multipliers->informed > 0.0) || !(multipliers->uninformed > 0.0)) {
    throw InvalidParameterError("multipliers must be positive");
  }
  if (grid_points < 1) {
    throw InvalidParameterError("grid_points must be positive");
  }
  const ValuationMatrix values = params.Valuations();
  const Prior prior = params.prior();
  const std::size_t m = values.states();
  const std::size_t n = values.battlefields();
  profile.CheckShape(m, n);

  SupportOptimality out;
  out.gaps.informed.assign(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const double bid_value =
          2.0 * values(i, j) * prior[i] / multipliers->informed;
      SupportCheck check = CheckMarginal(
          profile.informed[i][j], {{&profile.uninformed[j], bid_value}},
          grid_points, exec);
      check.type = static_cast<int>(i);
      check.battlefield = j;
      out.gaps.informed[i] =
          std::max(out.gaps.informed[i], check.slack + check.variation);
      out.checks.push_back(check);
    }
    std::vector<WeightedCdf> opponent;
    for (std::size_t i = 0; i < m; ++i) {
      opponent.push_back({&profile.informed[i][j],
                          prior[i] * 2.0 * values(i, j) / multipliers->uninformed});
    }
    SupportCheck check =
        CheckMarginal(profile.uninformed[j], opponent, grid_points, exec);
    check.type = -1;
    check.battlefield = j;
    out.gaps.uninformed =
        std::max(out.gaps.uninformed, check.slack + check.variation);
    out.checks.push_back(check);
  }
  return out;
}

bool Passes(const Certificate& cert) {
  const Tolerances& tol = cert.tolerances;
  if (!(cert.best_deviation_gap_uninformed <= tol.deviation)) return false;
  for (double g : cert.best_deviation_gap_informed) {
    if (!(g <= tol.deviation)) return false;
  }
  if (!(cert.budget_residual_uninformed <= tol.budget)) return false;
  for (double r : cert.budget_residual_informed) {
    if (!(r <= tol.budget)) return false;
  }
  return std::abs(cert.mc.mean - cert.claimed_value) <=
         tol.mc_sigmas * cert.mc.std_error + tol.mc_floor;
}

Certificate Certify(const StrategyProfile& profile,
                    const blotto2::BlottoParams& params,
                    const CertifyOptions& options) {
  const ValuationMatrix values = params.Valuations();
  const Prior prior = params.prior();
  profile.CheckShape(2, 2);

  Certificate cert;
  cert.game = "blotto2";
  cert.tolerances = options.tolerances;
  cert.claimed_value = blotto2::InformedPayoff(params);
  cert.exact_value = ExAntePayoffInformed(profile, values, prior);

  const DeviationGaps gaps =
      BlottoDeviationGap(profile, params, options.grid_points, options.exec);
  cert.best_deviation_gap_uninformed = gaps.uninformed;
  cert.best_deviation_gap_informed = gaps.informed;

  cert.budget_residual_uninformed =
      BlottoBudgetResidual(profile.uninformed[0], profile.uninformed[1],
                           params.budgets().uninformed());
  for (std::size_t t = 0; t < 2; ++t) {
    cert.budget_residual_informed.push_back(
        BlottoBudgetResidual(profile.informed[t][0], profile.informed[t][1],
                             params.budgets().informed()));
  }

  cert.mc_seed = options.seed;
  cert.mc = MonteCarloValue(profile, values, prior, options.mc_samples,
                            options.seed, options.exec);
  cert.pass = Passes(cert);
  return cert;
}

Certificate Certify(const StrategyProfile& profile,
                    const lotto3::LottoParams& params,
                    const CertifyOptions& options) {
  const ValuationMatrix values = params.Valuations();
  const Prior prior = params.prior();
  profile.CheckShape(values.states(), values.battlefields());

  Certificate cert;
  cert.game = "lotto3";
  cert.tolerances = options.tolerances;
  cert.claimed_value =
      lotto3::InformedPayoff(params.alpha(), params.beta(), params.gamma());
  cert.exact_value = ExAntePayoffInformed(profile, values, prior);

  const SupportOptimality support =
      LottoSupportOptimality(profile, params, lotto3::ComputeMultipliers(params),
                             options.grid_points, options.exec);
  cert.best_deviation_gap_uninformed = support.gaps.uninformed;
  cert.best_deviation_gap_informed = support.gaps.informed;

  cert.budget_residual_uninformed =
      std::abs(ExpectedBudget(profile.uninformed) - params.uninformed_budget());
  for (const auto& marginals : profile.informed) {
    cert.budget_residual_informed.push_back(
        std::abs(ExpectedBudget(marginals) - params.informed_budget()));
  }

  cert.mc_seed = options.seed;
  cert.mc = MonteCarloValue(profile, values, prior, options.mc_samples,
                            options.seed, options.exec);
  cert.pass = Passes(cert);
  return cert;
}

}  // namespace infoblotto::oracle
