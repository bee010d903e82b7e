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

#include "infoblotto/payoff.h"

#include <algorithm>

#include <fmt/core.h>

#include "infoblotto/errors.h"

namespace infoblotto {
namespace {

double Sign(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

// (P(a > U) - P(a < U)) * mass(U) for a point a and uniform piece U.
double AtomVersusSegment(double a, const Segment& s) {
  const double c = std::clamp(a, s.left, s.right);
  return s.density * ((c - s.left) - (s.right - c));
}

// Antiderivative of x -> clamp(x, l, r) - l.
double RampIntegral(double x, double l, double r) {
  if (x <= l) return 0.0;
  if (x <= r) return 0.5 * (x - l) * (x - l);
  const double w = r - l;
  return 0.5 * w * w + w * (x - r);
}

// (P(X > Y) - P(X < Y)) * mass(X) * mass(Y) for X on s, Y on t.
double SegmentVersusSegment(const Segment& s, const Segment& t) {
  const double win = s.density * t.density *
                     (RampIntegral(s.right, t.left, t.right) -
                      RampIntegral(s.left, t.left, t.right));
  return 2.0 * win - s.Mass() * t.Mass();
}

}  // namespace

double BattlefieldPayoff(const PiecewiseCdf& first,
                         const PiecewiseCdf& second) {
  double total = 0.0;
  for (const Atom& a : first.atoms()) {
    for (const Atom& b : second.atoms()) {
      total += a.mass * b.mass * Sign(a.location - b.location);
    }
    for (const Segment& t : second.segments()) {
      total += a.mass * AtomVersusSegment(a.location, t);
    }
  }
  for (const Segment& s : first.segments()) {
    for (const Atom& b : second.atoms()) {
      total -= b.mass * AtomVersusSegment(b.location, s);
    }
    for (const Segment& t : second.segments()) {
      total += SegmentVersusSegment(s, t);
    }
  }
  return std::clamp(total, -1.0, 1.0);
}

double InterimPayoffInformed(const StrategyProfile& profile,
                             const ValuationMatrix& values, const Prior& prior,
                             std::size_t state) {
  if (prior.size() != values.states()) {
    throw DimensionMismatchError(fmt::format(
        "prior has {} states, valuations have {}", prior.size(),
        values.states()));
  }
  profile.CheckShape(values.states(), values.battlefields());
  if (state >= values.states()) {
    throw DimensionMismatchError(fmt::format(
        "type index {} out of range for {} states", state, values.states()));
  }
  double total = 0.0;
  for (std::size_t j = 0; j < values.battlefields(); ++j) {
    total += values(state, j) * BattlefieldPayoff(profile.informed[state][j],
                                                  profile.uninformed[j]);
  }
  return total;
}

double ExAntePayoffInformed(const StrategyProfile& profile,
                            const ValuationMatrix& values, const Prior& prior) {
  double total = 0.0;
  for (std::size_t i = 0; i < values.states(); ++i) {
    total += prior[i] * InterimPayoffInformed(profile, values, prior, i);
  }
  return total;
}

double ExpectedBudget(std::span<const PiecewiseCdf> marginals) {
  double total = 0.0;
  for (const PiecewiseCdf& f : marginals) total += f.Mean();
  return total;
}

}  // namespace infoblotto
