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

#include "infoblotto/sweep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <fmt/core.h>

#include "infoblotto/blotto2.h"
#include "infoblotto/errors.h"
#include "infoblotto/lotto3.h"

namespace infoblotto::sweep {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using Point = std::map<std::string, double>;

const std::set<std::string>& ParamNames(SweepGame game) {
  static const std::set<std::string> blotto{"vbar", "vlow", "alpha", "gamma",
                                                 "xu"};
  static const std::set<std::string> lotto{"alpha", "beta", "gamma", "cost",
                                                "xu"};
  return game == SweepGame::kBlotto2 ? blotto : lotto;
}

const std::set<std::string>& OutputNames(SweepGame game) {
  static const std::set<std::string> blotto{"pi_I", "pi_GW", "voi", "q"};
  static const std::set<std::string> lotto{"pi_I", "baseline", "voi",
                                           "max_cost", "regime", "alpha_zero"};
  return game == SweepGame::kBlotto2 ? blotto : lotto;
}

double Get(const Point& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

blotto2::BlottoParams BlottoAt(const Point& p) {
  const double vbar = Get(p, "vbar", 1.0);
  const double vlow = Get(p, "vlow", Get(p, "alpha", kNaN));
  return blotto2::BlottoParams::FromRatio(vbar, vlow, Get(p, "gamma", kNaN),
                                         Get(p, "xu", 1.0));
}

lotto3::LottoParams LottoAt(const Point& p) {
  const double alpha = Get(p, "alpha", kNaN);
  return lotto3::LottoParams(alpha, Get(p, "beta", alpha),
                             Get(p, "gamma", kNaN), Get(p, "xu", 1.0));
}

double Cost(const Point& p) {
  const double cost = Get(p, "cost", 0.2);
  if (!(cost >= 0.0) || !(cost < 1.0)) {
    throw InvalidParameterError(fmt::format("cost={} outside [0, 1)", cost));
  }
  return cost;
}

double Evaluate(SweepGame game, const Point& p, const std::string& output) {
  if (game == SweepGame::kBlotto2) {
    const auto params = BlottoAt(p);
    if (output == "pi_I") return blotto2::InformedPayoff(params);
    const int q = blotto2::ComputeIndex(params.budgets()).q;
    if (output == "pi_GW") return blotto2::GrossWagnerPayoff(q);
    if (output == "voi") return blotto2::ValueOfInformation(params);
    if (output == "q") return q;
  } else {
    const auto params = LottoAt(p);
    const double a = params.alpha();
    const double g = params.gamma();
    if (output == "pi_I") return lotto3::InformedPayoff(a, params.beta(), g);
    if (output == "baseline") return lotto3::CompleteInfoBaseline(g);
    if (output == "voi") return lotto3::Voi(a, g, Cost(p));
    if (output == "max_cost") return lotto3::MaxCost(a, g);
    if (output == "regime") return static_cast<double>(params.regime());
    if (output == "alpha_zero") {
      return g > 1.0 / 3.0 ? lotto3::ZeroCrossingAlpha(g).threshold : kNaN;
    }
  }
  throw InvalidParameterError(fmt::format("unknown output '{}'", output));
}

std::vector<Point> GridPoints(const SweepSpec& spec) {
  std::vector<Point> points{spec.fixed};
  for (const SweepAxis& axis : spec.axes) {
    std::vector<Point> next;
    for (const Point& base : points) {
      for (double v : axis.Values()) {
        Point p = base;
        p[axis.name] = v;
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace

std::vector<double> SweepAxis::Values() const {
  std::vector<double> values;
  if (steps == 1) return {min};
  for (int k = 0; k < steps; ++k) {
    // Exact endpoints; interior points by convex combination.
    if (k == steps - 1) {
      values.push_back(max);
    } else {
      const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
      values.push_back(min + t * (max - min));
    }
  }
  return values;
}

SweepGame ParseGame(const std::string& name) {
  if (name == "blotto2") return SweepGame::kBlotto2;
  if (name == "lotto3") return SweepGame::kLotto3;
  throw InvalidParameterError(fmt::format("unknown game '{}'", name));
}

std::vector<std::string> DefaultOutputs(SweepGame game) {
  if (game == SweepGame::kBlotto2) return {"pi_I", "pi_GW", "voi"};
  return {"pi_I", "voi", "max_cost"};
}

void Validate(const SweepSpec& spec) {
  const auto& params = ParamNames(spec.game);
  std::set<std::string> seen;
  for (const SweepAxis& axis : spec.axes) {
    if (!params.contains(axis.name)) {
      throw InvalidParameterError(fmt::format("unknown axis '{}'", axis.name));
    }
    if (!seen.insert(axis.name).second || spec.fixed.contains(axis.name)) {
      throw InvalidParameterError(
          fmt::format("parameter '{}' given more than once", axis.name));
    }
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
      throw InvalidParameterError(fmt::format("axis '{}' range is not finite", axis.name));
    }
    if (axis.steps == 1 ? axis.min != axis.max
                        : (axis.steps < 2 || !(axis.min < axis.max))) {
      throw InvalidParameterError(fmt::format(
          "axis '{}' needs min < max and steps >= 2 (or min == max and steps == 1)",
          axis.name));
    }
  }
  for (const auto& [name, value] : spec.fixed) {
    if (!params.contains(name)) {
      throw InvalidParameterError(fmt::format("unknown parameter '{}'", name));
    }
  }
  const auto& outputs = OutputNames(spec.game);
  for (const std::string& out : spec.outputs) {
    if (!outputs.contains(out)) {
      throw InvalidParameterError(fmt::format("unknown output '{}'", out));
    }
  }
  for (const Point& p : GridPoints(spec)) {
    try {
      if (spec.game == SweepGame::kBlotto2) {
        BlottoAt(p);
      } else {
        LottoAt(p);
        Cost(p);
      }
    } catch (const std::invalid_argument& e) {
      std::string where;
      for (const auto& [k, v] : p) where += fmt::format(" {}={}", k, v);
      throw InvalidParameterError(
          fmt::format("grid point{} is outside the domain: {}", where, e.what()));
    }
  }
}

SweepTable RunSweep(const SweepSpec& spec, Exec exec) {
  Validate(spec);
  const std::vector<std::string> outputs =
      spec.outputs.empty() ? DefaultOutputs(spec.game) : spec.outputs;
  const std::vector<Point> points = GridPoints(spec);

  SweepTable table;
  for (const SweepAxis& axis : spec.axes) table.header.push_back(axis.name);
  table.header.insert(table.header.end(), outputs.begin(), outputs.end());
  table.rows.resize(points.size());
  ParallelFor(
      points.size(),
      [&](std::size_t k) {
        std::vector<double> row;
        for (const SweepAxis& axis : spec.axes) row.push_back(points[k].at(axis.name));
        for (const std::string& out : outputs) {
          row.push_back(Evaluate(spec.game, points[k], out));
        }
        table.rows[k] = std::move(row);
      },
      exec);
  return table;
}

std::string FormatCsv(const SweepTable& table) {
  std::string csv;
  for (std::size_t k = 0; k < table.header.size(); ++k) {
    if (k > 0) csv += ',';
    csv += table.header[k];
  }
  csv += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) csv += ',';
      if (!std::isnan(row[k])) csv += fmt::format("{:.12g}", row[k]);
    }
    csv += '\n';
  }
  return csv;
}

}  // namespace infoblotto::sweep
