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

#include "infoblotto/game.h"

#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "infoblotto/errors.h"

namespace infoblotto {

ValuationMatrix::ValuationMatrix(std::size_t states, std::size_t battlefields,
                                 std::vector<double> values)
    : states_(states), battlefields_(battlefields), values_(std::move(values)) {
  if (states_ == 0 || battlefields_ == 0) {
    throw DimensionMismatchError("valuation matrix must be non-empty");
  }
  if (values_.size() != states_ * battlefields_) {
    throw DimensionMismatchError(
        fmt::format("valuation matrix {}x{} given {} entries", states_,
                    battlefields_, values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw InvalidParameterError(
          fmt::format("battlefield value {} must be positive", v));
    }
  }
}

namespace {

std::vector<double> Flatten(const std::vector<std::vector<double>>& rows) {
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw DimensionMismatchError("valuation rows differ in length");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

ValuationMatrix::ValuationMatrix(const std::vector<std::vector<double>>& rows)
    : ValuationMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(),
                      Flatten(rows)) {}

std::vector<std::vector<double>> ValuationMatrix::Rows() const {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < states_; ++i) {
    auto r = row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

Prior::Prior(std::vector<double> probabilities) : p_(std::move(probabilities)) {
  if (p_.empty()) throw DimensionMismatchError("prior must be non-empty");
  for (double p : p_) {
    if (!std::isfinite(p) || !(p > 0.0)) {
      throw InvalidParameterError(
          fmt::format("prior probability {} must be positive", p));
    }
  }
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw InvalidParameterError(
        fmt::format("prior sums to {:.17g}, not 1", total));
  }
}

Prior Prior::Uniform(std::size_t states) {
  return Prior(std::vector<double>(states, 1.0 / static_cast<double>(states)));
}

Budgets::Budgets(double informed, double uninformed)
    : informed_(informed), uninformed_(uninformed) {
  if (!std::isfinite(informed) || !std::isfinite(uninformed) ||
      !(informed > 0.0) || !(uninformed > 0.0)) {
    throw InvalidParameterError(fmt::format(
        "budgets must be positive, got X_I={} X_U={}", informed, uninformed));
  }
  if (informed > uninformed) {
    throw InvalidParameterError(fmt::format(
        "informed budget {} exceeds uninformed budget {}", informed,
        uninformed));
  }
}

void StrategyProfile::CheckShape(std::size_t states,
                                 std::size_t battlefields) const {
  if (informed.size() != states) {
    throw DimensionMismatchError(fmt::format(
        "profile has {} informed types, game has {} states", informed.size(),
        states));
  }
  if (uninformed.size() != battlefields) {
    throw DimensionMismatchError(fmt::format(
        "uninformed strategy covers {} battlefields, game has {}",
        uninformed.size(), battlefields));
  }
  for (const auto& type_marginals : informed) {
    if (type_marginals.size() != battlefields) {
      throw DimensionMismatchError(fmt::format(
          "informed strategy covers {} battlefields, game has {}",
          type_marginals.size(), battlefields));
    }
  }
}

}  // namespace infoblotto
