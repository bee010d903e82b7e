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

#ifndef INFOBLOTTO_GAME_H_
#define INFOBLOTTO_GAME_H_

#include <cstddef>
#include <span>
#include <vector>

#include "infoblotto/piecewise_cdf.h"

namespace infoblotto {

// m x n battlefield values: entry (i, j) is the worth of battlefield j when
// state i is realised. All entries strictly positive.
class ValuationMatrix {
 public:
  ValuationMatrix(std::size_t states, std::size_t battlefields,
                  std::vector<double> values);
  explicit ValuationMatrix(const std::vector<std::vector<double>>& rows);

  std::size_t states() const { return states_; }
  std::size_t battlefields() const { return battlefields_; }
  double operator()(std::size_t state, std::size_t battlefield) const {
    return values_[state * battlefields_ + battlefield];
  }
  std::span<const double> row(std::size_t state) const {
    return {values_.data() + state * battlefields_, battlefields_};
  }
  std::vector<std::vector<double>> Rows() const;

 private:
  std::size_t states_;
  std::size_t battlefields_;
  std::vector<double> values_;
};

// Common prior over states. Strictly positive, sums to 1 within 1e-12.
class Prior {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit Prior(std::vector<double> probabilities);
  static Prior Uniform(std::size_t states);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& values() const { return p_; }

 private:
  std::vector<double> p_;
};

// Resource budgets, informed player weaker: 0 < X_I <= X_U. Equality is only
// meaningful for the Lotto game; Blotto callers reject it themselves.
class Budgets {
 public:
  Budgets(double informed, double uninformed);

  double informed() const { return informed_; }
  double uninformed() const { return uninformed_; }
  double ratio() const { return informed_ / uninformed_; }

 private:
  double informed_;
  double uninformed_;
};

// informed[i][j]: marginal of player I on battlefield j when of type i.
// uninformed[j]:  marginal of player U on battlefield j.
struct StrategyProfile {
  std::vector<std::vector<PiecewiseCdf>> informed;
  std::vector<PiecewiseCdf> uninformed;

  std::size_t types() const { return informed.size(); }
  std::size_t battlefields() const { return uninformed.size(); }

  // Throws DimensionMismatchError unless the shape is states x battlefields.
  void CheckShape(std::size_t states, std::size_t battlefields) const;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

}  // namespace infoblotto

#endif  // INFOBLOTTO_GAME_H_
