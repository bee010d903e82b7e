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

#ifndef INFOBLOTTO_SWEEP_H_
#define INFOBLOTTO_SWEEP_H_

#include <map>
#include <string>
#include <vector>

#include "infoblotto/parallel.h"

namespace infoblotto::sweep {

enum class SweepGame { kBlotto2, kLotto3 };

// Parameter names (fixed or swept):
//   blotto2: vbar (default 1), vlow (alias: alpha), gamma, xu (default 1)
//   lotto3:  alpha, beta (defaults to alpha), gamma, cost (default 0.2), xu
// Outputs:
//   blotto2: pi_I, pi_GW, voi, q
//   lotto3:  pi_I, baseline, voi, max_cost, regime, alpha_zero
// alpha_zero is the sign-change threshold of pi_I(a, a, gamma) in alpha;
// blank where gamma <= 1/3. regime is 0/1/2 for low/mid/high.
struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 2;

  // `steps` evenly spaced values, endpoints included.
  std::vector<double> Values() const;
};

struct SweepSpec {
  SweepGame game = SweepGame::kLotto3;
  std::vector<SweepAxis> axes;  // first axis varies slowest
  std::map<std::string, double> fixed;
  std::vector<std::string> outputs;  // empty -> game default
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;  // NaN marks an undefined cell
};

SweepGame ParseGame(const std::string& name);
std::vector<std::string> DefaultOutputs(SweepGame game);

// Throws InvalidParameterError on unknown names, bad step counts or any grid
// point outside the game's parameter domain.
void Validate(const SweepSpec& spec);

// Row-major over the axes. Rows are computed in parallel and stored by index,
// so the table is identical for every Exec.
SweepTable RunSweep(const SweepSpec& spec, Exec exec = Exec::kOpenMP);

// Header line plus one line per row, 12 significant digits, '\n' endings.
std::string FormatCsv(const SweepTable& table);

}  // namespace infoblotto::sweep

#endif  // INFOBLOTTO_SWEEP_H_
