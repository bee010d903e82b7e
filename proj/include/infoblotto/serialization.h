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

#ifndef INFOBLOTTO_SERIALIZATION_H_
#define INFOBLOTTO_SERIALIZATION_H_

#include <string>
#include <variant>

#include "json.hpp"

#include "infoblotto/blotto2.h"
#include "infoblotto/game.h"
#include "infoblotto/lotto3.h"
#include "infoblotto/oracle.h"
#include "infoblotto/piecewise_cdf.h"

// JSON records:
//   PiecewiseCdf     {"atoms": [[loc, mass], ...], "segments": [[l, r, density], ...]}
//   StrategyProfile  {"informed": [[cdf, ...], ...], "uninformed": [cdf, ...]}
//   strategy file    {"game": "blotto2"|"lotto3", "params": {...},
//                     "valuations": [[...]], "prior": [...], "profile": {...}}
//   certificate      mirrors oracle::Certificate field by field.
// Doubles are written in shortest round-trip form, so parse(dump(x)) == x.
namespace infoblotto::io {

using Json = nlohmann::json;

Json ToJson(const PiecewiseCdf& cdf);
PiecewiseCdf CdfFromJson(const Json& j);

Json ToJson(const StrategyProfile& profile);
StrategyProfile ProfileFromJson(const Json& j);

using GameParams = std::variant<blotto2::BlottoParams, lotto3::LottoParams>;

struct StrategyDocument {
  GameParams params;
  StrategyProfile profile;
};

std::string GameName(const GameParams& params);
ValuationMatrix ValuationsOf(const GameParams& params);
Prior PriorOf(const GameParams& params);

Json ToJson(const StrategyDocument& doc);
// Params are authoritative; "valuations"/"prior", when present, must match
// them within 1e-12. Throws ParseError (or the validation error of the
// offending object).
StrategyDocument DocumentFromJson(const Json& j);

Json ToJson(const oracle::Certificate& cert);

std::string ReadTextFile(const std::string& path);
// Throws std::runtime_error if the file cannot be written.
void WriteTextFile(const std::string& path, const std::string& content);

}  // namespace infoblotto::io

#endif  // INFOBLOTTO_SERIALIZATION_H_
