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

#include "infoblotto/serialization.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/core.h>

#include "infoblotto/errors.h"

namespace infoblotto::io {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(fmt::format("missing field '{}'", key));
  }
  return j.at(key);
}

double Number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(fmt::format("{} must be a number", what));
  return j.get<double>();
}

const Json& Array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(fmt::format("{} must be an array", what));
  return j;
}

void CheckClose(const Json& j, const std::vector<double>& expected,
                const char* what) {
  const Json& arr = Array(j, what);
  if (arr.size() != expected.size()) {
    throw ParseError(fmt::format("{} has the wrong length", what));
  }
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (std::abs(Number(arr[k], what) - expected[k]) > 1e-12) {
      throw ParseError(fmt::format("{} disagrees with params", what));
    }
  }
}

}  // namespace

Json ToJson(const PiecewiseCdf& cdf) {
  Json atoms = Json::array();
  for (const Atom& a : cdf.atoms()) atoms.push_back({a.location, a.mass});
  Json segments = Json::array();
  for (const Segment& s : cdf.segments()) {
    segments.push_back({s.left, s.right, s.density});
  }
  return Json{{"atoms", atoms}, {"segments", segments}};
}

PiecewiseCdf CdfFromJson(const Json& j) {
  std::vector<Atom> atoms;
  for (const Json& a : Array(Field(j, "atoms"), "atoms")) {
    if (!a.is_array() || a.size() != 2) {
      throw ParseError("atom must be [location, mass]");
    }
    atoms.push_back({Number(a[0], "atom location"), Number(a[1], "atom mass")});
  }
  std::vector<Segment> segments;
  for (const Json& s : Array(Field(j, "segments"), "segments")) {
    if (!s.is_array() || s.size() != 3) {
      throw ParseError("segment must be [left, right, density]");
    }
    segments.push_back({Number(s[0], "segment left"),
                        Number(s[1], "segment right"),
                        Number(s[2], "segment density")});
  }
  return PiecewiseCdf(std::move(atoms), std::move(segments));
}

Json ToJson(const StrategyProfile& profile) {
  Json informed = Json::array();
  for (const auto& type_marginals : profile.informed) {
    Json row = Json::array();
    for (const PiecewiseCdf& f : type_marginals) row.push_back(ToJson(f));
    informed.push_back(row);
  }
  Json uninformed = Json::array();
  for (const PiecewiseCdf& f : profile.uninformed) uninformed.push_back(ToJson(f));
  return Json{{"informed", informed}, {"uninformed", uninformed}};
}

StrategyProfile ProfileFromJson(const Json& j) {
  StrategyProfile profile;
  for (const Json& row : Array(Field(j, "informed"), "informed")) {
    std::vector<PiecewiseCdf> marginals;
    for (const Json& f : Array(row, "informed type")) {
      marginals.push_back(CdfFromJson(f));
    }
    profile.informed.push_back(std::move(marginals));
  }
  for (const Json& f : Array(Field(j, "uninformed"), "uninformed")) {
    profile.uninformed.push_back(CdfFromJson(f));
  }
  return profile;
}

std::string GameName(const GameParams& params) {
  return std::holds_alternative<blotto2::BlottoParams>(params) ? "blotto2"
                                                               : "lotto3";
}

ValuationMatrix ValuationsOf(const GameParams& params) {
  return std::visit([](const auto& p) { return p.Valuations(); }, params);
}

Prior PriorOf(const GameParams& params) {
  return std::visit([](const auto& p) { return p.prior(); }, params);
}

Json ToJson(const StrategyDocument& doc) {
  Json params;
  if (const auto* b = std::get_if<blotto2::BlottoParams>(&doc.params)) {
    params = {{"vbar", b->v_high()},
              {"vlow", b->v_low()},
              {"x_i", b->budgets().informed()},
              {"x_u", b->budgets().uninformed()}};
  } else {
    const auto& l = std::get<lotto3::LottoParams>(doc.params);
    params = {{"alpha", l.alpha()},
              {"beta", l.beta()},
              {"gamma", l.gamma()},
              {"x_u", l.uninformed_budget()}};
  }
  return Json{{"game", GameName(doc.params)},
              {"params", params},
              {"valuations", ValuationsOf(doc.params).Rows()},
              {"prior", PriorOf(doc.params).values()},
              {"profile", ToJson(doc.profile)}};
}

StrategyDocument DocumentFromJson(const Json& j) {
  const Json& game = Field(j, "game");
  if (!game.is_string()) throw ParseError("game must be a string");
  const Json& p = Field(j, "params");
  const std::string name = game.get<std::string>();
  std::optional<GameParams> params;
  if (name == "blotto2") {
    params.emplace(blotto2::BlottoParams(
        Number(Field(p, "vbar"), "vbar"), Number(Field(p, "vlow"), "vlow"),
        Budgets(Number(Field(p, "x_i"), "x_i"), Number(Field(p, "x_u"), "x_u"))));
  } else if (name == "lotto3") {
    params.emplace(lotto3::LottoParams(
        Number(Field(p, "alpha"), "alpha"), Number(Field(p, "beta"), "beta"),
        Number(Field(p, "gamma"), "gamma"), Number(Field(p, "x_u"), "x_u")));
  } else {
    throw ParseError(fmt::format("unknown game '{}'", name));
  }
  if (j.contains("valuations")) {
    const ValuationMatrix values = ValuationsOf(*params);
    const Json& rows = Array(j.at("valuations"), "valuations");
    if (rows.size() != values.states()) {
      throw ParseError("valuations have the wrong number of rows");
    }
    for (std::size_t i = 0; i < values.states(); ++i) {
      auto row = values.row(i);
      CheckClose(rows[i], {row.begin(), row.end()}, "valuations");
    }
  }
  if (j.contains("prior")) CheckClose(j.at("prior"), PriorOf(*params).values(), "prior");

  StrategyDocument doc{*params, ProfileFromJson(Field(j, "profile"))};
  const ValuationMatrix values = ValuationsOf(doc.params);
  doc.profile.CheckShape(values.states(), values.battlefields());
  return doc;
}

Json ToJson(const oracle::Certificate& cert) {
  return Json{
      {"game", cert.game},
      {"claimed_value", cert.claimed_value},
      {"exact_value", cert.exact_value},
      {"best_deviation_gap_U", cert.best_deviation_gap_uninformed},
      {"best_deviation_gap_I", cert.best_deviation_gap_informed},
      {"budget_residual_U", cert.budget_residual_uninformed},
      {"budget_residual_I", cert.budget_residual_informed},
      {"mc_estimate",
       {{"mean", cert.mc.mean},
        {"std_error", cert.mc.std_error},
        {"samples", cert.mc.samples},
        {"seed", cert.mc_seed}}},
      {"tolerances",
       {{"deviation", cert.tolerances.deviation},
        {"budget", cert.tolerances.budget},
        {"mc_sigmas", cert.tolerances.mc_sigmas},
        {"mc_floor", cert.tolerances.mc_floor}}},
      {"pass", cert.pass}};
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out << content;
  if (!out) throw std::runtime_error(fmt::format("failed writing '{}'", path));
}

}  // namespace infoblotto::io
