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

#include "infoblotto/cli.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "infoblotto/blotto2.h"
#include "infoblotto/errors.h"
#include "infoblotto/lotto3.h"
#include "infoblotto/monte_carlo.h"
#include "infoblotto/oracle.h"
#include "infoblotto/serialization.h"
#include "infoblotto/sweep.h"

namespace infoblotto {
namespace {

std::string Num(double x) { return fmt::format("{:.12g}", x); }

// Flags shared by every subcommand that needs a game instance.
struct GameFlags {
  std::string game;
  std::optional<double> alpha, beta, gamma, vbar, vlow, xu, cost, offset;

  void Register(CLI::App* cmd, bool with_offset) {
    cmd->add_option("--game", game, "blotto2 or lotto3")
        ->check(CLI::IsMember({"blotto2", "lotto3"}));
    cmd->add_option("--alpha", alpha, "lotto3: second value; blotto2: alias of --vlow");
    cmd->add_option("--beta", beta, "lotto3: third value (default: --alpha)");
    cmd->add_option("--gamma", gamma, "budget ratio X_I / X_U");
    cmd->add_option("--vbar", vbar, "blotto2: high value (default 1)");
    cmd->add_option("--vlow", vlow, "blotto2: low value");
    cmd->add_option("--xu", xu, "uninformed budget (default 1)");
    cmd->add_option("--cost", cost, "lotto3: information cost share (default 0.2)");
    if (with_offset) {
      cmd->add_option("--e", offset, "blotto2: U's lowest atom, in (r, d)");
    }
  }

  bool has_game() const { return !game.empty(); }

  io::GameParams Params() const {
    if (game.empty()) throw InvalidParameterError("--game is required");
    if (!gamma) throw InvalidParameterError("--gamma is required");
    const double x_u = xu.value_or(1.0);
    if (game == "blotto2") {
      if (vlow && alpha && *vlow != *alpha) {
        throw InvalidParameterError("--vlow and --alpha disagree");
      }
      const std::optional<double> low = vlow ? vlow : alpha;
      if (!low) throw InvalidParameterError("--vlow is required for blotto2");
      return blotto2::BlottoParams::FromRatio(vbar.value_or(1.0), *low, *gamma,
                                              x_u);
    }
    if (!alpha) throw InvalidParameterError("--alpha is required for lotto3");
    return lotto3::LottoParams(*alpha, beta.value_or(*alpha), *gamma, x_u);
  }
};

StrategyProfile BuildProfile(const io::GameParams& params,
                             std::optional<double> offset) {
  if (const auto* b = std::get_if<blotto2::BlottoParams>(&params)) {
    return blotto2::BuildEquilibrium(*b, offset).profile;
  }
  if (offset) throw InvalidParameterError("--e applies to blotto2 only");
  return lotto3::BuildEquilibrium(std::get<lotto3::LottoParams>(params));
}

double ClosedForm(const io::GameParams& params) {
  if (const auto* b = std::get_if<blotto2::BlottoParams>(&params)) {
    return blotto2::InformedPayoff(*b);
  }
  const auto& l = std::get<lotto3::LottoParams>(params);
  return lotto3::InformedPayoff(l.alpha(), l.beta(), l.gamma());
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::WriteTextFile(path, text);
  }
}

void PrintPayoff(const io::GameParams& params, double cost, std::ostream& out) {
  if (const auto* b = std::get_if<blotto2::BlottoParams>(&params)) {
    const int q = blotto2::ComputeIndex(b->budgets()).q;
    out << "game: blotto2\n"
        << "q: " << q << "\n"
        << "pi_I: " << Num(blotto2::InformedPayoff(*b)) << "\n"
        << "pi_GW: " << Num(blotto2::GrossWagnerPayoff(q)) << "\n"
        << "voi: " << Num(blotto2::ValueOfInformation(*b)) << "\n";
    return;
  }
  const auto& l = std::get<lotto3::LottoParams>(params);
  const lotto3::Multipliers m = lotto3::ComputeMultipliers(l);
  out << "game: lotto3\n"
      << "regime: " << lotto3::RegimeName(l.regime()) << "\n"
      << "pi_I: " << Num(lotto3::InformedPayoff(l.alpha(), l.beta(), l.gamma()))
      << "\n"
      << "lambda_I: " << Num(m.informed) << "\n"
      << "lambda_U: " << Num(m.uninformed) << "\n"
      << "baseline: " << Num(lotto3::CompleteInfoBaseline(l.gamma())) << "\n";
  // The information-purchase analysis is defined on the alpha = beta slice.
  if (l.alpha() == l.beta()) {
    out << "voi: " << Num(lotto3::Voi(l.alpha(), l.gamma(), cost)) << "\n"
        << "max_cost: " << Num(lotto3::MaxCost(l.alpha(), l.gamma())) << "\n";
  }
}

void PrintCertificate(const oracle::Certificate& cert, std::ostream& out) {
  const auto max_of = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  };
  out << "game: " << cert.game << "\n"
      << "claimed_value: " << Num(cert.claimed_value) << "\n"
      << "exact_value: " << Num(cert.exact_value) << "\n"
      << "deviation_gap_U: " << Num(cert.best_deviation_gap_uninformed) << "\n"
      << "deviation_gap_I: " << Num(max_of(cert.best_deviation_gap_informed))
      << "\n"
      << "budget_residual_U: " << Num(cert.budget_residual_uninformed) << "\n"
      << "budget_residual_I: " << Num(max_of(cert.budget_residual_informed))
      << "\n"
      << "mc_mean: " << Num(cert.mc.mean) << "\n"
      << "mc_std_error: " << Num(cert.mc.std_error) << "\n"
      << "pass: " << (cert.pass ? "true" : "false") << "\n";
}

sweep::SweepAxis ParseAxis(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos;
       start = pos + 1) {
    parts.push_back(text.substr(start, pos - start));
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 4) {
    throw InvalidParameterError(
        fmt::format("axis '{}' is not name:min:max:steps", text));
  }
  try {
    std::size_t used = 0;
    sweep::SweepAxis axis;
    axis.name = parts[0];
    axis.min = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    axis.max = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    axis.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    return axis;
  } catch (const std::logic_error&) {
    throw InvalidParameterError(fmt::format("axis '{}' has a bad number", text));
  }
}

std::pair<std::string, double> ParseFixed(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw InvalidParameterError(fmt::format("'{}' is not name=value", text));
  }
  try {
    std::size_t used = 0;
    const std::string value = text.substr(eq + 1);
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return {text.substr(0, eq), v};
  } catch (const std::logic_error&) {
    throw InvalidParameterError(fmt::format("'{}' has a bad number", text));
  }
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = std::min(text.find(',', start), text.size());
    if (pos > start) items.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return items;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Blotto and Lotto games with an informed player", "infoblotto"};
  app.require_subcommand(1);
  app.fallthrough();
  bool serial = false;
  app.add_flag("--serial", serial, "run kernels single-threaded");

  GameFlags payoff_flags, strategy_flags, verify_flags, simulate_flags;
  std::string strategy_out, verify_in, verify_out, simulate_in, sweep_out;
  std::string sweep_game, sweep_outputs;
  std::vector<std::string> sweep_axes, sweep_fixed;
  int grid = 10000;
  std::int64_t verify_samples = 1000000, simulate_samples = 1000000;
  std::uint64_t verify_seed = 12345, simulate_seed = 12345;

  CLI::App* payoff = app.add_subcommand("payoff", "closed-form payoffs");
  payoff_flags.Register(payoff, false);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter grid to CSV");
  sweep_cmd->add_option("--game", sweep_game)->required()
      ->check(CLI::IsMember({"blotto2", "lotto3"}));
  sweep_cmd->add_option("--axis", sweep_axes, "name:min:max:steps (repeatable)");
  sweep_cmd->add_option("--fix", sweep_fixed, "name=value (repeatable)");
  sweep_cmd->add_option("--outputs", sweep_outputs, "comma-separated columns");
  sweep_cmd->add_option("--out", sweep_out, "CSV path (default: stdout)");

  CLI::App* strategy = app.add_subcommand("strategy", "write equilibrium profile");
  strategy_flags.Register(strategy, true);
  strategy->add_option("--out", strategy_out, "path (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "certify a profile");
  verify_flags.Register(verify, true);
  verify->add_option("--in", verify_in, "strategy file (else rebuilt from flags)");
  verify->add_option("--out", verify_out, "certificate path");
  verify->add_option("--samples", verify_samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed);
  verify->add_option("--grid", grid)->check(CLI::Range(2, 100000000));

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo payoff");
  simulate_flags.Register(simulate, true);
  simulate->add_option("--in", simulate_in, "strategy file (else rebuilt from flags)");
  simulate->add_option("--samples", simulate_samples)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", simulate_seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const Exec exec = serial ? Exec::kSerial : Exec::kOpenMP;
  try {
    if (payoff->parsed()) {
      PrintPayoff(payoff_flags.Params(), payoff_flags.cost.value_or(0.2), out);
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      sweep::SweepSpec spec;
      spec.game = sweep::ParseGame(sweep_game);
      for (const auto& a : sweep_axes) spec.axes.push_back(ParseAxis(a));
      for (const auto& f : sweep_fixed) {
        const auto [name, value] = ParseFixed(f);
        if (!spec.fixed.emplace(name, value).second) {
          throw InvalidParameterError(fmt::format("'{}' fixed twice", name));
        }
      }
      spec.outputs = SplitCommas(sweep_outputs);
      Emit(sweep::FormatCsv(sweep::RunSweep(spec, exec)), sweep_out, out);
      return kExitOk;
    }

    if (strategy->parsed()) {
      io::StrategyDocument doc{strategy_flags.Params(), {}};
      doc.profile = BuildProfile(doc.params, strategy_flags.offset);
      Emit(io::ToJson(doc).dump(2) + "\n", strategy_out, out);
      return kExitOk;
    }

    const bool is_verify = verify->parsed();
    GameFlags& flags = is_verify ? verify_flags : simulate_flags;
    const std::string& in = is_verify ? verify_in : simulate_in;
    if (!in.empty() && flags.has_game()) {
      throw InvalidParameterError("give either --in or game flags, not both");
    }
    io::StrategyDocument doc = [&] {
      if (!in.empty()) {
        const std::string text = io::ReadTextFile(in);
        io::Json j;
        try {
          j = io::Json::parse(text);
        } catch (const io::Json::exception& e) {
          throw ParseError(fmt::format("'{}': {}", in, e.what()));
        }
        return io::DocumentFromJson(j);
      }
      io::StrategyDocument built{flags.Params(), {}};
      built.profile = BuildProfile(built.params, flags.offset);
      return built;
    }();

    if (is_verify) {
      oracle::CertifyOptions options;
      options.grid_points = grid;
      options.mc_samples = verify_samples;
      options.seed = verify_seed;
      options.exec = exec;
      const oracle::Certificate cert = std::visit(
          [&](const auto& p) { return oracle::Certify(doc.profile, p, options); },
          doc.params);
      PrintCertificate(cert, out);
      if (!verify_out.empty()) {
        io::WriteTextFile(verify_out, io::ToJson(cert).dump(2) + "\n");
      }
      return cert.pass ? kExitOk : kExitCertificationFailed;
    }

    const MonteCarloEstimate mc = MonteCarloValue(
        doc.profile, io::ValuationsOf(doc.params), io::PriorOf(doc.params),
        simulate_samples, simulate_seed, exec);
    const double closed = ClosedForm(doc.params);
    out << "game: " << io::GameName(doc.params) << "\n"
        << "mc_mean: " << Num(mc.mean) << "\n"
        << "mc_std_error: " << Num(mc.std_error) << "\n"
        << "samples: " << mc.samples << "\n"
        << "seed: " << simulate_seed << "\n"
        << "closed_form: " << Num(closed) << "\n";
    if (mc.std_error > 0.0) {
      out << "z_score: " << Num((mc.mean - closed) / mc.std_error) << "\n";
    }
    return kExitOk;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace infoblotto
