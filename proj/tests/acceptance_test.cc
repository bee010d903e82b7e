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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any fails. Figure surfaces are written to ./figures/*.csv.

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "infoblotto/blotto2.h"
#include "infoblotto/lotto3.h"
#include "infoblotto/monte_carlo.h"
#include "infoblotto/oracle.h"
#include "infoblotto/payoff.h"
#include "infoblotto/serialization.h"
#include "infoblotto/sweep.h"

namespace infoblotto {
namespace {

using blotto2::BlottoParams;
using lotto3::LottoParams;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later ones only bump the count.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome Done(const std::string& summary) const {
    if (failures_ == 0) return {true, fmt::format("{} ({} checks)", summary, checks_)};
    return {false, fmt::format("{}/{} checks failed; first: {}", failures_, checks_, first_)};
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::vector<double> Linspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(lo + (hi - lo) * k / (n - 1));
  return v;
}

double Bisect(const std::function<double(double)>& f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) < 0) == lo_negative ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome Ac1() {
  Checker check;
  oracle::CertifyOptions options;
  options.mc_samples = 100000;
  double worst_value = 0, worst_gap = 0;
  for (int k = 1; k <= 9; ++k) {
    for (double gamma : {0.67, 0.7, 0.72}) {
      const BlottoParams p = BlottoParams::FromRatio(1.0, k / 10.0, gamma);
      check.Expect(blotto2::ComputeIndex(p.budgets()).q == 3, "q != 3");
      const auto eq = blotto2::BuildEquilibrium(p);
      const oracle::Certificate cert = oracle::Certify(eq.profile, p, options);
      const double err = std::abs(cert.exact_value - blotto2::InformedPayoff(p));
      const double gap = std::max(cert.best_deviation_gap_uninformed,
                                  *std::max_element(cert.best_deviation_gap_informed.begin(),
                                                    cert.best_deviation_gap_informed.end()));
      worst_value = std::max(worst_value, err);
      worst_gap = std::max(worst_gap, gap);
      check.Expect(err <= 1e-9, fmt::format("value error {} at vlow={} gamma={}", err, k / 10.0, gamma));
      check.Expect(gap <= 1e-6, fmt::format("gap {} at vlow={} gamma={}", gap, k / 10.0, gamma));
    }
  }
  return check.Done(fmt::format("max |value - closed form| {:.2e}, max gap {:.2e}",
                                worst_value, worst_gap));
}

Outcome Ac2() {
  Checker check;
  double best = -1;
  int best_i = -1, best_j = -1;
  const auto alphas = Linspace(0.01, 0.99, 50);
  const auto gammas = Linspace(0.505, 0.995, 50);
  for (int j = 0; j < 50; ++j) {
    for (int i = 0; i < 50; ++i) {
      const BlottoParams p = BlottoParams::FromRatio(1.0, alphas[i], gammas[j]);
      const double gain = blotto2::ValueOfInformation(p);
      check.Expect(gain > 0, fmt::format("gain {} at alpha={} gamma={}", gain, alphas[i], gammas[j]));
      if (gain > best) {
        best = gain;
        best_i = i;
        best_j = j;
      }
    }
  }
  check.Expect(best_i < 5 && best_j < 5,
               fmt::format("argmax at alpha={} gamma={}", alphas[best_i], gammas[best_j]));
  return check.Done(fmt::format("min gain > 0; argmax alpha={:.3f} gamma={:.3f}",
                                alphas[best_i], gammas[best_j]));
}

Outcome Ac3() {
  Checker check;
  double worst = 0;
  for (double a : Linspace(0.02, 0.98, 20)) {
    for (double b : Linspace(0.02, 0.98, 20)) {
      if (b > a) continue;
      for (double boundary : {1.0 / 3.0, 2.0 / 3.0}) {
        const double left = lotto3::InformedPayoff(a, b, boundary);
        const double right = lotto3::InformedPayoff(a, b, std::nextafter(boundary, 1.0));
        worst = std::max(worst, std::abs(left - right));
        check.Expect(std::abs(left - right) < 1e-12,
                     fmt::format("jump {} at a={} b={} g={}", left - right, a, b, boundary));
      }
    }
  }
  return check.Done(fmt::format("max branch difference {:.2e}", worst));
}

Outcome Ac4() {
  Checker check;
  oracle::CertifyOptions options;
  options.mc_samples = 100000;
  double worst_budget = 0, worst_slack = 0, worst_value = 0;
  for (int regime = 0; regime < 3; ++regime) {
    for (int k = 0; k < 10; ++k) {
      const double a = 0.1 + 0.08 * k;
      const double b = a * (0.2 + 0.08 * k);
      const double g = (regime + 0.05 + 0.09 * k) / 3.0;
      const LottoParams p(a, b, g);
      const StrategyProfile profile = lotto3::BuildEquilibrium(p);
      const oracle::Certificate cert = oracle::Certify(profile, p, options);
      double residual = cert.budget_residual_uninformed;
      for (double r : cert.budget_residual_informed) residual = std::max(residual, r);
      double slack = cert.best_deviation_gap_uninformed;
      for (double s : cert.best_deviation_gap_informed) slack = std::max(slack, s);
      const double value = std::abs(cert.exact_value - lotto3::InformedPayoff(a, b, g));
      worst_budget = std::max(worst_budget, residual);
      worst_slack = std::max(worst_slack, slack);
      worst_value = std::max(worst_value, value);
      const std::string at = fmt::format("a={} b={} g={}", a, b, g);
      check.Expect(residual <= 1e-9, "budget residual at " + at);
      check.Expect(slack <= 1e-6, "support slack at " + at);
      check.Expect(value <= 1e-9, "value mismatch at " + at);
    }
  }
  return check.Done(fmt::format("max residual {:.2e}, max slack {:.2e}, max value error {:.2e}",
                                worst_budget, worst_slack, worst_value));
}

Outcome Ac5() {
  Checker check;
  const double h = 1e-6;
  const auto axis = Linspace(0.025, 0.975, 20);
  for (double a : axis) {
    for (double b : axis) {
      for (double g : axis) {
        // Ordering 1 > alpha >= beta is part of the domain.
        if (b > a) continue;
        const double v = lotto3::InformedPayoff(a, b, g);
        const std::string at = fmt::format("a={} b={} g={}", a, b, g);
        check.Expect(v > g - 1, "not above gamma - 1 at " + at);
        if (a + h < 1) check.Expect(lotto3::InformedPayoff(a + h, b, g) < v, "alpha at " + at);
        if (b + h <= a) check.Expect(lotto3::InformedPayoff(a, b + h, g) < v, "beta at " + at);
        check.Expect(lotto3::InformedPayoff(a, b, g + h) > v, "gamma at " + at);
      }
    }
  }
  return check.Done("bound and monotonicity on the 20^3 grid (alpha >= beta)");
}

Outcome Ac6() {
  Checker check;
  const double closed = lotto3::ZeroCrossingAlpha(0.5).threshold;
  const double root = Bisect([](double a) { return lotto3::InformedPayoff(a, a, 0.5); }, 1e-6,
                             1 - 1e-6);
  check.Expect(std::abs(closed - 2.0 / 11.0) <= 1e-9, fmt::format("closed form {}", closed));
  check.Expect(std::abs(root - 2.0 / 11.0) <= 1e-9, fmt::format("bisection {}", root));
  check.Expect(lotto3::InformedPayoff(2.0 / 11 - 1e-6, 2.0 / 11 - 1e-6, 0.5) > 0, "left sign");
  check.Expect(lotto3::InformedPayoff(2.0 / 11 + 1e-6, 2.0 / 11 + 1e-6, 0.5) < 0, "right sign");
  return check.Done(fmt::format("closed form {:.12f}, bisection {:.12f}", closed, root));
}

Outcome Ac7() {
  Checker check;
  const double anchor = lotto3::MaxCost(1e-12, 1.0);
  check.Expect(std::abs(anchor - 2.0 / 3.0) <= 1e-9, fmt::format("max_cost {}", anchor));
  int in_b = 0;
  double worst = 0;
  for (double a : Linspace(0.02, 0.98, 25)) {
    for (double g : Linspace(0.05, 1.0, 25)) {
      const lotto3::EquivalentRatio e = lotto3::EquivalentBudgetRatio(a, g);
      if (!e.in_region_b) continue;
      ++in_b;
      const double residual = lotto3::InformedPayoff(a, a, e.gamma_e) - (g - 1);
      const double root = Bisect(
          [&](double x) { return lotto3::InformedPayoff(a, a, x) - (g - 1); }, 1.0 / 3, 1.0);
      worst = std::max(worst, std::abs(residual));
      check.Expect(std::abs(residual) <= 1e-9, fmt::format("residual at a={} g={}", a, g));
      check.Expect(std::abs(root - e.gamma_e) <= 1e-9, fmt::format("bisection at a={} g={}", a, g));
    }
  }
  check.Expect(in_b > 0, "no grid point in region B");
  return check.Done(fmt::format("max_cost(0+,1) = {:.12f}; {} region-B points, max residual {:.2e}",
                                anchor, in_b, worst));
}

bool BitEqual(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

Outcome Ac8() {
  Checker check;
  struct Case {
    std::string name;
    StrategyProfile profile;
    ValuationMatrix values;
    Prior prior;
    double closed;
  };
  std::vector<Case> cases;
  for (double g : {0.2, 0.5, 0.9}) {
    const LottoParams p(0.6, 0.3, g);
    cases.push_back({fmt::format("lotto3 gamma={}", g), lotto3::BuildEquilibrium(p),
                     p.Valuations(), p.prior(), lotto3::InformedPayoff(0.6, 0.3, g)});
  }
  const BlottoParams b = BlottoParams::FromRatio(1.0, 0.5, 0.7);
  cases.push_back({"blotto2 q=3", blotto2::BuildEquilibrium(b).profile, b.Valuations(),
                   b.prior(), blotto2::InformedPayoff(b)});
  std::string worst;
  double worst_z = 0;
  for (const Case& c : cases) {
    const auto mc = MonteCarloValue(c.profile, c.values, c.prior, 1000000, 20261016);
    const auto again = MonteCarloValue(c.profile, c.values, c.prior, 1000000, 20261016);
    const auto serial =
        MonteCarloValue(c.profile, c.values, c.prior, 1000000, 20261016, Exec::kSerial);
    const double z = std::abs(mc.mean - c.closed) / mc.std_error;
    worst_z = std::max(worst_z, z);
    check.Expect(z <= 4.0, fmt::format("{}: {:.2f} standard errors", c.name, z));
    check.Expect(BitEqual(mc.mean, again.mean) && BitEqual(mc.std_error, again.std_error),
                 c.name + ": rerun differs");
    check.Expect(BitEqual(mc.mean, serial.mean), c.name + ": serial run differs");
  }
  return check.Done(fmt::format("4 profiles x 1e6 samples, max |z| {:.2f}, reruns bit-identical",
                                worst_z));
}

Outcome Ac9() {
  Checker check;
  double worst = 0;
  for (double gamma : {0.7, 0.72, 0.81}) {
    const BlottoParams p = BlottoParams::FromRatio(1.0, 1.0 - 1e-8, gamma);
    const int q = blotto2::ComputeIndex(p.budgets()).q;
    const double err = std::abs(blotto2::InformedPayoff(p) - blotto2::GrossWagnerPayoff(q));
    worst = std::max(worst, err);
    check.Expect(err <= 1e-6, fmt::format("gamma={} off by {}", gamma, err));
  }
  return check.Done(fmt::format("max |pi_I + 1/q| {:.2e}", worst));
}

void WriteCsv(const sweep::SweepTable& table, const std::string& name) {
  std::filesystem::create_directories("figures");
  io::WriteTextFile("figures/" + name, sweep::FormatCsv(table));
}

std::size_t Column(const sweep::SweepTable& t, const std::string& name) {
  return std::find(t.header.begin(), t.header.end(), name) - t.header.begin();
}

Outcome Figures() {
  Checker check;
  using sweep::SweepGame;
  using sweep::SweepSpec;

  // Blotto payoff and gain surfaces over (alpha, gamma).
  const SweepSpec blotto{SweepGame::kBlotto2,
                         {{"gamma", 0.505, 0.995, 50}, {"alpha", 0.01, 0.99, 50}},
                         {{"vbar", 1.0}},
                         {"pi_I", "pi_GW", "voi", "q"}};
  const sweep::SweepTable bt = sweep::RunSweep(blotto);
  WriteCsv(bt, "blotto_pi_and_voi.csv");
  for (const auto& row : bt.rows) {
    check.Expect(row[2] < 0, "blotto pi_I not negative");
    check.Expect(row[4] > 0, "blotto gain not positive");
  }

  // Lotto payoff on the alpha == beta slice: the sign of pi_I between
  // neighbouring alphas must change exactly where the closed-form curve lies.
  const int n = 50;
  const SweepSpec lotto{SweepGame::kLotto3,
                        {{"gamma", 0.05, 1.0, n}, {"alpha", 0.05, 0.95, n}},
                        {{"cost", 0.2}},
                        {"pi_I", "voi", "max_cost", "alpha_zero"}};
  const sweep::SweepTable lt = sweep::RunSweep(lotto);
  WriteCsv(lt, "lotto_pi_voi_maxcost.csv");
  const std::size_t pi = Column(lt, "pi_I"), voi = Column(lt, "voi"),
                    mc = Column(lt, "max_cost"), az = Column(lt, "alpha_zero");
  int sign_changes = 0, voi_changes = 0;
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k + 1 < n; ++k) {
      const auto& lo = lt.rows[r * n + k];
      const auto& hi = lt.rows[r * n + k + 1];
      const double g = lo[0];
      const bool flips = (lo[pi] > 0) != (hi[pi] > 0);
      const bool curve_between = g > 1.0 / 3 && lo[az] >= lo[1] && lo[az] < hi[1];
      sign_changes += flips;
      check.Expect(flips == curve_between, fmt::format("pi_I sign boundary at gamma={} alpha={}", g, lo[1]));
      // VoI(alpha, gamma) = 0 exactly where the cost equals the maximal cost.
      const bool voi_flips = (lo[voi] > 0) != (hi[voi] > 0);
      const bool cost_between = (lo[mc] > 0.2) != (hi[mc] > 0.2);
      voi_changes += voi_flips;
      check.Expect(voi_flips == cost_between, fmt::format("VoI contour at gamma={} alpha={}", g, lo[1]));
    }
    for (int k = 0; k < n; ++k) {
      const auto& row = lt.rows[r * n + k];
      check.Expect((row[voi] > 0) == (row[mc] > 0.2) || std::abs(row[voi]) < 1e-12,
                   fmt::format("VoI sign vs max cost at gamma={} alpha={}", row[0], row[1]));
      check.Expect(row[mc] >= 0 && row[mc] < 1, "max cost outside [0, 1)");
    }
  }
  check.Expect(sign_changes > 0, "no pi_I sign boundary on the grid");
  check.Expect(voi_changes > 0, "no VoI zero contour on the grid");
  return check.Done(fmt::format("{} pi_I and {} VoI crossings on closed-form curves; CSVs in figures/",
                                sign_changes, voi_changes));
}

}  // namespace
}  // namespace infoblotto

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* id;
    infoblotto::Outcome (*run)();
    double budget_seconds;  // 0 means untimed
  };
  const Criterion criteria[] = {
      {"AC1", infoblotto::Ac1, 5.0},  {"AC2", infoblotto::Ac2, 0.0},
      {"AC3", infoblotto::Ac3, 0.0},  {"AC4", infoblotto::Ac4, 0.0},
      {"AC5", infoblotto::Ac5, 0.0},  {"AC6", infoblotto::Ac6, 0.0},
      {"AC7", infoblotto::Ac7, 0.0},  {"AC8", infoblotto::Ac8, 30.0},
      {"AC9", infoblotto::Ac9, 0.0},  {"FIG", infoblotto::Figures, 0.0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    infoblotto::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += fmt::format("; over the {:.0f} s budget", c.budget_seconds);
    }
    failed += !outcome.pass;
    std::cout << fmt::format("{} {} ({:.2f} s) {}\n", c.id, outcome.pass ? "PASS" : "FAIL",
                             seconds, outcome.detail);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", std::size(criteria) - failed,
                           std::size(criteria));
  return failed == 0 ? 0 : 1;
}
