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

#include "infoblotto/blotto2.h"

#include <cmath>
#include <string>

#include "doctest.h"
#include "infoblotto/errors.h"
#include "infoblotto/payoff.h"

namespace infoblotto::blotto2 {
namespace {

using doctest::Approx;

// Direct evaluation of the payoff sum, written independently of the library.
double PayoffBySum(double vbar, double vlow, int q) {
  const double c = vbar / vlow;
  if (q % 2 == 1) {
    double s = 0.0;
    for (int k = 0; k <= (q - 1) / 2; ++k) s += std::pow(c, k);
    return -1.0 / (2.0 * s - 1.0);
  }
  double s = 0.0;
  for (int k = 0; k <= q / 2 - 1; ++k) s += std::pow(c, k);
  return -(vlow / (vbar + vlow)) / s;
}

TEST_CASE("informed payoff closed form") {
  CHECK(InformedPayoff(BlottoParams::FromRatio(1, 0.5, 0.7)) == Approx(-0.2).epsilon(1e-15));
  CHECK(InformedPayoff(BlottoParams::FromRatio(1, 0.5, 0.6)) == Approx(-1.0 / 3).epsilon(1e-15));
  CHECK(InformedPayoff(BlottoParams::FromRatio(1, 0.1, 0.7)) == Approx(-1.0 / 21).epsilon(1e-15));
  for (double vlow : {0.05, 0.3, 0.77}) {
    for (double gamma : {0.55, 0.7, 0.76, 0.81, 0.9, 0.93}) {
      const BlottoParams p = BlottoParams::FromRatio(1, vlow, gamma);
      const int q = ComputeIndex(p.budgets()).q;
      CHECK(InformedPayoff(p) == Approx(PayoffBySum(1, vlow, q)).epsilon(1e-13));
    }
  }
}

TEST_CASE("index of the budget pair") {
  const BlottoIndex idx = ComputeIndex(Budgets(7, 10));
  CHECK(idx.d == Approx(3));
  CHECK(idx.q == 3);
  CHECK(idx.r == Approx(1));
  CHECK(idx.q_is_odd());
  // 2/3 is not representable; the index must still come out as 3.
  CHECK(ComputeIndex(Budgets(2.0 / 3.0, 1.0)).q == 3);
  CHECK(ComputeIndex(Budgets(0.6, 1.0)).q == 2);
}

TEST_CASE("Gross-Wagner baseline") {
  CHECK(GrossWagnerPayoff(2) == -0.5);
  CHECK(GrossWagnerPayoff(3) == Approx(-1.0 / 3));
  CHECK(GrossWagnerPayoff(10) == Approx(-0.1));
  CHECK_THROWS_AS(GrossWagnerPayoff(0), InvalidParameterError);
}

TEST_CASE("value of information") {
  CHECK(ValueOfInformation(BlottoParams::FromRatio(1, 0.5, 0.7)) == Approx(2.0 / 15));
  CHECK(ValueOfInformation(BlottoParams::FromRatio(1, 0.1, 0.7)) == Approx(2.0 / 7));
  const double near = ValueOfInformation(BlottoParams::FromRatio(1, 1 - 1e-9, 0.7));
  CHECK(near > 0.0);
  CHECK(near < 1e-8);
}

TEST_CASE("information strictly helps on a 50x50 grid") {
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double vlow = 0.01 + 0.98 * i / 49.0;
      const double gamma = 0.505 + 0.49 * j / 49.0;
      const BlottoParams p = BlottoParams::FromRatio(1, vlow, gamma);
      CHECK(InformedPayoff(p) > GrossWagnerPayoff(ComputeIndex(p.budgets()).q));
      CHECK(InformedPayoff(p) < 0.0);
    }
  }
}

// Raising the minor value toward the major one removes I's edge, so the
// payoff falls toward its infimum -1/q.
TEST_CASE("payoff decreases in the low value and tends to -1/q") {
  for (double gamma : {0.6, 0.7, 0.82}) {
    double previous = 0.0;
    for (int k = 1; k < 100; ++k) {
      const double v = InformedPayoff(BlottoParams::FromRatio(1, k / 100.0, gamma));
      CHECK(v < previous);
      previous = v;
    }
    const BlottoParams p = BlottoParams::FromRatio(1, 1 - 1e-8, gamma);
    CHECK(InformedPayoff(p) ==
          Approx(GrossWagnerPayoff(ComputeIndex(p.budgets()).q)).epsilon(1e-6));
  }
}

TEST_CASE("uninformed guarantee condition") {
  CHECK(UninformedGuaranteeCondition(2, 0.4));
  CHECK_FALSE(UninformedGuaranteeCondition(3, 0.6));
  CHECK(UninformedGuaranteeCondition(4, 0.49));
  CHECK_FALSE(UninformedGuaranteeCondition(4, 0.5));
  CHECK(UninformedGuaranteeCondition(1, 0.99));
  CHECK_THROWS_AS(UninformedGuaranteeCondition(0, 0.5), InvalidParameterError);
  CHECK_THROWS_AS(UninformedGuaranteeCondition(2, 1.0), InvalidParameterError);
}

TEST_CASE("parameter domain") {
  try {
    BlottoParams::FromRatio(1, 0.5, 0.4);
    FAIL("expected an exception");
  } catch (const OutOfRegimeError& e) {
    CHECK(std::string(e.what()).find("U secures both battlefields") != std::string::npos);
  }
  CHECK_THROWS_AS(BlottoParams::FromRatio(1, 0.5, 0.5), OutOfRegimeError);
  CHECK_THROWS_AS(BlottoParams::FromRatio(1, 0.5, 1.0), OutOfRegimeError);
  CHECK_THROWS_AS(BlottoParams::FromRatio(1, 1.0, 0.7), InvalidParameterError);
  CHECK_THROWS_AS(BlottoParams::FromRatio(1, 0.0, 0.7), InvalidParameterError);
  CHECK_THROWS_AS(BlottoParams::FromRatio(1, 1.5, 0.7), InvalidParameterError);
}

TEST_CASE("valuations are normalised rows") {
  const auto v = BlottoParams::FromRatio(1, 0.5, 0.7).Valuations();
  CHECK(v(0, 0) == Approx(2.0 / 3));
  CHECK(v(0, 1) == Approx(1.0 / 3));
  CHECK(v(1, 0) == Approx(1.0 / 3));
  CHECK(v(1, 1) == Approx(2.0 / 3));
}

void CheckAtoms(const PiecewiseCdf& f, const std::vector<Atom>& expected) {
  REQUIRE(f.atoms().size() == expected.size());
  CHECK(f.segments().empty());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(f.atoms()[k].location == Approx(expected[k].location).epsilon(1e-14));
    CHECK(f.atoms()[k].mass == Approx(expected[k].mass).epsilon(1e-14));
  }
}

TEST_CASE("equilibrium atoms at X_U = 10, gamma = 0.7, e = 2") {
  const BlottoParams p = BlottoParams::FromRatio(1, 0.5, 0.7, 10);
  const BlottoEquilibrium eq = BuildEquilibrium(p, 2.0);
  CHECK(eq.s_a == Approx(5));
  CHECK(eq.s_b == Approx(5.0 / 3));
  CheckAtoms(eq.profile.uninformed[0], {{2, 0.4}, {5, 0.2}, {8, 0.4}});
  CheckAtoms(eq.profile.uninformed[1], {{2, 0.4}, {5, 0.2}, {8, 0.4}});
  CheckAtoms(eq.profile.informed[1][0], {{0, 0.6}, {3, 0.4}});
  CheckAtoms(eq.profile.informed[1][1], {{4, 0.4}, {7, 0.6}});
  CheckAtoms(eq.profile.informed[0][0], {{3, 0.4}, {6, 0.6}});
  CheckAtoms(eq.profile.informed[0][1], {{1, 0.6}, {4, 0.4}});
  // Type 1 (high value on battlefield 1) stays in (e + (h - 1) d, X_I].
  for (const Atom& a : eq.profile.informed[0][0].atoms()) {
    CHECK(a.location > 2.0);
    CHECK(a.location <= 7.0);
  }
}

TEST_CASE("equilibrium value from both normalisers and from the profile") {
  for (double vlow : {0.1, 0.35, 0.5, 0.9}) {
    for (double gamma : {0.67, 0.7, 0.74, 0.8, 0.82, 0.86, 0.9}) {
      const BlottoParams p = BlottoParams::FromRatio(1, vlow, gamma, 3.0);
      if (!ComputeIndex(p.budgets()).q_is_odd()) continue;
      const BlottoEquilibrium eq = BuildEquilibrium(p);
      const double closed = InformedPayoff(p);
      CHECK(eq.value_from_s_a == Approx(eq.value_from_s_b).epsilon(1e-12));
      CHECK(eq.value_from_s_a == Approx(closed).epsilon(1e-12));
      CHECK(ExAntePayoffInformed(eq.profile, p.Valuations(), p.prior()) ==
            Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("value does not depend on the offset") {
  const BlottoParams p = BlottoParams::FromRatio(1, 0.4, 0.81);
  const BlottoIndex idx = ComputeIndex(p.budgets());
  REQUIRE(idx.q == 5);
  const auto value = [&](double e) {
    return ExAntePayoffInformed(BuildEquilibrium(p, e).profile, p.Valuations(), p.prior());
  };
  const double lo = idx.r + 0.1 * (idx.d - idx.r);
  const double hi = idx.r + 0.9 * (idx.d - idx.r);
  CHECK(std::abs(value(lo) - value(hi)) <= 1e-12);
  CHECK(BuildEquilibrium(p).offset == Approx(0.5 * (idx.r + idx.d)));
}

TEST_CASE("equilibrium construction rejects unsupported inputs") {
  CHECK_THROWS_AS(BuildEquilibrium(BlottoParams::FromRatio(1, 0.5, 0.6)), UnsupportedCaseError);
  const BlottoParams p = BlottoParams::FromRatio(1, 0.5, 0.7, 10);
  CHECK_THROWS_AS(BuildEquilibrium(p, 1.0), InvalidParameterError);
  CHECK_THROWS_AS(BuildEquilibrium(p, 3.0), InvalidParameterError);
  CHECK_NOTHROW(BuildEquilibrium(p, 1.0001));
}

TEST_CASE("integer budget ratios keep atoms inside the budget") {
  // X_U / d integral means r = 0 and the top informed atom lands on X_I.
  for (double gamma : {2.0 / 3.0, 0.8, 6.0 / 7.0, 0.96, 48.0 / 49.0}) {
    for (double xu : {1.0, 3.0, 10.0}) {
      const BlottoParams p = BlottoParams::FromRatio(1, 0.3, gamma, xu);
      REQUIRE(ComputeIndex(p.budgets()).q_is_odd());
      const BlottoEquilibrium eq = BuildEquilibrium(p);
      for (const auto& type : eq.profile.informed) {
        CHECK(type[0].SupportMax() <= p.budgets().informed());
      }
      CHECK(ExAntePayoffInformed(eq.profile, p.Valuations(), p.prior()) ==
            Approx(InformedPayoff(p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("budget binds pointwise on every type") {
  const BlottoParams p = BlottoParams::FromRatio(1, 0.3, 0.81, 4.0);
  const BlottoEquilibrium eq = BuildEquilibrium(p);
  for (const auto& type : eq.profile.informed) {
    CHECK(type[0].Reflected(p.budgets().informed()) == type[1]);
  }
  CHECK(eq.profile.uninformed[0].Reflected(4.0) == eq.profile.uninformed[1]);
}

}  // namespace
}  // namespace infoblotto::blotto2
