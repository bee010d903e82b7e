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

#ifndef INFOBLOTTO_PIECEWISE_CDF_H_
#define INFOBLOTTO_PIECEWISE_CDF_H_

#include <vector>

namespace infoblotto {

struct Atom {
  double location = 0.0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Uniform density on [left, right].
struct Segment {
  double left = 0.0;
  double right = 0.0;
  double density = 0.0;

  double Mass() const { return density * (right - left); }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// A univariate allocation distribution on [0, inf): finitely many point masses
// plus finitely many uniform-density segments. Every equilibrium marginal in
// the two-battlefield Blotto and three-battlefield Lotto games has this form.
//
// Immutable after construction. The constructor sorts its inputs and enforces
//   * atom locations >= 0, distinct, masses in (0, 1];
//   * segments with 0 <= left < right, density > 0, pairwise non-overlapping;
//   * no atom strictly inside a segment;
//   * total mass 1 within kMassTolerance.
// Violations throw InvalidDistributionError.
class PiecewiseCdf {
 public:
  static constexpr double kMassTolerance = 1e-12;

  PiecewiseCdf(std::vector<Atom> atoms, std::vector<Segment> segments);

  static PiecewiseCdf PointMass(double location);
  static PiecewiseCdf Uniform(double left, double right);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool IsAtomic() const { return segments_.empty(); }

  // F(x) = P(X <= x). Exactly 1 at and beyond the largest support point.
  double Cdf(double x) const;
  // F(x-) = P(X < x).
  double CdfLeft(double x) const;
  // P(X < x) + P(X = x) / 2, i.e. the win probability of a bid x against X
  // when ties split evenly.
  double TieAdjustedCdf(double x) const { return 0.5 * (Cdf(x) + CdfLeft(x)); }

  double TotalMass() const;
  double Mean() const;
  double SupportMin() const;
  double SupportMax() const;

  // Sorted, de-duplicated atom locations and segment endpoints.
  std::vector<double> Breakpoints() const;

  // Generalised inverse of F for u in [0, 1).
  double Quantile(double u) const;

  // Distribution of total - X. Requires total >= SupportMax().
  PiecewiseCdf Reflected(double total) const;

  friend bool operator==(const PiecewiseCdf& a, const PiecewiseCdf& b) {
    return a.atoms_ == b.atoms_ && a.segments_ == b.segments_;
  }

 private:
  // Atoms and segments merged in location order, with the cumulative mass
  // before each piece. Drives Quantile().
  struct Piece {
    bool is_atom;
    double start;
    double end;
    double density;
    double mass;
    double mass_before;
  };

  void Validate() const;
  void BuildPieces();

  std::vector<Atom> atoms_;
  std::vector<Segment> segments_;
  std::vector<Piece> pieces_;
};

}  // namespace infoblotto

#endif  // INFOBLOTTO_PIECEWISE_CDF_H_
