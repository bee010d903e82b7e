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

#include "infoblotto/piecewise_cdf.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "infoblotto/errors.h"

namespace infoblotto {

PiecewiseCdf::PiecewiseCdf(std::vector<Atom> atoms,
                           std::vector<Segment> segments)
    : atoms_(std::move(atoms)), segments_(std::move(segments)) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  std::sort(segments_.begin(), segments_.end(),
            [](const Segment& a, const Segment& b) { return a.left < b.left; });
  Validate();
  BuildPieces();
}

PiecewiseCdf PiecewiseCdf::PointMass(double location) {
  return PiecewiseCdf({{location, 1.0}}, {});
}

PiecewiseCdf PiecewiseCdf::Uniform(double left, double right) {
  if (!(right > left)) {
    throw InvalidDistributionError(
        fmt::format("uniform needs left < right, got [{}, {}]", left, right));
  }
  return PiecewiseCdf({}, {{left, right, 1.0 / (right - left)}});
}

void PiecewiseCdf::Validate() const {
  if (atoms_.empty() && segments_.empty()) {
    throw InvalidDistributionError("distribution has no atoms or segments");
  }
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const Atom& a = atoms_[k];
    if (!std::isfinite(a.location) || !std::isfinite(a.mass)) {
      throw InvalidDistributionError("non-finite atom");
    }
    if (a.location < 0.0) {
      throw InvalidDistributionError(
          fmt::format("atom at negative location {}", a.location));
    }
    if (!(a.mass > 0.0) || a.mass > 1.0 + kMassTolerance) {
      throw InvalidDistributionError(
          fmt::format("atom mass {} outside (0, 1]", a.mass));
    }
    if (k > 0 && atoms_[k - 1].location == a.location) {
      throw InvalidDistributionError(
          fmt::format("duplicate atom at {}", a.location));
    }
  }
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const Segment& s = segments_[k];
    if (!std::isfinite(s.left) || !std::isfinite(s.right) ||
        !std::isfinite(s.density)) {
      throw InvalidDistributionError("non-finite segment");
    }
    if (s.left < 0.0 || !(s.left < s.right)) {
      throw InvalidDistributionError(fmt::format(
          "segment [{}, {}] must satisfy 0 <= left < right", s.left, s.right));
    }
    if (!(s.density > 0.0)) {
      throw InvalidDistributionError(
          fmt::format("segment density {} must be positive", s.density));
    }
    if (k > 0 && s.left < segments_[k - 1].right) {
      throw InvalidDistributionError(
          fmt::format("segments overlap at {}", s.left));
    }
    for (const Atom& a : atoms_) {
      if (a.location > s.left && a.location < s.right) {
        throw InvalidDistributionError(fmt::format(
            "atom at {} lies inside segment [{}, {}]", a.location, s.left,
            s.right));
      }
    }
  }
  const double total = TotalMass();
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw InvalidDistributionError(
        fmt::format("total mass {:.17g} differs from 1", total));
  }
}

void PiecewiseCdf::BuildPieces() {
  pieces_.clear();
  pieces_.reserve(atoms_.size() + segments_.size());
  for (const Atom& a : atoms_) {
    pieces_.push_back({true, a.location, a.location, 0.0, a.mass, 0.0});
  }
  for (const Segment& s : segments_) {
    pieces_.push_back({false, s.left, s.right, s.density, s.Mass(), 0.0});
  }
  // An atom sitting on a segment's left endpoint comes first.
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.is_atom && !b.is_atom;
  });
  double cumulative = 0.0;
  for (Piece& p : pieces_) {
    p.mass_before = cumulative;
    cumulative += p.mass;
  }
}

double PiecewiseCdf::Cdf(double x) const {
  if (x >= SupportMax()) return 1.0;
  double f = 0.0;
  for (const Atom& a : atoms_) {
    if (a.location <= x) f += a.mass;
  }
  for (const Segment& s : segments_) {
    if (x > s.left) f += s.density * (std::min(x, s.right) - s.left);
  }
  return std::clamp(f, 0.0, 1.0);
}

double PiecewiseCdf::CdfLeft(double x) const {
  if (x > SupportMax()) return 1.0;
  double f = 0.0;
  for (const Atom& a : atoms_) {
    if (a.location < x) f += a.mass;
  }
  for (const Segment& s : segments_) {
    if (x > s.left) f += s.density * (std::min(x, s.right) - s.left);
  }
  return std::clamp(f, 0.0, 1.0);
}

double PiecewiseCdf::TotalMass() const {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.mass;
  for (const Segment& s : segments_) total += s.Mass();
  return total;
}

double PiecewiseCdf::Mean() const {
  double mean = 0.0;
  for (const Atom& a : atoms_) mean += a.location * a.mass;
  for (const Segment& s : segments_) {
    mean += s.density * (s.right * s.right - s.left * s.left) / 2.0;
  }
  return mean;
}

double PiecewiseCdf::SupportMin() const {
  double lo = INFINITY;
  if (!atoms_.empty()) lo = atoms_.front().location;
  if (!segments_.empty()) lo = std::min(lo, segments_.front().left);
  return lo;
}

double PiecewiseCdf::SupportMax() const {
  double hi = -INFINITY;
  if (!atoms_.empty()) hi = atoms_.back().location;
  if (!segments_.empty()) hi = std::max(hi, segments_.back().right);
  return hi;
}

std::vector<double> PiecewiseCdf::Breakpoints() const {
  std::vector<double> points;
  points.reserve(atoms_.size() + 2 * segments_.size());
  for (const Atom& a : atoms_) points.push_back(a.location);
  for (const Segment& s : segments_) {
    points.push_back(s.left);
    points.push_back(s.right);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double PiecewiseCdf::Quantile(double u) const {
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), u,
      [](double value, const Piece& p) { return value < p.mass_before + p.mass; });
  if (it == pieces_.end()) return pieces_.back().end;
  if (it->is_atom) return it->start;
  const double x = it->start + (u - it->mass_before) / it->density;
  return std::clamp(x, it->start, it->end);
}

PiecewiseCdf PiecewiseCdf::Reflected(double total) const {
  if (total < SupportMax()) {
    throw InvalidDistributionError(fmt::format(
        "cannot reflect about {}: support reaches {}", total, SupportMax()));
  }
  std::vector<Atom> atoms;
  atoms.reserve(atoms_.size());
  for (const Atom& a : atoms_) atoms.push_back({total - a.location, a.mass});
  std::vector<Segment> segments;
  segments.reserve(segments_.size());
  for (const Segment& s : segments_) {
    segments.push_back({total - s.right, total - s.left, s.density});
  }
  return PiecewiseCdf(std::move(atoms), std::move(segments));
}

}  // namespace infoblotto
