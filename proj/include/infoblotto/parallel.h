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

#ifndef INFOBLOTTO_PARALLEL_H_
#define INFOBLOTTO_PARALLEL_H_

#include <cstddef>
#include <limits>
#include <span>

#if INFOBLOTTO_USE_OPENMP
#include <omp.h>
#endif

namespace infoblotto {

// Every data-parallel kernel has a serial reference path and an OpenMP path.
// Both produce bit-identical results: reductions are either exact (max) or
// performed over fixed-size chunks combined in index order.
enum class Exec { kSerial, kOpenMP };

inline int MaxThreads() {
#if INFOBLOTTO_USE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// max_k f(points[k]); -inf for an empty span.
template <typename F>
double ScanMax(std::span<const double> points, F&& f, Exec exec) {
  double best = -std::numeric_limits<double>::infinity();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(points.size());
  if (exec == Exec::kSerial) {
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const double v = f(points[k]);
      if (v > best) best = v;
    }
    return best;
  }
#if INFOBLOTTO_USE_OPENMP
#pragma omp parallel for schedule(static) reduction(max : best)
#endif
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double v = f(points[k]);
    if (v > best) best = v;
  }
  return best;
}

// Calls body(k) for k in [0, n); each k must write only its own output slot.
template <typename Body>
void ParallelFor(std::size_t n, Body&& body, Exec exec) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(n);
  if (exec == Exec::kSerial) {
    for (std::ptrdiff_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
    return;
  }
#if INFOBLOTTO_USE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::ptrdiff_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
}

}  // namespace infoblotto

#endif  // INFOBLOTTO_PARALLEL_H_
