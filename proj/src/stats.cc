/*
 * Copyright 2026 The listeval Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "listeval/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

#include "fmt/format.h"
#include "listeval/errors.h"

namespace listeval {
namespace {

void CheckPair(std::span<const double> x, std::span<const double> y,
               const char* what) {
  if (x.size() != y.size()) {
    throw DomainError(fmt::format("{}: length mismatch ({} vs {})", what,
                                  x.size(), y.size()));
  }
  if (x.size() < 2) {
    throw DomainError(fmt::format("{}: need at least two observations", what));
  }
}

int64_t Pairs(int64_t t) { return t * (t - 1) / 2; }

// Sum of t(t-1)/2 over runs of equal adjacent values in a sorted range.
template <typename It, typename Eq>
int64_t TiedPairs(It first, It last, Eq eq) {
  int64_t total = 0;
  while (first != last) {
    It run_end = std::next(first);
    while (run_end != last && eq(*first, *run_end)) ++run_end;
    total += Pairs(std::distance(first, run_end));
    first = run_end;
  }
  return total;
}

// Sorts v[lo, hi) ascending, returning the number of strict inversions.
int64_t MergeCount(std::vector<double>& v, std::vector<double>& buf,
                   std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  int64_t swaps = MergeCount(v, buf, lo, mid) + MergeCount(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return swaps;
}

// Sum over tie groups of (t^3 - t), from a rank vector's raw values.
double TieCubes(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (std::size_t k = 0; k < sorted.size();) {
    std::size_t end = k + 1;
    while (end < sorted.size() && sorted[end] == sorted[k]) ++end;
    const double t = static_cast<double>(end - k);
    total += t * t * t - t;
    k = end;
  }
  return total;
}

}  // namespace

std::vector<double> FractionalRanks(std::span<const double> values,
                                    bool descending) {
  if (values.empty()) throw DomainError("fractional ranks of empty input");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return descending ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t k = 0; k < order.size();) {
    std::size_t end = k + 1;
    while (end < order.size() && values[order[end]] == values[order[k]]) ++end;
    // positions k+1 .. end share their mean
    const double mean =
        (static_cast<double>(k + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t m = k; m < end; ++m) ranks[order[m]] = mean;
    k = end;
  }
  return ranks;
}

double KendallTauB(std::span<const double> x, std::span<const double> y) {
  CheckPair(x, y, "kendall_tau_b");
  const std::size_t n = x.size();
  std::vector<std::pair<double, double>> xy(n);
  for (std::size_t i = 0; i < n; ++i) xy[i] = {x[i], y[i]};
  std::sort(xy.begin(), xy.end());

  const int64_t n0 = Pairs(static_cast<int64_t>(n));
  const int64_t n1 = TiedPairs(xy.begin(), xy.end(), [](auto& a, auto& b) {
    return a.first == b.first;
  });
  const int64_t joint = TiedPairs(xy.begin(), xy.end(), [](auto& a, auto& b) {
    return a == b;
  });

  std::vector<double> ys(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = xy[i].second;
  const int64_t swaps = MergeCount(ys, buf, 0, n);
  const int64_t n2 = TiedPairs(ys.begin(), ys.end(),
                               [](double a, double b) { return a == b; });

  if (n0 == n1 || n0 == n2) {
    throw DomainError("kendall_tau_b undefined: a vector is entirely tied");
  }
  const int64_t s = n0 - n1 - n2 + joint - 2 * swaps;  // concordant - discordant
  return static_cast<double>(s) /
         std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
}

double SpearmanRho(std::span<const double> x, std::span<const double> y) {
  CheckPair(x, y, "spearman_rho");
  const auto rx = FractionalRanks(x, /*descending=*/false);
  const auto ry = FractionalRanks(y, /*descending=*/false);
  const double n = static_cast<double>(x.size());
  const double base = (n * n * n - n) / 12.0;
  const double sxx = base - TieCubes(rx) / 12.0;
  const double syy = base - TieCubes(ry) / 12.0;
  if (sxx <= 0.0 || syy <= 0.0) {
    throw DomainError("spearman_rho undefined: zero rank variance");
  }
  double d2 = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double d = rx[i] - ry[i];
    d2 += d * d;
  }
  return (sxx + syy - d2) / (2.0 * std::sqrt(sxx * syy));
}

}  // namespace listeval
