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

// Scoring functions for variable-length response lists: classic IR
// measures, their smoothed (^s) and terminal-response (^L) variants, and
// the length-aware recall measures LAR and OLAR.
//
// None of the functions round; rounding is a presentation concern.

#ifndef LISTEVAL_MEASURES_H_
#define LISTEVAL_MEASURES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listeval/pattern.h"

namespace listeval {

enum class MeasureId {
  kPrecision,
  kRecall,
  kF1,
  kF1Smoothed,
  kLar,
  kAp,
  kApTerminal,
  kApSmoothed,
  kRr,
  kNdcg,
  kNdcgTerminal,
  kRbp,
  kRbpTerminal,
  kOlar,
};

// Canonical name ("F1s", "nDCGL", ...), as accepted on the command line.
std::string_view MeasureName(MeasureId id);
// Inverse of MeasureName; case-sensitive. Returns nullopt for unknown names.
std::optional<MeasureId> ParseMeasureId(std::string_view name);
// Ranked measures are judged against the ranked gold ordering (with
// Priority); unranked ones against the unranked ordering.
bool IsRanked(MeasureId id);
// The twelve measures of the comparison table, in column order.
std::span<const MeasureId> TableMeasures();
// Every id, helpers included.
std::span<const MeasureId> AllMeasures();

// A response list with extra appended slots, scored against a gold set of
// `total_relevant` items (some possibly never retrieved).
struct AugmentedList {
  std::vector<bool> relevant;
  int total_relevant = 1;

  int retrieved_relevant() const;
};

// Appends one relevant slot. The gold set is the original answer plus the
// appended one, so total_relevant is always 2.
AugmentedList Smooth(const ResponsePattern& r);

// Appends a terminal slot that is relevant only when the list already
// holds the correct answer. total_relevant counts the answer plus a
// relevant terminal: 2 if the answer is present, else 1.
AugmentedList Terminalize(const ResponsePattern& r);

double Precision(const ResponsePattern& r);
double F1(const ResponsePattern& r);
double F1Smoothed(const ResponsePattern& r);

double AveragePrecision(const AugmentedList& a);
double AveragePrecision(const ResponsePattern& r);
double ApTerminal(const ResponsePattern& r);
double ApSmoothed(const ResponsePattern& r);

double ReciprocalRank(const ResponsePattern& r);

// Binary-gain nDCG with discount 1/log2(rank + 1).
double Ndcg(const AugmentedList& a);
double Ndcg(const ResponsePattern& r);
double NdcgTerminal(const ResponsePattern& r);

// Rank-biased precision with persistence p. Throws ConfigError unless
// 0 < p < 1.
double Rbp(const ResponsePattern& r, double p);
// RBP plus the full residual p^|r| credited to a relevant terminal slot.
double RbpTerminal(const ResponsePattern& r, double p);

// Length-aware recall: mean of recall and inverse list length.
double Lar(const ResponsePattern& r);
// Ordered LAR: adds the reciprocal rank scaled into [0, mu] and normalises
// by 2 + mu. Throws ConfigError if |r| exceeds cfg.max_len.
double Olar(const ResponsePattern& r, const MeasureConfig& cfg);

// Uniform dispatch over all measure ids.
double Score(MeasureId id, const ResponsePattern& r, const MeasureConfig& cfg);

}  // namespace listeval

#endif  // LISTEVAL_MEASURES_H_
