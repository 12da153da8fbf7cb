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

// Executable preference axioms over response lists, the gold ordering they
// induce, and compliance checking of measures against them.
//
// Three properties, applied in this fixed order:
//   Correctness  more correct responses is better;
//   Confidence   at equal correct count, fewer wrong responses is better;
//   Priority     at equal counts, a higher-ranked correct response is better.

#ifndef LISTEVAL_AXIOMS_H_
#define LISTEVAL_AXIOMS_H_

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "listeval/measures.h"
#include "listeval/pattern.h"

namespace listeval {

// Two scores closer than this are treated as tied by every checker.
inline constexpr double kScoreTolerance = 1e-12;

enum class Property { kCorrectness, kConfidence, kPriority };
enum class Preference { kFirstBetter, kSecondBetter, kUndecided };
enum class GoldMode { kUnranked, kRanked };

std::string_view PropertyName(Property p);
std::string_view GoldModeName(GoldMode mode);
std::optional<GoldMode> ParseGoldMode(std::string_view name);
inline constexpr std::array<Property, 3> kAllProperties = {
    Property::kCorrectness, Property::kConfidence, Property::kPriority};

Preference PreferCorrectness(const ResponsePattern& a,
                             const ResponsePattern& b);
// Undecided unless both lists have the same number of correct responses.
Preference PreferConfidence(const ResponsePattern& a,
                            const ResponsePattern& b);
// Undecided unless both correct and wrong counts match. The verdict itself
// does not depend on strictness: equal reciprocal ranks are Undecided
// either way. Strictness only changes what a measure must do about it
// (see CheckProperty).
Preference PreferPriority(const ResponsePattern& a, const ResponsePattern& b);
Preference Prefer(Property property, const ResponsePattern& a,
                  const ResponsePattern& b);

struct GoldVerdict {
  Preference preference = Preference::kUndecided;
  // The property that settled the comparison; empty for ties.
  std::optional<Property> decided_by;
};

// Applies Correctness, then Confidence, then (ranked mode only) Priority,
// and returns the first decisive verdict.
GoldVerdict GoldCompareExplained(const ResponsePattern& a,
                                 const ResponsePattern& b, GoldMode mode);
inline Preference GoldCompare(const ResponsePattern& a,
                              const ResponsePattern& b, GoldMode mode) {
  return GoldCompareExplained(a, b, mode).preference;
}

// Ideal ordering of a pattern universe. Per-pattern vectors are aligned with
// `patterns`, which keeps the universe's own order.
struct GoldRanking {
  GoldMode mode = GoldMode::kRanked;
  std::vector<ResponsePattern> patterns;
  // Indices into `patterns`, best group first; members of a group are tied.
  std::vector<std::vector<std::size_t>> groups;
  // 1 + number of strictly better patterns ("1,2,2,4" style).
  std::vector<int> competition_rank;
  // Mean position within the tie group ("1,2.5,2.5,4" style).
  std::vector<double> fractional_rank;
};

GoldRanking BuildGoldRanking(std::vector<ResponsePattern> universe,
                             GoldMode mode);
GoldRanking BuildGoldRanking(int max_len, GoldMode mode);

// A pair the property orders one way and the measure does not.
struct Counterexample {
  ResponsePattern preferred;
  ResponsePattern other;
  double preferred_score = 0.0;
  double other_score = 0.0;
};

struct PropertyVerdict {
  Property property = Property::kCorrectness;
  bool satisfied = true;
  // Sorted by canonical order of (preferred, other).
  std::vector<Counterexample> counterexamples;
};

struct ComplianceReport {
  MeasureId measure = MeasureId::kF1;
  std::array<PropertyVerdict, 3> verdicts;

  const PropertyVerdict& verdict(Property p) const {
    return verdicts[static_cast<std::size_t>(p)];
  }
};

using ScoreFn = std::function<double(const ResponsePattern&)>;

// For every ordered pair the property prefers (r1 over r2), requires
// score(r1) > score(r2). Priority with strict == false is the literal
// weak form: equal counts and p(r1) >= p(r2) require score(r1) >= score(r2).
PropertyVerdict CheckProperty(const ScoreFn& score, Property property,
                              std::span<const ResponsePattern> universe,
                              bool priority_strict = true);
// Checks `measure` over EnumeratePatterns(max_len) with cfg.priority_strict.
PropertyVerdict CheckProperty(MeasureId measure, Property property,
                              int max_len, const MeasureConfig& cfg);

ComplianceReport CheckCompliance(MeasureId measure, int max_len,
                                 const MeasureConfig& cfg);
std::vector<ComplianceReport> ComplianceMatrix(
    std::span<const MeasureId> measures, int max_len, const MeasureConfig& cfg);

}  // namespace listeval

#endif  // LISTEVAL_AXIOMS_H_
