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

#include "listeval/axioms.h"

#include <algorithm>
#include <numeric>


namespace listeval {
namespace {

template <typename T>
Preference CompareMore(T a, T b) {
  if (a > b) return Preference::kFirstBetter;
  if (b > a) return Preference::kSecondBetter;
  return Preference::kUndecided;
}

std::size_t Corrects(const ResponsePattern& r) {
  return CountOutcomes(r, Outcome::kCorrect);
}
std::size_t Wrongs(const ResponsePattern& r) {
  return CountOutcomes(r, Outcome::kWrong);
}

// Whether `property` demands that `a` score above (or, for weak Priority,
// at least as high as) `b`.
bool Demands(Property property, const ResponsePattern& a,
             const ResponsePattern& b, bool priority_strict) {
  if (property == Property::kPriority && !priority_strict) {
    return Corrects(a) == Corrects(b) && Wrongs(a) == Wrongs(b) &&
           ReciprocalRankTerm(a) >= ReciprocalRankTerm(b);
  }
  return Prefer(property, a, b) == Preference::kFirstBetter;
}

}  // namespace

std::string_view PropertyName(Property p) {
  switch (p) {
    case Property::kCorrectness:
      return "Correctness";
    case Property::kConfidence:
      return "Confidence";
    case Property::kPriority:
      return "Priority";
  }
  return "?";
}

std::string_view GoldModeName(GoldMode mode) {
  return mode == GoldMode::kRanked ? "ranked" : "unranked";
}

std::optional<GoldMode> ParseGoldMode(std::string_view name) {
  if (name == "ranked") return GoldMode::kRanked;
  if (name == "unranked") return GoldMode::kUnranked;
  return std::nullopt;
}

Preference PreferCorrectness(const ResponsePattern& a,
                             const ResponsePattern& b) {
  return CompareMore(Corrects(a), Corrects(b));
}

Preference PreferConfidence(const ResponsePattern& a,
                            const ResponsePattern& b) {
  if (Corrects(a) != Corrects(b)) return Preference::kUndecided;
  // Fewer wrong responses wins.
  return CompareMore(Wrongs(b), Wrongs(a));
}

Preference PreferPriority(const ResponsePattern& a, const ResponsePattern& b) {
  if (Corrects(a) != Corrects(b) || Wrongs(a) != Wrongs(b)) {
    return Preference::kUndecided;
  }
  return CompareMore(ReciprocalRankTerm(a), ReciprocalRankTerm(b));
}

Preference Prefer(Property property, const ResponsePattern& a,
                  const ResponsePattern& b) {
  switch (property) {
    case Property::kCorrectness:
      return PreferCorrectness(a, b);
    case Property::kConfidence:
      return PreferConfidence(a, b);
    case Property::kPriority:
      return PreferPriority(a, b);
  }
  return Preference::kUndecided;
}

GoldVerdict GoldCompareExplained(const ResponsePattern& a,
                                 const ResponsePattern& b, GoldMode mode) {
  for (Property property : kAllProperties) {
    if (property == Property::kPriority && mode == GoldMode::kUnranked) break;
    const Preference pref = Prefer(property, a, b);
    if (pref != Preference::kUndecided) return {pref, property};
  }
  return {};
}

GoldRanking BuildGoldRanking(std::vector<ResponsePattern> universe,
                             GoldMode mode) {
  GoldRanking gold;
  gold.mode = mode;
  gold.patterns = std::move(universe);
  const auto& pats = gold.patterns;
  const std::size_t n = pats.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return GoldCompare(pats[i], pats[j], mode) ==
                            Preference::kFirstBetter;
                   });

  gold.competition_rank.assign(n, 0);
  gold.fractional_rank.assign(n, 0.0);
  std::size_t position = 0;  // 0-based position of the group's first member
  for (std::size_t k = 0; k < n;) {
    std::size_t end = k + 1;
    while (end < n && GoldCompare(pats[order[k]], pats[order[end]], mode) ==
                          Preference::kUndecided) {
      ++end;
    }
    std::vector<std::size_t> group(order.begin() + k, order.begin() + end);
    const double mean_rank =
        (static_cast<double>(position + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t idx : group) {
      gold.competition_rank[idx] = static_cast<int>(position + 1);
      gold.fractional_rank[idx] = mean_rank;
    }
    gold.groups.push_back(std::move(group));
    position = end;
    k = end;
  }
  return gold;
}

GoldRanking BuildGoldRanking(int max_len, GoldMode mode) {
  return BuildGoldRanking(EnumeratePatterns(max_len), mode);
}

PropertyVerdict CheckProperty(const ScoreFn& score, Property property,
                              std::span<const ResponsePattern> universe,
                              bool priority_strict) {
  std::vector<ResponsePattern> sorted(universe.begin(), universe.end());
  std::stable_sort(sorted.begin(), sorted.end(), CanonicalLess);
  std::vector<double> scores;
  scores.reserve(sorted.size());
  for (const auto& r : sorted) scores.push_back(score(r));

  const bool weak = property == Property::kPriority && !priority_strict;
  PropertyVerdict verdict;
  verdict.property = property;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (!Demands(property, sorted[i], sorted[j], priority_strict)) continue;
      const double diff = scores[i] - scores[j];
      const bool ok = weak ? diff >= -kScoreTolerance : diff > kScoreTolerance;
      if (!ok) {
        verdict.counterexamples.push_back(
            {sorted[i], sorted[j], scores[i], scores[j]});
      }
    }
  }
  verdict.satisfied = verdict.counterexamples.empty();
  return verdict;
}

PropertyVerdict CheckProperty(MeasureId measure, Property property,
                              int max_len, const MeasureConfig& cfg) {
  const auto universe = EnumeratePatterns(max_len);
  return CheckProperty(
      [&](const ResponsePattern& r) { return Score(measure, r, cfg); },
      property, universe, cfg.priority_strict);
}

ComplianceReport CheckCompliance(MeasureId measure, int max_len,
                                 const MeasureConfig& cfg) {
  ComplianceReport report;
  report.measure = measure;
  for (Property property : kAllProperties) {
    report.verdicts[static_cast<std::size_t>(property)] =
        CheckProperty(measure, property, max_len, cfg);
  }
  return report;
}

std::vector<ComplianceReport> ComplianceMatrix(
    std::span<const MeasureId> measures, int max_len,
    const MeasureConfig& cfg) {
  std::vector<ComplianceReport> out;
  out.reserve(measures.size());
  for (MeasureId m : measures) out.push_back(CheckCompliance(m, max_len, cfg));
  return out;
}

}  // namespace listeval
