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

// The comparison table: per-pattern scores of every measure next to both
// gold orderings, with rank-inconsistency flags, the property compliance
// grid, and rank correlations against gold.

#ifndef LISTEVAL_REPORT_H_
#define LISTEVAL_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "listeval/axioms.h"
#include "listeval/measures.h"
#include "listeval/pattern.h"

namespace listeval {

// kStar: a gold-better list scores no higher and Confidence separated them.
// kTriangle: same, but Correctness separated them.
enum class Flag { kNone, kStar, kTriangle };

enum class OutputFormat { kMarkdown, kCsv, kJson };

// Accepts "md", "markdown", "csv" and "json". Throws ValidationError.
OutputFormat ParseOutputFormat(std::string_view name);

// Digits shown for a measure: 3 for OLAR, 2 for everything else.
int DisplayDecimals(MeasureId id);
// Rounds half away from zero. Values within 1e-9 of a half step count as
// exact halves, so 0.625 computed as 0.62499999999 still rounds up.
double RoundHalfAway(double value, int decimals);
std::string FormatFixed(double value, int decimals);
// Three decimals; +-1 (within kScoreTolerance) prints as "1" / "-1" and NaN
// as "NA".
std::string FormatCorrelation(double value);

// Flags pattern i when some strictly gold-better pattern scores no higher.
// The symbol reflects the highest-priority property that separated any such
// pair. Pairs separated by Priority alone carry no symbol.
std::vector<Flag> AnnotateFlags(std::span<const double> scores,
                                const GoldRanking& gold);

struct Correlation {
  double kendall = 0.0;
  double spearman = 0.0;
};

// Correlates gold fractional ranks with the measure's descending fractional
// ranks. Scores are compared at `display_decimals` precision when given, so
// values that print alike are ranked as ties. A statistic that is undefined
// for this input (e.g. constant scores) is NaN.
Correlation CorrelateWithGold(std::span<const double> scores,
                              const GoldRanking& gold,
                              std::optional<int> display_decimals);

struct ScoreCell {
  double value = 0.0;
  Flag flag = Flag::kNone;
};

struct TableRow {
  ResponsePattern pattern;
  int gold_unranked = 0;
  int gold_ranked = 0;
  std::vector<ScoreCell> cells;  // aligned with EvaluationTable::measures
};

struct EvaluationTable {
  MeasureConfig config;
  int max_len = 5;
  std::vector<MeasureId> measures;
  std::vector<TableRow> rows;  // EnumeratePatterns order
  std::vector<ComplianceReport> compliance;
  std::vector<Correlation> correlations;
};

// Scores every pattern up to `max_len` with the twelve table measures.
// Unranked measures are flagged and correlated against the unranked gold
// ordering, ranked ones against the ranked ordering. OLAR is evaluated with
// cfg as given, so cfg.max_len must be >= max_len.
EvaluationTable BuildTable(const MeasureConfig& cfg, int max_len);
inline EvaluationTable BuildTable(const MeasureConfig& cfg) {
  return BuildTable(cfg, cfg.max_len);
}

std::string Render(const EvaluationTable& table, OutputFormat format);

nlohmann::ordered_json ToJson(const ComplianceReport& report);
nlohmann::ordered_json ToJson(const EvaluationTable& table);

// "competition_rank<TAB>fractional_rank<TAB>pattern" per line, best first.
std::string RenderGold(const GoldRanking& gold);
// Verdict lines plus indented counterexamples.
std::string RenderCompliance(const ComplianceReport& report, int decimals);

}  // namespace listeval

#endif  // LISTEVAL_REPORT_H_
