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

// Turns system runs plus single-intent gold labels into response patterns
// and macro-averages measure scores over queries.
//
// Runs:  query_id <TAB> rank <TAB> item_id
// Qrels: query_id <TAB> correct_item_id
// Blank lines and lines starting with '#' are skipped.

#ifndef LISTEVAL_INGEST_H_
#define LISTEVAL_INGEST_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "listeval/measures.h"
#include "listeval/pattern.h"

namespace listeval {

struct RunRecord {
  std::string query_id;
  int rank = 0;
  std::string item_id;
};

struct QrelRecord {
  std::string query_id;
  std::string correct_item_id;
};

// Throws ValidationError (with the 1-based line number where one applies)
// on malformed lines, duplicate ranks or items within a query, and ranks
// that do not form 1..k.
std::vector<RunRecord> ParseRuns(std::string_view text);
// Throws ValidationError on malformed lines or a second qrel for a query.
std::vector<QrelRecord> ParseQrels(std::string_view text);

// Throws ValidationError listing query ids present in only one input.
std::map<std::string, ResponsePattern> PatternsFromRuns(
    std::span<const RunRecord> runs, std::span<const QrelRecord> qrels);

struct QueryScores {
  std::string query_id;
  ResponsePattern pattern;
  std::vector<double> scores;  // aligned with RunEvaluation::measures
};

struct RunEvaluation {
  std::vector<MeasureId> measures;
  std::vector<QueryScores> queries;  // sorted by query id
  std::vector<double> macro;         // per-measure arithmetic mean
};

RunEvaluation EvaluateRuns(const std::map<std::string, ResponsePattern>& patterns,
                           std::span<const MeasureId> measures,
                           const MeasureConfig& cfg);

}  // namespace listeval

#endif  // LISTEVAL_INGEST_H_
