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

#include "listeval/ingest.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "fmt/format.h"
#include "listeval/errors.h"

namespace listeval {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

// Splits into tab-separated records, skipping blanks and '#' comments.
std::vector<Line> SplitRecords(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    Line rec{number, {}};
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      rec.fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    lines.push_back(std::move(rec));
  }
  return lines;
}

void ExpectFields(const Line& line, std::size_t n, std::string_view what) {
  if (line.fields.size() != n) {
    throw ValidationError(fmt::format("{} line {}: expected {} tab-separated "
                                      "fields, got {}",
                                      what, line.number, n, line.fields.size()));
  }
  for (std::string_view f : line.fields) {
    if (f.empty()) {
      throw ValidationError(
          fmt::format("{} line {}: empty field", what, line.number));
    }
  }
}

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::vector<RunRecord> ParseRuns(std::string_view text) {
  std::vector<RunRecord> records;
  // query -> (ranks seen, items seen)
  std::map<std::string, std::pair<std::set<int>, std::set<std::string>>> seen;
  for (const Line& line : SplitRecords(text)) {
    ExpectFields(line, 3, "runs");
    const std::string_view rank_text = line.fields[1];
    int rank = 0;
    const auto [ptr, ec] = std::from_chars(
        rank_text.data(), rank_text.data() + rank_text.size(), rank);
    if (ec != std::errc() || ptr != rank_text.data() + rank_text.size() ||
        rank < 1) {
      throw ValidationError(fmt::format(
          "runs line {}: rank '{}' is not a positive integer", line.number,
          rank_text));
    }
    RunRecord rec{std::string(line.fields[0]), rank,
                  std::string(line.fields[2])};
    auto& [ranks, items] = seen[rec.query_id];
    if (!ranks.insert(rank).second) {
      throw ValidationError(fmt::format("runs line {}: duplicate rank {} for "
                                        "query '{}'",
                                        line.number, rank, rec.query_id));
    }
    if (!items.insert(rec.item_id).second) {
      throw ValidationError(fmt::format("runs line {}: duplicate item '{}' for "
                                        "query '{}'",
                                        line.number, rec.item_id, rec.query_id));
    }
    records.push_back(std::move(rec));
  }
  for (const auto& [query, entry] : seen) {
    const auto& ranks = entry.first;
    // std::set is ordered, so 1..k holds iff the largest rank equals the count
    if (*ranks.rbegin() != static_cast<int>(ranks.size())) {
      throw ValidationError(fmt::format(
          "runs: ranks for query '{}' are not contiguous from 1 (max rank {}, "
          "{} items)",
          query, *ranks.rbegin(), ranks.size()));
    }
  }
  return records;
}

std::vector<QrelRecord> ParseQrels(std::string_view text) {
  std::vector<QrelRecord> records;
  std::set<std::string> queries;
  for (const Line& line : SplitRecords(text)) {
    ExpectFields(line, 2, "qrels");
    QrelRecord rec{std::string(line.fields[0]), std::string(line.fields[1])};
    if (!queries.insert(rec.query_id).second) {
      throw ValidationError(fmt::format(
          "qrels line {}: second correct item for query '{}' (one intent per "
          "query)",
          line.number, rec.query_id));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::map<std::string, ResponsePattern> PatternsFromRuns(
    std::span<const RunRecord> runs, std::span<const QrelRecord> qrels) {
  std::map<std::string, std::vector<const RunRecord*>> by_query;
  for (const auto& r : runs) by_query[r.query_id].push_back(&r);
  std::map<std::string, std::string> gold;
  for (const auto& q : qrels) gold.emplace(q.query_id, q.correct_item_id);

  std::vector<std::string> missing_qrels, missing_runs;
  for (const auto& [query, unused] : by_query) {
    if (!gold.contains(query)) missing_qrels.push_back(query);
  }
  for (const auto& [query, unused] : gold) {
    if (!by_query.contains(query)) missing_runs.push_back(query);
  }
  if (!missing_qrels.empty() || !missing_runs.empty()) {
    std::string msg = "runs and qrels disagree on queries:";
    if (!missing_qrels.empty()) {
      msg += " no qrel for [" + JoinIds(missing_qrels) + "];";
    }
    if (!missing_runs.empty()) {
      msg += " no run for [" + JoinIds(missing_runs) + "];";
    }
    msg.pop_back();
    throw ValidationError(msg);
  }

  std::map<std::string, ResponsePattern> out;
  for (auto& [query, records] : by_query) {
    std::sort(records.begin(), records.end(),
              [](const RunRecord* a, const RunRecord* b) { return a->rank < b->rank; });
    std::vector<Outcome> items;
    items.reserve(records.size());
    const std::string& correct = gold.at(query);
    for (const RunRecord* r : records) {
      items.push_back(r->item_id == correct ? Outcome::kCorrect
                                            : Outcome::kWrong);
    }
    out.emplace(query, ResponsePattern(std::move(items)));
  }
  return out;
}

RunEvaluation EvaluateRuns(const std::map<std::string, ResponsePattern>& patterns,
                           std::span<const MeasureId> measures,
                           const MeasureConfig& cfg) {
  if (patterns.empty()) throw ValidationError("no queries to evaluate");
  RunEvaluation eval;
  eval.measures.assign(measures.begin(), measures.end());
  eval.macro.assign(measures.size(), 0.0);
  for (const auto& [query, pattern] : patterns) {
    QueryScores qs{query, pattern, {}};
    qs.scores.reserve(measures.size());
    for (std::size_t m = 0; m < measures.size(); ++m) {
      qs.scores.push_back(Score(measures[m], pattern, cfg));
      eval.macro[m] += qs.scores.back();
    }
    eval.queries.push_back(std::move(qs));
  }
  for (double& v : eval.macro) v /= static_cast<double>(patterns.size());
  return eval;
}

}  // namespace listeval
