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

#include "listeval/report.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fmt/format.h"
#include "listeval/errors.h"
#include "listeval/stats.h"

namespace listeval {
namespace {

using nlohmann::ordered_json;

constexpr double kHalfStepSlack = 1e-9;

std::string_view FlagPrefix(Flag flag) {
  switch (flag) {
    case Flag::kStar:
      return "(*) ";
    case Flag::kTriangle:
      return "(^) ";
    case Flag::kNone:
      break;
  }
  return "";
}

ordered_json FlagJson(Flag flag) {
  switch (flag) {
    case Flag::kStar:
      return "star";
    case Flag::kTriangle:
      return "triangle";
    case Flag::kNone:
      break;
  }
  return nullptr;
}

ordered_json NumberOrNull(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

std::string YesNo(bool ok) { return ok ? "Yes" : "No"; }

std::string JoinRow(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(sep);
    out += cells[i];
  }
  return out;
}

std::string MarkdownRow(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

// Measure indices split by kind, unranked first; column layout of the
// plain-text renderings.
struct Layout {
  std::vector<std::size_t> unranked;
  std::vector<std::size_t> ranked;
};

Layout MakeLayout(const EvaluationTable& table) {
  Layout layout;
  for (std::size_t i = 0; i < table.measures.size(); ++i) {
    (IsRanked(table.measures[i]) ? layout.ranked : layout.unranked).push_back(i);
  }
  return layout;
}

std::string RenderMarkdown(const EvaluationTable& table) {
  const Layout layout = MakeLayout(table);
  std::vector<std::string> header = {"Result list", "Gold"};
  std::vector<std::string> align = {"---", "---:"};
  for (std::size_t i : layout.unranked) {
    header.emplace_back(MeasureName(table.measures[i]));
    align.emplace_back("---:");
  }
  header.emplace_back("Gold");
  align.emplace_back("---:");
  for (std::size_t i : layout.ranked) {
    header.emplace_back(MeasureName(table.measures[i]));
    align.emplace_back("---:");
  }

  std::string out = MarkdownRow(header) + MarkdownRow(align);
  auto cell = [&](const TableRow& row, std::size_t i) {
    const ScoreCell& c = row.cells[i];
    return std::string(FlagPrefix(c.flag)) +
           FormatFixed(c.value, DisplayDecimals(table.measures[i]));
  };
  for (const auto& row : table.rows) {
    std::vector<std::string> cells = {row.pattern.str(),
                                      std::to_string(row.gold_unranked)};
    for (std::size_t i : layout.unranked) cells.push_back(cell(row, i));
    cells.push_back(std::to_string(row.gold_ranked));
    for (std::size_t i : layout.ranked) cells.push_back(cell(row, i));
    out += MarkdownRow(cells);
  }

  auto footer = [&](const std::string& label, auto&& value_of) {
    std::vector<std::string> cells = {label, ""};
    for (std::size_t i : layout.unranked) cells.push_back(value_of(i));
    cells.emplace_back("");
    for (std::size_t i : layout.ranked) cells.push_back(value_of(i));
    out += MarkdownRow(cells);
  };
  for (Property p : kAllProperties) {
    footer(std::string(PropertyName(p)), [&](std::size_t i) {
      return YesNo(table.compliance[i].verdict(p).satisfied);
    });
  }
  footer("Kendall's Tau", [&](std::size_t i) {
    return FormatCorrelation(table.correlations[i].kendall);
  });
  footer("Spearman correlation", [&](std::size_t i) {
    return FormatCorrelation(table.correlations[i].spearman);
  });
  return out;
}

std::string RenderCsv(const EvaluationTable& table) {
  const std::size_t m = table.measures.size();
  std::vector<std::string> header = {"pattern", "gold_unranked", "gold_ranked"};
  for (MeasureId id : table.measures) header.emplace_back(MeasureName(id));
  for (MeasureId id : table.measures) {
    header.push_back(std::string(MeasureName(id)) + "_flag");
  }
  std::string out = JoinRow(header, ',') + "\n";

  for (const auto& row : table.rows) {
    std::vector<std::string> cells = {row.pattern.str(),
                                      std::to_string(row.gold_unranked),
                                      std::to_string(row.gold_ranked)};
    for (std::size_t i = 0; i < m; ++i) {
      cells.push_back(
          FormatFixed(row.cells[i].value, DisplayDecimals(table.measures[i])));
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::string flag(FlagPrefix(row.cells[i].flag));
      if (!flag.empty()) flag.pop_back();  // "(*)" without the spacer
      cells.push_back(flag);
    }
    out += JoinRow(cells, ',') + "\n";
  }

  auto footer = [&](const std::string& label, auto&& value_of) {
    std::vector<std::string> cells = {label, "", ""};
    for (std::size_t i = 0; i < m; ++i) cells.push_back(value_of(i));
    for (std::size_t i = 0; i < m; ++i) cells.emplace_back("");
    out += JoinRow(cells, ',') + "\n";
  };
  for (Property p : kAllProperties) {
    footer(std::string(PropertyName(p)), [&](std::size_t i) {
      return YesNo(table.compliance[i].verdict(p).satisfied);
    });
  }
  footer("Kendall's Tau", [&](std::size_t i) {
    return FormatCorrelation(table.correlations[i].kendall);
  });
  footer("Spearman correlation", [&](std::size_t i) {
    return FormatCorrelation(table.correlations[i].spearman);
  });
  return out;
}

}  // namespace

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "md" || name == "markdown") return OutputFormat::kMarkdown;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ValidationError(fmt::format(
      "unknown output format '{}' (expected md, csv or json)", name));
}

int DisplayDecimals(MeasureId id) { return id == MeasureId::kOlar ? 3 : 2; }

double RoundHalfAway(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double scaled = value * scale;
  const double rounded =
      std::round(scaled + std::copysign(kHalfStepSlack * scale, scaled));
  if (rounded == 0.0) return 0.0;  // no "-0.00"
  return rounded / scale;
}

std::string FormatFixed(double value, int decimals) {
  return fmt::format("{:.{}f}", RoundHalfAway(value, decimals), decimals);
}

std::string FormatCorrelation(double value) {
  if (std::isnan(value)) return "NA";
  if (std::abs(value - 1.0) < kScoreTolerance) return "1";
  if (std::abs(value + 1.0) < kScoreTolerance) return "-1";
  return FormatFixed(value, 3);
}

std::vector<Flag> AnnotateFlags(std::span<const double> scores,
                                const GoldRanking& gold) {
  const std::size_t n = gold.patterns.size();
  if (scores.size() != n) {
    throw ValidationError(fmt::format(
        "flags: {} scores for a universe of {} patterns", scores.size(), n));
  }
  std::vector<Flag> flags(n, Flag::kNone);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gold.competition_rank[j] >= gold.competition_rank[i]) continue;
      if (scores[j] > scores[i] + kScoreTolerance) continue;
      const auto decided_by =
          GoldCompareExplained(gold.patterns[j], gold.patterns[i], gold.mode)
              .decided_by;
      if (decided_by == Property::kCorrectness) {
        flags[i] = Flag::kTriangle;
        break;
      }
      if (decided_by == Property::kConfidence) flags[i] = Flag::kStar;
    }
  }
  return flags;
}

Correlation CorrelateWithGold(std::span<const double> scores,
                              const GoldRanking& gold,
                              std::optional<int> display_decimals) {
  std::vector<double> values(scores.begin(), scores.end());
  if (display_decimals) {
    for (double& v : values) v = RoundHalfAway(v, *display_decimals);
  }
  const auto measure_ranks = FractionalRanks(values, /*descending=*/true);
  Correlation c;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    c.kendall = KendallTauB(gold.fractional_rank, measure_ranks);
  } catch (const DomainError&) {
    c.kendall = nan;
  }
  try {
    c.spearman = SpearmanRho(gold.fractional_rank, measure_ranks);
  } catch (const DomainError&) {
    c.spearman = nan;
  }
  return c;
}

EvaluationTable BuildTable(const MeasureConfig& cfg, int max_len) {
  cfg.Validate();
  EvaluationTable table;
  table.config = cfg;
  table.max_len = max_len;
  table.measures.assign(TableMeasures().begin(), TableMeasures().end());

  const auto universe = EnumeratePatterns(max_len);
  const GoldRanking unranked = BuildGoldRanking(universe, GoldMode::kUnranked);
  const GoldRanking ranked = BuildGoldRanking(universe, GoldMode::kRanked);

  table.rows.reserve(universe.size());
  for (std::size_t r = 0; r < universe.size(); ++r) {
    table.rows.push_back({universe[r], unranked.competition_rank[r],
                          ranked.competition_rank[r], {}});
  }

  for (MeasureId id : table.measures) {
    const GoldRanking& gold = IsRanked(id) ? ranked : unranked;
    std::vector<double> scores;
    scores.reserve(universe.size());
    for (const auto& r : universe) scores.push_back(Score(id, r, cfg));
    const auto flags = AnnotateFlags(scores, gold);
    for (std::size_t r = 0; r < universe.size(); ++r) {
      table.rows[r].cells.push_back({scores[r], flags[r]});
    }
    table.compliance.push_back(CheckCompliance(id, max_len, cfg));
    table.correlations.push_back(
        CorrelateWithGold(scores, gold, DisplayDecimals(id)));
  }
  return table;
}

ordered_json ToJson(const ComplianceReport& report) {
  ordered_json out = ordered_json::object();
  for (Property p : kAllProperties) {
    const PropertyVerdict& v = report.verdict(p);
    ordered_json examples = ordered_json::array();
    for (const auto& c : v.counterexamples) {
      examples.push_back({{"preferred", c.preferred.str()},
                          {"other", c.other.str()},
                          {"preferred_score", c.preferred_score},
                          {"other_score", c.other_score}});
    }
    out[std::string(PropertyName(p))] = {{"verdict", YesNo(v.satisfied)},
                                         {"counterexamples", examples}};
  }
  return out;
}

ordered_json ToJson(const EvaluationTable& table) {
  ordered_json out;
  const MeasureConfig& cfg = table.config;
  out["config"] = {{"max_len", table.max_len},
                   {"olar_max_len", cfg.max_len},
                   {"rbp_p", cfg.rbp_p},
                   {"lambda", cfg.lambda},
                   {"mu", cfg.mu()},
                   {"priority_strict", cfg.priority_strict}};

  ordered_json names = ordered_json::array();
  for (MeasureId id : table.measures) names.push_back(MeasureName(id));
  out["measures"] = names;

  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json scores = ordered_json::object();
    for (std::size_t i = 0; i < table.measures.size(); ++i) {
      const MeasureId id = table.measures[i];
      scores[std::string(MeasureName(id))] = {
          {"value", row.cells[i].value},
          {"display", FormatFixed(row.cells[i].value, DisplayDecimals(id))},
          {"flag", FlagJson(row.cells[i].flag)}};
    }
    rows.push_back({{"pattern", row.pattern.str()},
                    {"gold_unranked", row.gold_unranked},
                    {"gold_ranked", row.gold_ranked},
                    {"scores", scores}});
  }
  out["rows"] = rows;

  ordered_json compliance = ordered_json::object();
  ordered_json kendall = ordered_json::object();
  ordered_json spearman = ordered_json::object();
  for (std::size_t i = 0; i < table.measures.size(); ++i) {
    const std::string name(MeasureName(table.measures[i]));
    compliance[name] = ToJson(table.compliance[i]);
    kendall[name] = NumberOrNull(table.correlations[i].kendall);
    spearman[name] = NumberOrNull(table.correlations[i].spearman);
  }
  out["compliance"] = compliance;
  out["correlations"] = {{"kendall", kendall}, {"spearman", spearman}};
  return out;
}

std::string Render(const EvaluationTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kMarkdown:
      return RenderMarkdown(table);
    case OutputFormat::kCsv:
      return RenderCsv(table);
    case OutputFormat::kJson:
      return ToJson(table).dump(2) + "\n";
  }
  throw ValidationError("unknown output format");
}

std::string RenderGold(const GoldRanking& gold) {
  std::string out;
  for (const auto& group : gold.groups) {
    for (std::size_t idx : group) {
      out += fmt::format("{}\t{}\t{}\n", gold.competition_rank[idx],
                         gold.fractional_rank[idx], gold.patterns[idx].str());
    }
  }
  return out;
}

std::string RenderCompliance(const ComplianceReport& report, int decimals) {
  std::string out;
  for (Property p : kAllProperties) {
    const PropertyVerdict& v = report.verdict(p);
    out += fmt::format("{}: {}\n", PropertyName(p), YesNo(v.satisfied));
    for (const auto& c : v.counterexamples) {
      out += fmt::format("  {} ({}) <= {} ({})\n", c.preferred.str(),
                         FormatFixed(c.preferred_score, decimals),
                         c.other.str(), FormatFixed(c.other_score, decimals));
    }
  }
  return out;
}

}  // namespace listeval
