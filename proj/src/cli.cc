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

#include "listeval/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "listeval/axioms.h"
#include "listeval/errors.h"
#include "listeval/ingest.h"
#include "listeval/measures.h"
#include "listeval/report.h"

namespace listeval {
namespace {

struct Options {
  int max_len = 5;
  double rbp_p = 0.5;
  double lambda = 0.001;
  bool weak_priority = false;
  std::optional<double> mu;
  std::string format;
  std::string measure;
  std::string mode;
  std::string measures;
  std::string runs_path;
  std::string qrels_path;
};

// CLI11 validator for measure names.
std::string CheckMeasureName(const std::string& name) {
  if (ParseMeasureId(name)) return {};
  return "unknown measure '" + name + "'";
}

std::string CheckMeasureList(const std::string& list) {
  std::stringstream ss(list);
  std::string name;
  bool any = false;
  while (std::getline(ss, name, ',')) {
    if (auto msg = CheckMeasureName(name); !msg.empty()) return msg;
    any = true;
  }
  return any ? std::string() : "empty measure list";
}

std::vector<MeasureId> ParseMeasureList(const std::string& list) {
  std::vector<MeasureId> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back(*ParseMeasureId(name));
  return out;
}

void AddConfigOptions(CLI::App* sub, Options& opt, bool with_priority) {
  sub->add_option("--max-len", opt.max_len,
                  "Longest response list considered (default 5)")
      ->check(CLI::Range(1, 12));
  sub->add_option("--rbp-p", opt.rbp_p, "RBP persistence p in (0,1)")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--lambda", opt.lambda,
                  "OLAR safety margin subtracted from the priority cap");
  sub->add_option("--mu", opt.mu,
                  "Fix the OLAR priority cap instead of deriving it");
  if (with_priority) {
    sub->add_flag("--weak-priority", opt.weak_priority,
                  "Check Priority in its non-strict (>=) form");
  }
}

// Config for a pattern universe of lists up to opt.max_len. OLAR needs a cap
// length of at least 2.
MeasureConfig MakeConfig(const Options& opt) {
  MeasureConfig cfg;
  cfg.max_len = std::max(opt.max_len, 2);
  cfg.rbp_p = opt.rbp_p;
  cfg.lambda = opt.lambda;
  cfg.priority_strict = !opt.weak_priority;
  cfg.mu_override = opt.mu;
  cfg.Validate();
  return cfg;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GoldMode ModeOrDefault(const Options& opt, MeasureId id) {
  if (opt.mode.empty()) {
    return IsRanked(id) ? GoldMode::kRanked : GoldMode::kUnranked;
  }
  return *ParseGoldMode(opt.mode);
}

void RunTable(const Options& opt, std::ostream& out) {
  const MeasureConfig cfg = MakeConfig(opt);
  const OutputFormat format = ParseOutputFormat(opt.format);
  out << Render(BuildTable(cfg, opt.max_len), format);
}

void RunGold(const Options& opt, std::ostream& out) {
  out << RenderGold(BuildGoldRanking(opt.max_len, *ParseGoldMode(opt.mode)));
}

void RunCheck(const Options& opt, std::ostream& out) {
  const MeasureConfig cfg = MakeConfig(opt);
  const MeasureId id = *ParseMeasureId(opt.measure);
  const ComplianceReport report = CheckCompliance(id, opt.max_len, cfg);
  if (opt.format == "json") {
    nlohmann::ordered_json j;
    j["measure"] = MeasureName(id);
    j["max_len"] = opt.max_len;
    j["priority_strict"] = cfg.priority_strict;
    j["properties"] = ToJson(report);
    out << j.dump(2) << "\n";
    return;
  }
  out << "measure: " << MeasureName(id) << "\n";
  out << RenderCompliance(report, 5);
}

void RunCorrelate(const Options& opt, std::ostream& out) {
  const MeasureConfig cfg = MakeConfig(opt);
  const MeasureId id = *ParseMeasureId(opt.measure);
  const GoldRanking gold = BuildGoldRanking(opt.max_len, ModeOrDefault(opt, id));
  std::vector<double> scores;
  for (const auto& r : gold.patterns) scores.push_back(Score(id, r, cfg));
  const Correlation c = CorrelateWithGold(scores, gold, DisplayDecimals(id));
  out << "kendall_tau_b\t" << FormatCorrelation(c.kendall) << "\n";
  out << "spearman_rho\t" << FormatCorrelation(c.spearman) << "\n";
}

void RunEval(const Options& opt, std::ostream& out) {
  MeasureConfig cfg = MakeConfig(opt);
  const auto runs = ParseRuns(ReadFile(opt.runs_path));
  const auto qrels = ParseQrels(ReadFile(opt.qrels_path));
  const auto patterns = PatternsFromRuns(runs, qrels);
  const std::vector<MeasureId> measures =
      opt.measures.empty()
          ? std::vector<MeasureId>(TableMeasures().begin(), TableMeasures().end())
          : ParseMeasureList(opt.measures);
  const RunEvaluation eval = EvaluateRuns(patterns, measures, cfg);

  if (opt.format == "json") {
    nlohmann::ordered_json j;
    nlohmann::ordered_json queries = nlohmann::ordered_json::array();
    for (const auto& q : eval.queries) {
      nlohmann::ordered_json scores = nlohmann::ordered_json::object();
      for (std::size_t m = 0; m < measures.size(); ++m) {
        scores[std::string(MeasureName(measures[m]))] = q.scores[m];
      }
      queries.push_back(
          {{"query_id", q.query_id}, {"pattern", q.pattern.str()}, {"scores", scores}});
    }
    nlohmann::ordered_json macro = nlohmann::ordered_json::object();
    for (std::size_t m = 0; m < measures.size(); ++m) {
      macro[std::string(MeasureName(measures[m]))] = eval.macro[m];
    }
    j["queries"] = queries;
    j["macro"] = macro;
    out << j.dump(2) << "\n";
    return;
  }

  out << "query\tpattern";
  for (MeasureId id : measures) out << "\t" << MeasureName(id);
  out << "\n";
  for (const auto& q : eval.queries) {
    out << q.query_id << "\t" << q.pattern.str();
    for (double v : q.scores) out << "\t" << FormatFixed(v, 4);
    out << "\n";
  }
  out << "macro\t";
  for (double v : eval.macro) out << "\t" << FormatFixed(v, 4);
  out << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Evaluate variable-length response lists against preference "
               "axioms",
               "listeval"};
  app.require_subcommand(1);
  Options opt;

  auto* table = app.add_subcommand("table", "Full comparison table");
  AddConfigOptions(table, opt, true);
  opt.format = "md";
  table->add_option("--format", opt.format, "md, csv or json")
      ->check(CLI::IsMember({"md", "markdown", "csv", "json"}));

  auto* gold = app.add_subcommand("gold", "Gold ranking of all lists");
  gold->add_option("--mode", opt.mode, "ranked or unranked")
      ->required()
      ->check(CLI::IsMember({"ranked", "unranked"}));
  gold->add_option("--max-len", opt.max_len, "Longest list (default 5)")
      ->check(CLI::Range(1, 12));

  auto* check = app.add_subcommand("check", "Property compliance of a measure");
  check->add_option("--measure", opt.measure, "Measure name")
      ->required()
      ->check(CheckMeasureName);
  AddConfigOptions(check, opt, true);
  check->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* eval = app.add_subcommand("eval", "Score runs against qrels");
  eval->add_option("--runs", opt.runs_path, "query<TAB>rank<TAB>item file")
      ->required();
  eval->add_option("--qrels", opt.qrels_path, "query<TAB>correct_item file")
      ->required();
  eval->add_option("--measures", opt.measures,
                   "Comma-separated measure names (default: all table measures)")
      ->check(CheckMeasureList);
  AddConfigOptions(eval, opt, false);
  eval->add_option("--format", opt.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* correlate =
      app.add_subcommand("correlate", "Rank correlation of a measure with gold");
  correlate->add_option("--measure", opt.measure, "Measure name")
      ->required()
      ->check(CheckMeasureName);
  correlate->add_option("--mode", opt.mode,
                        "ranked or unranked (default: the measure's kind)")
      ->check(CLI::IsMember({"ranked", "unranked"}));
  AddConfigOptions(correlate, opt, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*table) {
      RunTable(opt, out);
    } else if (*gold) {
      RunGold(opt, out);
    } else if (*check) {
      RunCheck(opt, out);
    } else if (*eval) {
      RunEval(opt, out);
    } else if (*correlate) {
      RunCorrelate(opt, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace listeval
