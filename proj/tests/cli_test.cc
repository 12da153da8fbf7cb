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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace listeval {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "listeval");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Testdata(const char* name) {
  return std::string(LISTEVAL_TESTDATA_DIR) + "/" + name;
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Cell `col` (0-based, after the leading pipe) of a markdown row.
std::string Cell(const std::string& row, std::size_t col) {
  std::vector<std::string> cells;
  std::size_t start = row.find('|') + 1;
  for (std::size_t bar; (bar = row.find('|', start)) != std::string::npos;
       start = bar + 1) {
    std::string cell = row.substr(start, bar - start);
    cell.erase(0, cell.find_first_not_of(' '));
    cell.erase(cell.find_last_not_of(' ') + 1);
    cells.push_back(cell);
  }
  return col < cells.size() ? cells[col] : "";
}

TEST(Cli, TableOlarColumn) {
  const Result r = Invoke({"table", "--max-len", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto lines = Lines(r.out);
  ASSERT_GE(lines.size(), 5);
  EXPECT_EQ(Cell(lines[0], 14), "OLAR");
  EXPECT_EQ(Cell(lines[2], 14), "1.000");
  EXPECT_EQ(Cell(lines[3], 14), "0.756");
  EXPECT_EQ(Cell(lines[4], 14), "0.744");
}

TEST(Cli, TableFormats) {
  EXPECT_THAT(Invoke({"table", "--format", "csv"}).out,
              StartsWith("pattern,gold_unranked,gold_ranked,F1,"));
  EXPECT_THAT(Invoke({"table", "--format", "json"}).out, StartsWith("{"));
  const Result bad = Invoke({"table", "--format", "latex"});
  EXPECT_NE(bad.code, kExitOk);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, TableMaxLenOne) {
  const Result r = Invoke({"table", "--max-len", "1", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  EXPECT_THAT(lines[1], StartsWith("c,1,1,"));
  EXPECT_THAT(lines[2], StartsWith("w,2,2,"));
}

TEST(Cli, CheckOlar) {
  const Result r = Invoke({"check", "--measure", "OLAR"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "measure: OLAR\nCorrectness: Yes\nConfidence: Yes\nPriority: Yes\n");
}

TEST(Cli, CheckShowsNecessityOfMu) {
  const Result r =
      Invoke({"check", "--measure", "OLAR", "--max-len", "6", "--mu", "0.049"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("Confidence: No\n"));
  EXPECT_THAT(r.out, HasSubstr("wwwwc (0.59043) <= cwwwww (0.59330)"));
}

TEST(Cli, CheckJson) {
  const Result r = Invoke({"check", "--measure", "F1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("\"Confidence\""));
  EXPECT_THAT(r.out, HasSubstr("\"No\""));
}

TEST(Cli, CorrelateAp) {
  const Result r = Invoke({"correlate", "--measure", "AP", "--mode", "ranked"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "kendall_tau_b\t0.746\nspearman_rho\t0.855\n");
}

TEST(Cli, CorrelateDefaultsToMeasureKind) {
  EXPECT_EQ(Invoke({"correlate", "--measure", "LAR"}).out,
            "kendall_tau_b\t1\nspearman_rho\t1\n");
}

TEST(Cli, Gold) {
  const Result r = Invoke({"gold", "--mode", "unranked", "--max-len", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "1\t1\tc\n2\t2.5\tcw\n2\t2.5\twc\n4\t4\tw\n5\t5\tww\n");
  EXPECT_EQ(Invoke({"gold", "--mode", "sideways"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"gold"}).code, kExitUsage);
}

TEST(Cli, EvalFixture) {
  const Result r = Invoke({"eval", "--runs", Testdata("runs.tsv"), "--qrels",
                        Testdata("qrels.tsv"), "--measures", "LAR,AP"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "query\tpattern\tLAR\tAP\n"
            "q1\tc\t1.0000\t1.0000\n"
            "q2\tw\t0.5000\t0.0000\n"
            "q3\twcw\t0.6667\t0.5000\n"
            "macro\t\t0.7222\t0.5000\n");
}

TEST(Cli, EvalJson) {
  const Result r = Invoke({"eval", "--runs", Testdata("runs.tsv"), "--qrels",
                        Testdata("qrels.tsv"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("\"macro\""));
  EXPECT_THAT(r.out, HasSubstr("\"wcw\""));
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents)
      : path_(std::filesystem::temp_directory_path() /
              ("listeval_cli_" + std::to_string(counter_++) + ".tsv")) {
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(Cli, EvalErrorsExitOne) {
  const Result missing =
      Invoke({"eval", "--runs", "/nonexistent/runs.tsv", "--qrels",
           Testdata("qrels.tsv")});
  EXPECT_EQ(missing.code, kExitValidation);
  EXPECT_THAT(missing.err, HasSubstr("/nonexistent/runs.tsv"));
  EXPECT_TRUE(missing.out.empty());

  TempFile dup("q1\t1\ta\nq1\t1\tb\n");
  TempFile qrels("q1\ta\n");
  const Result bad = Invoke({"eval", "--runs", dup.path(), "--qrels", qrels.path()});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_THAT(bad.err, HasSubstr("line 2"));

  TempFile long_run("q1\t1\ta\nq1\t2\tb\nq1\t3\tc\nq1\t4\td\nq1\t5\te\nq1\t6\tf\n");
  const Result too_long = Invoke({"eval", "--runs", long_run.path(), "--qrels",
                               qrels.path(), "--measures", "OLAR"});
  EXPECT_EQ(too_long.code, kExitValidation);
  EXPECT_THAT(too_long.err, HasSubstr("max_len"));
  EXPECT_TRUE(too_long.out.empty());

  TempFile other_query("q2\tb\n");
  const Result mismatch =
      Invoke({"eval", "--runs", Testdata("runs.tsv"), "--qrels", other_query.path()});
  EXPECT_EQ(mismatch.code, kExitValidation);
  EXPECT_THAT(mismatch.err, HasSubstr("no qrel for [q1, q3]"));
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"check"},
           {"check", "--measure", "XYZ"},
           {"table", "--max-len", "abc"},
           {"table", "--no-such-flag"},
       }) {
    const Result r = Invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << ::testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty()) << ::testing::PrintToString(args);
    EXPECT_THAT(r.err, StartsWith("error: ")) << ::testing::PrintToString(args);
  }
}

TEST(Cli, BadConfigExitsOne) {
  EXPECT_EQ(Invoke({"table", "--rbp-p", "1.0"}).code, kExitValidation);
  EXPECT_EQ(Invoke({"table", "--rbp-p", "1.5"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"check", "--measure", "OLAR", "--lambda", "0.5"}).code,
            kExitValidation);
}

TEST(Cli, Help) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("Usage"));
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  for (const char* format : {"md", "csv", "json"}) {
    EXPECT_EQ(Invoke({"table", "--format", format}).out,
              Invoke({"table", "--format", format}).out);
  }
}

}  // namespace
}  // namespace listeval
