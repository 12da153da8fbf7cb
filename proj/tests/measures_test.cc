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

#include "listeval/measures.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "listeval/errors.h"

namespace listeval {
namespace {

// Published values carry two (OLAR: three) decimals.
constexpr double kTwoDp = 0.005 + 1e-12;
constexpr double kThreeDp = 0.0005 + 1e-12;

ResponsePattern P(const char* text) { return ParsePattern(text); }

double Log2(double x) { return std::log(x) / std::log(2.0); }

TEST(MeasureId, NamesRoundTrip) {
  for (MeasureId id : AllMeasures()) {
    EXPECT_EQ(ParseMeasureId(MeasureName(id)), id);
  }
  EXPECT_FALSE(ParseMeasureId("ndcg").has_value());
  EXPECT_FALSE(ParseMeasureId("").has_value());
  EXPECT_EQ(TableMeasures().size(), 12);
  EXPECT_EQ(TableMeasures().front(), MeasureId::kF1);
  EXPECT_EQ(TableMeasures().back(), MeasureId::kOlar);
}

TEST(MeasureId, RankedSplit) {
  for (MeasureId id : {MeasureId::kPrecision, MeasureId::kRecall,
                       MeasureId::kF1, MeasureId::kF1Smoothed, MeasureId::kLar}) {
    EXPECT_FALSE(IsRanked(id)) << MeasureName(id);
  }
  int ranked = 0;
  for (MeasureId id : AllMeasures()) ranked += IsRanked(id);
  EXPECT_EQ(ranked, 9);
}

TEST(Smooth, AppendsRelevantSlotWithGoldSetOfTwo) {
  const AugmentedList cw = Smooth(P("cw"));
  EXPECT_EQ(cw.relevant, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(cw.total_relevant, 2);

  const AugmentedList w = Smooth(P("w"));
  EXPECT_EQ(w.relevant, (std::vector<bool>{false, true}));
  EXPECT_EQ(w.total_relevant, 2);

  const AugmentedList c = Smooth(P("c"));
  EXPECT_EQ(c.relevant, (std::vector<bool>{true, true}));
  EXPECT_EQ(c.total_relevant, 2);
}

TEST(Terminalize, TerminalRelevantOnlyWhenAnswered) {
  const AugmentedList cw = Terminalize(P("cw"));
  EXPECT_EQ(cw.relevant, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(cw.total_relevant, 2);

  const AugmentedList w = Terminalize(P("w"));
  EXPECT_EQ(w.relevant, (std::vector<bool>{false, false}));
  EXPECT_EQ(w.total_relevant, 1);

  EXPECT_DOUBLE_EQ(AveragePrecision(Terminalize(P("cw"))), (1.0 + 2.0 / 3) / 2);
  EXPECT_DOUBLE_EQ(AveragePrecision(Terminalize(P("w"))), 0.0);
  EXPECT_DOUBLE_EQ(AveragePrecision(Terminalize(P("c"))), 1.0);
}

TEST(Precision, Examples) {
  EXPECT_DOUBLE_EQ(Precision(P("cww")), 1.0 / 3);
  EXPECT_DOUBLE_EQ(Precision(P("c")), 1.0);
  EXPECT_DOUBLE_EQ(Recall(P("ww")), 0.0);
}

TEST(F1, Examples) {
  EXPECT_DOUBLE_EQ(F1(P("cw")), 2.0 / 3);
  EXPECT_NEAR(F1(P("cwww")), 0.40, kTwoDp);
  EXPECT_DOUBLE_EQ(F1(P("wwwww")), 0.0);
}

TEST(F1Smoothed, Examples) {
  // smoothed "wc": P = 2/3, R = 1
  EXPECT_DOUBLE_EQ(F1Smoothed(P("wc")), 0.8);
  // smoothed "ww": P = 1/3, R = 1/2
  EXPECT_DOUBLE_EQ(F1Smoothed(P("ww")), 0.4);
  EXPECT_NEAR(F1Smoothed(P("wwwww")), 0.25, 1e-15);
  EXPECT_NEAR(F1Smoothed(P("cw")), 0.80, 1e-15);
  EXPECT_NEAR(F1Smoothed(P("w")), 0.50, 1e-15);
  EXPECT_NEAR(F1Smoothed(P("c")), 1.00, 1e-15);
}

TEST(AveragePrecision, Examples) {
  EXPECT_DOUBLE_EQ(AveragePrecision(P("wc")), 0.5);
  EXPECT_DOUBLE_EQ(ApTerminal(P("wc")), 7.0 / 12);
  EXPECT_DOUBLE_EQ(AveragePrecision(Smooth(P("w"))), 0.25);
  EXPECT_DOUBLE_EQ(ApSmoothed(P("wcw")), 0.5);
  EXPECT_DOUBLE_EQ(ApTerminal(P("wwwww")), 0.0);
  EXPECT_DOUBLE_EQ(ApSmoothed(P("wwwww")), 1.0 / 12);
}

TEST(ReciprocalRank, Examples) {
  EXPECT_NEAR(ReciprocalRank(P("wwc")), 0.33, kTwoDp);
  EXPECT_DOUBLE_EQ(ReciprocalRank(P("c")), 1.0);
  EXPECT_DOUBLE_EQ(ReciprocalRank(P("www")), 0.0);
}

TEST(Ndcg, Examples) {
  EXPECT_DOUBLE_EQ(Ndcg(P("wc")), 1.0 / Log2(3));
  EXPECT_NEAR(Ndcg(Terminalize(P("cw"))), (1.0 + 0.5) / (1.0 + 1.0 / Log2(3)),
              1e-15);
  EXPECT_NEAR(Ndcg(P("wwwwc")), 0.39, kTwoDp);
  EXPECT_NEAR(NdcgTerminal(P("wwc")), 0.57, kTwoDp);
  EXPECT_DOUBLE_EQ(NdcgTerminal(P("w")), 0.0);
  EXPECT_NEAR(NdcgTerminal(P("wwwc")), 0.50, kTwoDp);
}

TEST(Rbp, Examples) {
  EXPECT_DOUBLE_EQ(Rbp(P("c"), 0.5), 0.5);
  EXPECT_DOUBLE_EQ(Rbp(P("wc"), 0.5), 0.25);
  EXPECT_DOUBLE_EQ(Rbp(P("wwwwc"), 0.5), 0.03125);
  EXPECT_DOUBLE_EQ(RbpTerminal(P("c"), 0.5), 1.0);
  EXPECT_DOUBLE_EQ(RbpTerminal(P("wcw"), 0.5), 0.375);
  EXPECT_DOUBLE_EQ(RbpTerminal(P("ww"), 0.5), 0.0);
}

TEST(Rbp, RejectsBadPersistence) {
  EXPECT_THROW(Rbp(P("c"), 0.0), ConfigError);
  EXPECT_THROW(Rbp(P("c"), 1.0), ConfigError);
  EXPECT_THROW(RbpTerminal(P("c"), -0.2), ConfigError);
  MeasureConfig cfg;
  cfg.rbp_p = 2.0;
  EXPECT_THROW(Score(MeasureId::kRbp, P("c"), cfg), ConfigError);
}

TEST(Lar, Examples) {
  EXPECT_DOUBLE_EQ(Lar(P("cw")), 0.75);
  EXPECT_DOUBLE_EQ(Lar(P("w")), 0.5);
  EXPECT_DOUBLE_EQ(Lar(P("wwwww")), 0.1);
}

TEST(Olar, Examples) {
  const MeasureConfig cfg;
  EXPECT_NEAR(Olar(P("cw"), cfg), 0.756, kThreeDp);
  EXPECT_NEAR(Olar(P("wc"), cfg), 0.744, kThreeDp);
  EXPECT_NEAR(Olar(P("wwwwc"), cfg), 0.590, kThreeDp);
  // (1 + 1/2 + 0.049/2) / 2.049
  EXPECT_NEAR(Olar(P("wc"), cfg), (1.5 + 0.0245) / 2.049, 1e-15);
  EXPECT_DOUBLE_EQ(Olar(P("c"), cfg), 1.0);
}

TEST(Olar, RejectsListsLongerThanCap) {
  const MeasureConfig cfg;  // max_len 5
  try {
    Olar(P("wwwwwc"), cfg);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("max_len"), std::string::npos);
  }
  MeasureConfig longer;
  longer.max_len = 6;
  EXPECT_NO_THROW(Olar(P("wwwwwc"), longer));
}

TEST(Score, Dispatch) {
  const MeasureConfig cfg;
  EXPECT_NEAR(Score(MeasureId::kOlar, P("c"), cfg), 1.000, kThreeDp);
  EXPECT_NEAR(Score(MeasureId::kF1, P("c"), cfg), 1.00, kTwoDp);
  EXPECT_NEAR(Score(MeasureId::kRbp, P("c"), cfg), 0.50, kTwoDp);
  EXPECT_DOUBLE_EQ(Score(MeasureId::kPrecision, P("wcw"), cfg), 1.0 / 3);
  EXPECT_DOUBLE_EQ(Score(MeasureId::kRecall, P("wcw"), cfg), 1.0);
}

// --- properties over enumerated universes -------------------------------

class MeasurePropertiesTest : public ::testing::TestWithParam<int> {
 protected:
  MeasureConfig Config() const {
    MeasureConfig cfg;
    cfg.max_len = std::max(GetParam(), 2);
    return cfg;
  }
};

TEST_P(MeasurePropertiesTest, EveryScoreInUnitInterval) {
  const MeasureConfig cfg = Config();
  for (const auto& r : EnumeratePatterns(GetParam())) {
    for (MeasureId id : AllMeasures()) {
      const double s = Score(id, r, cfg);
      EXPECT_GE(s, 0.0) << MeasureName(id) << " " << r.str();
      EXPECT_LE(s, 1.0) << MeasureName(id) << " " << r.str();
    }
  }
}

TEST_P(MeasurePropertiesTest, ClosedFormsForSingleAnswer) {
  const double p = 0.5;
  for (const auto& r : EnumeratePatterns(GetParam())) {
    const double rank = r.correct_rank().value_or(0);
    const double has = r.has_correct() ? 1.0 : 0.0;
    EXPECT_DOUBLE_EQ(AveragePrecision(r), ReciprocalRank(r)) << r.str();
    EXPECT_NEAR(Ndcg(r), has ? 1.0 / Log2(rank + 1) : 0.0, 1e-15) << r.str();
    EXPECT_NEAR(Rbp(r, p), has ? (1 - p) * std::pow(p, rank - 1) : 0.0, 1e-15)
        << r.str();
  }
}

TEST_P(MeasurePropertiesTest, LarIgnoresOrder) {
  for (const auto& r : EnumeratePatterns(GetParam())) {
    auto items = r.items();
    std::reverse(items.begin(), items.end());
    EXPECT_DOUBLE_EQ(Lar(r), Lar(ResponsePattern(items))) << r.str();
  }
}

TEST_P(MeasurePropertiesTest, OlarDropsAsAnswerMovesDown) {
  const MeasureConfig cfg = Config();
  for (int len = 2; len <= GetParam(); ++len) {
    double previous = 2.0;
    for (int pos = 0; pos < len; ++pos) {
      std::vector<Outcome> items(len, Outcome::kWrong);
      items[pos] = Outcome::kCorrect;
      const double s = Olar(ResponsePattern(items), cfg);
      EXPECT_LT(s, previous) << "len " << len << " pos " << pos;
      previous = s;
    }
  }
}

TEST_P(MeasurePropertiesTest, ConfidenceTermDominatesPriorityTerm) {
  const MeasureConfig cfg = Config();
  const auto universe = EnumeratePatterns(GetParam());
  for (const auto& a : universe) {
    for (const auto& b : universe) {
      if (a.has_correct() != b.has_correct()) continue;
      const auto wa = CountOutcomes(a, Outcome::kWrong);
      const auto wb = CountOutcomes(b, Outcome::kWrong);
      if (wa < wb) {
        EXPECT_GT(Olar(a, cfg), Olar(b, cfg)) << a.str() << " vs " << b.str();
      }
    }
  }
}

TEST_P(MeasurePropertiesTest, AllWrongClosedForms) {
  const MeasureConfig cfg = Config();
  const double mu = cfg.mu();
  double previous_olar = 2.0;
  double previous_lar = 2.0;
  for (int len = 1; len <= GetParam(); ++len) {
    const ResponsePattern r(std::vector<Outcome>(len, Outcome::kWrong));
    EXPECT_NEAR(Olar(r, cfg), (1.0 / len) / (2 + mu), 1e-15);
    EXPECT_NEAR(Lar(r), 1.0 / (2 * len), 1e-15);
    EXPECT_LT(Olar(r, cfg), previous_olar);
    EXPECT_LT(Lar(r), previous_lar);
    previous_olar = Olar(r, cfg);
    previous_lar = Lar(r);
  }
}

INSTANTIATE_TEST_SUITE_P(Lengths, MeasurePropertiesTest,
                         ::testing::Values(1, 2, 3, 5, 8));

}  // namespace
}  // namespace listeval
