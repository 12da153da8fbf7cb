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
#include <array>
#include <cmath>
#include <utility>

#include "fmt/format.h"
#include "listeval/errors.h"

namespace listeval {
namespace {

struct MeasureInfo {
  MeasureId id;
  std::string_view name;
  bool ranked;
};

constexpr std::array<MeasureInfo, 14> kMeasureInfo = {{
    {MeasureId::kPrecision, "Precision", false},
    {MeasureId::kRecall, "Recall", false},
    {MeasureId::kF1, "F1", false},
    {MeasureId::kF1Smoothed, "F1s", false},
    {MeasureId::kLar, "LAR", false},
    {MeasureId::kAp, "AP", true},
    {MeasureId::kApTerminal, "APL", true},
    {MeasureId::kApSmoothed, "APs", true},
    {MeasureId::kRr, "RR", true},
    {MeasureId::kNdcg, "nDCG", true},
    {MeasureId::kNdcgTerminal, "nDCGL", true},
    {MeasureId::kRbp, "RBP", true},
    {MeasureId::kRbpTerminal, "RBPL", true},
    {MeasureId::kOlar, "OLAR", true},
}};

constexpr std::array<MeasureId, 14> kAllMeasures = {
    MeasureId::kPrecision,    MeasureId::kRecall,      MeasureId::kF1,
    MeasureId::kF1Smoothed,   MeasureId::kLar,         MeasureId::kAp,
    MeasureId::kApTerminal,   MeasureId::kApSmoothed,  MeasureId::kRr,
    MeasureId::kNdcg,         MeasureId::kNdcgTerminal, MeasureId::kRbp,
    MeasureId::kRbpTerminal,  MeasureId::kOlar,
};

const MeasureInfo& Info(MeasureId id) {
  for (const auto& info : kMeasureInfo) {
    if (info.id == id) return info;
  }
  throw ValidationError("unknown measure id");
}

AugmentedList Bare(const ResponsePattern& r) {
  AugmentedList a;
  a.relevant.reserve(r.size() + 1);
  for (Outcome o : r.items()) a.relevant.push_back(o == Outcome::kCorrect);
  a.total_relevant = 1;
  return a;
}

void CheckPersistence(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError(fmt::format("RBP persistence must lie in (0,1), got {}", p));
  }
}

double HarmonicMean(double precision, double recall) {
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace

std::string_view MeasureName(MeasureId id) { return Info(id).name; }

std::optional<MeasureId> ParseMeasureId(std::string_view name) {
  for (const auto& info : kMeasureInfo) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

bool IsRanked(MeasureId id) { return Info(id).ranked; }

std::span<const MeasureId> TableMeasures() {
  return std::span<const MeasureId>(kAllMeasures).subspan(2);
}

std::span<const MeasureId> AllMeasures() { return kAllMeasures; }

int AugmentedList::retrieved_relevant() const {
  return static_cast<int>(std::count(relevant.begin(), relevant.end(), true));
}

AugmentedList Smooth(const ResponsePattern& r) {
  AugmentedList a = Bare(r);
  a.relevant.push_back(true);
  a.total_relevant = 2;
  return a;
}

AugmentedList Terminalize(const ResponsePattern& r) {
  AugmentedList a = Bare(r);
  a.relevant.push_back(r.has_correct());
  a.total_relevant = r.has_correct() ? 2 : 1;
  return a;
}

double Precision(const ResponsePattern& r) {
  return static_cast<double>(CountOutcomes(r, Outcome::kCorrect)) /
         static_cast<double>(r.size());
}

double F1(const ResponsePattern& r) {
  return HarmonicMean(Precision(r), Recall(r));
}

double F1Smoothed(const ResponsePattern& r) {
  const AugmentedList a = Smooth(r);
  const double hits = a.retrieved_relevant();
  return HarmonicMean(hits / static_cast<double>(a.relevant.size()),
                      hits / a.total_relevant);
}

double AveragePrecision(const AugmentedList& a) {
  double sum = 0.0;
  int hits = 0;
  for (std::size_t i = 0; i < a.relevant.size(); ++i) {
    if (!a.relevant[i]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / a.total_relevant;
}

double AveragePrecision(const ResponsePattern& r) {
  return AveragePrecision(Bare(r));
}

double ApTerminal(const ResponsePattern& r) {
  return AveragePrecision(Terminalize(r));
}

double ApSmoothed(const ResponsePattern& r) {
  return AveragePrecision(Smooth(r));
}

double ReciprocalRank(const ResponsePattern& r) {
  return ReciprocalRankTerm(r);
}

double Ndcg(const AugmentedList& a) {
  auto discount = [](std::size_t rank) {
    return 1.0 / std::log2(static_cast<double>(rank) + 1.0);
  };
  double dcg = 0.0;
  for (std::size_t i = 0; i < a.relevant.size(); ++i) {
    if (a.relevant[i]) dcg += discount(i + 1);
  }
  double ideal = 0.0;
  for (int i = 0; i < a.total_relevant; ++i) ideal += discount(i + 1);
  return dcg / ideal;
}

double Ndcg(const ResponsePattern& r) { return Ndcg(Bare(r)); }

double NdcgTerminal(const ResponsePattern& r) { return Ndcg(Terminalize(r)); }

double Rbp(const ResponsePattern& r, double p) {
  CheckPersistence(p);
  double sum = 0.0;
  double weight = 1.0;
  for (Outcome o : r.items()) {
    if (o == Outcome::kCorrect) sum += weight;
    weight *= p;
  }
  return (1.0 - p) * sum;
}

double RbpTerminal(const ResponsePattern& r, double p) {
  const double base = Rbp(r, p);
  if (!r.has_correct()) return base;
  return base + std::pow(p, static_cast<double>(r.size()));
}

double Lar(const ResponsePattern& r) {
  return (Recall(r) + 1.0 / static_cast<double>(r.size())) / 2.0;
}

double Olar(const ResponsePattern& r, const MeasureConfig& cfg) {
  if (r.size() > static_cast<std::size_t>(cfg.max_len)) {
    throw ConfigError(fmt::format(
        "OLAR: list '{}' has length {} but max_len is {}; raise max_len so "
        "the priority cap accounts for this length",
        r.str(), r.size(), cfg.max_len));
  }
  const double mu = cfg.mu();
  return (Recall(r) + 1.0 / static_cast<double>(r.size()) +
          Rescale(ReciprocalRankTerm(r), mu)) /
         (2.0 + mu);
}

double Score(MeasureId id, const ResponsePattern& r, const MeasureConfig& cfg) {
  switch (id) {
    case MeasureId::kPrecision:
      return Precision(r);
    case MeasureId::kRecall:
      return Recall(r);
    case MeasureId::kF1:
      return F1(r);
    case MeasureId::kF1Smoothed:
      return F1Smoothed(r);
    case MeasureId::kLar:
      return Lar(r);
    case MeasureId::kAp:
      return AveragePrecision(r);
    case MeasureId::kApTerminal:
      return ApTerminal(r);
    case MeasureId::kApSmoothed:
      return ApSmoothed(r);
    case MeasureId::kRr:
      return ReciprocalRank(r);
    case MeasureId::kNdcg:
      return Ndcg(r);
    case MeasureId::kNdcgTerminal:
      return NdcgTerminal(r);
    case MeasureId::kRbp:
      return Rbp(r, cfg.rbp_p);
    case MeasureId::kRbpTerminal:
      return RbpTerminal(r, cfg.rbp_p);
    case MeasureId::kOlar:
      return Olar(r, cfg);
  }
  throw ValidationError("unknown measure id");
}

}  // namespace listeval
