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

#include "listeval/pattern.h"

#include <cmath>
#include <tuple>

#include "fmt/format.h"
#include "listeval/errors.h"

namespace listeval {

ResponsePattern::ResponsePattern(std::vector<Outcome> items)
    : items_(std::move(items)) {
  if (items_.empty()) {
    throw ValidationError("response list must not be empty");
  }
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] != Outcome::kCorrect) continue;
    if (correct_rank_.has_value()) {
      throw ValidationError(fmt::format(
          "multiple correct responses (second one at position {})", i + 1));
    }
    correct_rank_ = i + 1;
  }
}

std::string ResponsePattern::str() const {
  std::string out;
  out.reserve(items_.size());
  for (Outcome o : items_) out.push_back(static_cast<char>(o));
  return out;
}

void MeasureConfig::Validate() const {
  if (!(rbp_p > 0.0 && rbp_p < 1.0)) {
    throw ConfigError(fmt::format("rbp_p must lie in (0,1), got {}", rbp_p));
  }
  if (max_len < 2) {
    throw ConfigError(fmt::format("max_len must be >= 2, got {}", max_len));
  }
  if (!(lambda > 0.0)) {
    throw ConfigError(fmt::format("lambda must be positive, got {}", lambda));
  }
  if (mu_override.has_value() && !(*mu_override > 0.0)) {
    throw ConfigError(
        fmt::format("mu override must be positive, got {}", *mu_override));
  }
  mu();  // checks lambda against the smallest inverse-length gap
}

double MeasureConfig::mu() const {
  if (mu_override.has_value()) return *mu_override;
  return DeriveMu(max_len, lambda);
}

ResponsePattern ParsePattern(std::string_view text) {
  if (text.empty()) throw ValidationError("empty response pattern");
  std::vector<Outcome> items;
  items.reserve(text.size());
  bool seen_correct = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'c':
        if (seen_correct) {
          throw ValidationError(fmt::format(
              "pattern '{}': multiple correct responses (second 'c' at "
              "position {})",
              text, i + 1));
        }
        seen_correct = true;
        items.push_back(Outcome::kCorrect);
        break;
      case 'w':
        items.push_back(Outcome::kWrong);
        break;
      default:
        throw ValidationError(
            fmt::format("pattern '{}': invalid character at position {}; "
                        "expected 'c' or 'w'",
                        text, i + 1));
    }
  }
  return ResponsePattern(std::move(items));
}

std::size_t CountOutcomes(const ResponsePattern& r, Outcome outcome) {
  std::size_t n = 0;
  for (Outcome o : r.items()) n += (o == outcome);
  return n;
}

double ReciprocalRankTerm(const ResponsePattern& r) {
  const auto rank = r.correct_rank();
  return rank ? 1.0 / static_cast<double>(*rank) : 0.0;
}

double Rescale(double x, double new_max) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(fmt::format("rescale expects x in [0,1], got {}", x));
  }
  return x * new_max;
}

double Recall(const ResponsePattern& r) { return r.has_correct() ? 1.0 : 0.0; }

double DeriveMu(int max_len, double lambda) {
  if (max_len < 2) {
    throw ConfigError(fmt::format("max_len must be >= 2, got {}", max_len));
  }
  const double len = max_len;
  const double gap = 1.0 / (len - 1.0) - 1.0 / len;
  if (!(lambda > 0.0) || !(lambda < gap)) {
    throw ConfigError(fmt::format(
        "lambda {} must lie in (0, {}) for max_len {}; mu would be "
        "non-positive",
        lambda, gap, max_len));
  }
  return gap - lambda;
}

std::vector<ResponsePattern> EnumeratePatterns(int max_len) {
  if (max_len < 1) {
    throw ConfigError(fmt::format("max_len must be >= 1, got {}", max_len));
  }
  std::vector<ResponsePattern> out;
  out.reserve(static_cast<std::size_t>(max_len * (max_len + 3) / 2));
  for (int len = 1; len <= max_len; ++len) {
    for (int pos = 0; pos < len; ++pos) {
      std::vector<Outcome> items(len, Outcome::kWrong);
      items[pos] = Outcome::kCorrect;
      out.emplace_back(std::move(items));
    }
  }
  for (int len = 1; len <= max_len; ++len) {
    out.emplace_back(std::vector<Outcome>(len, Outcome::kWrong));
  }
  return out;
}

bool CanonicalLess(const ResponsePattern& a, const ResponsePattern& b) {
  auto key = [](const ResponsePattern& r) {
    return std::make_tuple(!r.has_correct(), r.size(),
                           r.correct_rank().value_or(0));
  };
  return key(a) < key(b);
}

}  // namespace listeval
