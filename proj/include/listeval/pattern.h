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

// Response lists abstracted to correct/wrong outcomes, and the helper
// functions every measure and axiom is written in terms of.

#ifndef LISTEVAL_PATTERN_H_
#define LISTEVAL_PATTERN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace listeval {

enum class Outcome : char { kCorrect = 'c', kWrong = 'w' };

// A non-empty response list containing at most one correct response.
// Ranks are 1-based in the public interface.
class ResponsePattern {
 public:
  // Throws ValidationError if `items` is empty or holds more than one
  // kCorrect.
  explicit ResponsePattern(std::vector<Outcome> items);

  std::size_t size() const { return items_.size(); }
  const std::vector<Outcome>& items() const { return items_; }
  Outcome at_rank(std::size_t rank) const { return items_.at(rank - 1); }

  // 1-based rank of the correct response, if the list has one.
  std::optional<std::size_t> correct_rank() const { return correct_rank_; }
  bool has_correct() const { return correct_rank_.has_value(); }

  // "c"/"w" text form, e.g. "wcw".
  std::string str() const;

  friend bool operator==(const ResponsePattern&,
                         const ResponsePattern&) = default;

 private:
  std::vector<Outcome> items_;
  std::optional<std::size_t> correct_rank_;
};

// Knobs left open by the measures and axioms. Defaults reproduce the
// published comparison table.
struct MeasureConfig {
  double rbp_p = 0.5;
  double lambda = 0.001;
  int max_len = 5;
  bool priority_strict = true;
  // Replaces the length-derived OLAR cap when set. Only meant for
  // demonstrating what goes wrong with a cap that is too large.
  std::optional<double> mu_override;

  // Throws ConfigError when a field is out of range.
  void Validate() const;
  // The OLAR priority cap in effect for this configuration.
  double mu() const;
};

// Parses "c"/"w" text. Throws ValidationError naming the offending
// (1-based) position on bad characters or a second 'c'.
ResponsePattern ParsePattern(std::string_view text);

// Number of items equal to `outcome` (#_s in the axioms).
std::size_t CountOutcomes(const ResponsePattern& r, Outcome outcome);

// 1/rank of the correct response, 0 when there is none.
double ReciprocalRankTerm(const ResponsePattern& r);

// Maps x in [0,1] onto [0,new_max]. Throws DomainError for x outside [0,1].
double Rescale(double x, double new_max);

// 1 if the list holds the (single) relevant item, else 0.
double Recall(const ResponsePattern& r);

// Cap for the OLAR priority term: the smallest gap between two inverse
// lengths up to max_len, minus the safety margin lambda.
// Throws ConfigError if the result would not be positive.
double DeriveMu(int max_len, double lambda);

// Every pattern of length 1..max_len with at most one correct item.
// Order: lists containing a correct item first (by length, then by
// correct position), followed by the all-wrong lists by length.
std::vector<ResponsePattern> EnumeratePatterns(int max_len);

// Position of `r` in EnumeratePatterns order for any max_len >= r.size().
// Used to sort reports deterministically.
bool CanonicalLess(const ResponsePattern& a, const ResponsePattern& b);

}  // namespace listeval

#endif  // LISTEVAL_PATTERN_H_
