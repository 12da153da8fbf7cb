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

// Rank correlation with ties: Kendall's tau-b and Spearman's rho on
// average (fractional) ranks.

#ifndef LISTEVAL_STATS_H_
#define LISTEVAL_STATS_H_

#include <span>
#include <vector>

namespace listeval {

// Average ranks: tied values share the mean of the positions they occupy.
// With descending = true the largest value gets rank 1.
// Throws DomainError on empty input.
std::vector<double> FractionalRanks(std::span<const double> values,
                                    bool descending);

// Kendall's tau-b, O(n log n) (Knight's merge-sort counting).
// Throws DomainError on length mismatch, n < 2, or when either vector is
// entirely tied.
double KendallTauB(std::span<const double> x, std::span<const double> y);

// Spearman's rho: Pearson correlation of the two fractional-rank vectors,
// evaluated through the tie-corrected sum-of-squared-differences form.
// Throws DomainError on length mismatch, n < 2, or zero rank variance.
double SpearmanRho(std::span<const double> x, std::span<const double> y);

}  // namespace listeval

#endif  // LISTEVAL_STATS_H_
