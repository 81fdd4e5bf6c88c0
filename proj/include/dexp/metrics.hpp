// Copyright 2026 The dexp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <utility>

namespace dexp {

struct ScoredLabel {
  double score = 0.0;
  int label = 0;  // 1 positive, 0 negative
};

// Probability that a random positive outscores a random negative, ties
// counted as 1/2. Throws kDegenerateLabels without both classes.
double auroc(std::span<const ScoredLabel> scores);

// Step-wise area under the precision-recall curve over descending score
// thresholds, tied scores forming a single threshold. Throws kNoPositives.
double auprc(std::span<const ScoredLabel> scores);

struct ErrorStats {
  double mae = 0.0;
  double rmse = 0.0;
};

// pairs are (prediction, truth); throws kEmpty on empty input.
ErrorStats mae_rmse(std::span<const std::pair<double, double>> pairs);

// Pearson correlation; NaN when either side has zero variance or n < 2.
double pearson(std::span<const std::pair<double, double>> xy);

}  // namespace dexp
