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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dexp/contagion.hpp"
#include "dexp/forecaster.hpp"
#include "dexp/metrics.hpp"
#include "dexp/risk.hpp"

namespace dexp {

// Anything that maps (g_t, h, candidates) to a forecast: the trained model or
// the persistence baseline.
using Predictor =
    std::function<ForecastBundle(const ExposureGraph&, int, std::span<const NodePair>)>;

Predictor model_predictor(const Forecaster& model);
Predictor persistence_predictor();

// One row of the multi-horizon forecasting table.
struct Task1Row {
  std::string model;
  int horizon = 0;
  double auroc = 0.0;
  double auprc = 0.0;
  double mae_weight = 0.0;
  double rmse_weight = 0.0;
  double mae_node = 0.0;
  double rmse_node = 0.0;
  std::size_t n_pairs = 0;
  std::size_t n_positive = 0;
};

// Pools every (anchor, target) pair of one horizon. Candidates are the
// target's edges among protocols present at both weeks plus neg_ratio seeded
// negatives per positive, the seed derived from (seed, t, h).
std::vector<Task1Row> evaluate_task1(const Predictor& predictor, const std::string& name,
                                     const GraphSequence& seq,
                                     std::span<const ForecastPair> pairs,
                                     std::span<const int> horizons, int neg_ratio,
                                     std::uint64_t seed);

struct StressRecord {
  int origin_week = 0;
  int target_week = 0;
  int horizon = 0;
  std::string scenario;
  double loss_baseline = 0.0;
  double loss_model = 0.0;
  double loss_realized = 0.0;
};

struct StratifiedSummary {
  int horizon = 0;
  std::size_t n = 0;
  std::size_t n_worst = 0;
  double delta_mae_all = 0.0;
  double delta_mae_worst20 = 0.0;
  double win_rate_worst20 = 0.0;
};

// Worst-20% statistics from already computed records of one horizon. The
// worst set holds ceil(0.2 N) records ranked only by baseline error; a win
// needs a strictly smaller model error.
StratifiedSummary summarize_stress(std::span<const StressRecord> records, int horizon);

struct Task2Options {
  int neg_ratio = 5;
  bool all_pairs = false;
  double threshold = 0.5;
  std::uint64_t seed = 42;
};

struct Task2Result {
  std::vector<StressRecord> records;
  std::vector<StratifiedSummary> summaries;
  // (origin week, horizon, scenario) combinations skipped because the
  // scenario selected nothing on the common protocol set.
  std::vector<std::string> skipped;
};

Task2Result evaluate_task2(const Predictor& predictor, const GraphSequence& seq,
                           std::span<const ForecastPair> pairs,
                           std::span<const ScenarioSpec> scenarios,
                           std::span<const int> horizons, const Task2Options& opts = {});

struct CalibrationPoint {
  int origin_week = 0;
  int horizon = 0;
  std::string metric;
  std::optional<double> predicted;
  std::optional<double> realized;
  std::string status;  // "ok" or why a side is missing
};

inline const std::vector<std::string>& calibration_metrics() {
  static const std::vector<std::string> names{"density", "tvl_hhi", "edge_hhi",
                                              "spillover_index", "mean_sis"};
  return names;
}

std::vector<CalibrationPoint> risk_metric_calibration(std::span<const ExposureGraph> predicted,
                                                      std::span<const ExposureGraph> realized,
                                                      std::span<const int> origin_weeks,
                                                      int horizon, const RiskOptions& opts = {});

struct CalibrationSummary {
  std::string metric;
  int horizon = 0;
  std::size_t n = 0;
  double pearson = 0.0;
  double mae = 0.0;
};

std::vector<CalibrationSummary> summarize_calibration(std::span<const CalibrationPoint> points);

std::string task1_csv(std::span<const Task1Row> rows);
std::string task2_csv(std::span<const StratifiedSummary> rows);
std::string stress_records_csv(std::span<const StressRecord> rows);
std::string calibration_csv(std::span<const CalibrationPoint> points);

}  // namespace dexp
