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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dexp/config.hpp"
#include "dexp/evaluation.hpp"
#include "dexp/forecaster.hpp"
#include "dexp/graph.hpp"
#include "dexp/token_mapper.hpp"

namespace dexp {

// Artifact layout shared by the CLI commands and the service.
struct ArtifactPaths {
  std::filesystem::path data_dir;
  std::filesystem::path out_dir;

  explicit ArtifactPaths(const PipelineConfig& cfg) : data_dir(cfg.data_dir), out_dir(cfg.out_dir) {}

  std::filesystem::path snapshots() const { return data_dir / "snapshots.jsonl"; }
  std::filesystem::path tokens() const { return data_dir / "tokens.jsonl"; }
  std::filesystem::path protocols() const { return data_dir / "protocols.jsonl"; }
  std::filesystem::path manual_map() const { return data_dir / "manual_map.csv"; }
  std::filesystem::path issuer_truth() const { return data_dir / "issuer_truth.csv"; }
  std::filesystem::path synth_stats() const { return data_dir / "synth_stats.json"; }

  std::filesystem::path mapping() const { return out_dir / "mapping.csv"; }
  std::filesystem::path mapping_summary() const { return out_dir / "mapping_summary.json"; }
  std::filesystem::path graphs() const { return out_dir / "graphs"; }
  std::filesystem::path graph_stats() const { return out_dir / "graph_stats.json"; }
  std::filesystem::path risk_dir() const { return out_dir / "risk"; }
  std::filesystem::path risk_report(int week) const {
    return risk_dir() / ("risk_" + std::to_string(week) + ".json");
  }
  std::filesystem::path risk_timeseries() const { return out_dir / "risk_timeseries.csv"; }
  std::filesystem::path early_warning() const { return out_dir / "early_warning.csv"; }
  std::filesystem::path stress_summary() const { return out_dir / "stress_summary.csv"; }
  std::filesystem::path model() const { return out_dir / "model.json"; }
  std::filesystem::path training_history() const { return out_dir / "training_history.csv"; }
  std::filesystem::path forecast_metrics() const { return out_dir / "forecast_metrics.csv"; }
  std::filesystem::path stress_stratified() const { return out_dir / "stress_stratified.csv"; }
  std::filesystem::path stress_compare() const { return out_dir / "stress_compare.csv"; }
  std::filesystem::path calibration() const { return out_dir / "calibration.csv"; }
  std::filesystem::path calibration_json() const { return out_dir / "calibration.json"; }
  std::filesystem::path forecast_dir() const { return out_dir / "forecast"; }
  std::filesystem::path forecast_dashboard() const { return out_dir / "forecast_dashboard.json"; }
};

// Progress sink; empty means silent.
using Logger = std::function<void(const std::string&)>;

// Generates the synthetic corpus into data_dir together with
// synth_stats.json (mean nodes/edges and measured overlap).
void cmd_synth(const PipelineConfig& cfg, const Logger& log = {});

// Maps every token to an issuer and writes mapping.csv plus a provenance
// summary (with accuracy when issuer_truth.csv is present).
MappingTable cmd_map(const PipelineConfig& cfg, const Logger& log = {});

// Builds the weekly graph sequence into out/graphs. Uses mapping.csv when it
// exists, otherwise maps tokens first.
GraphSequence cmd_build(const PipelineConfig& cfg, const Logger& log = {});

// Risk reports per week, the scalar time series and early-warning flags.
void cmd_metrics(const PipelineConfig& cfg, const Logger& log = {});

// One row per (week, scenario) on the observed graphs.
void cmd_stress(const PipelineConfig& cfg, const Logger& log = {});

TrainResult cmd_train(const PipelineConfig& cfg, const Logger& log = {});

// Forecasting table, stratified stress comparison and metric calibration on
// the test window of the last walk-forward fold.
struct EvaluationReport {
  std::vector<Task1Row> task1;
  Task2Result task2;
  StratifiedSummary pooled;  // every horizon together, horizon = 0
  std::vector<CalibrationPoint> calibration;
  Fold fold;
};
EvaluationReport cmd_evaluate(const PipelineConfig& cfg, const Logger& log = {});

// Predicts every configured horizon from the latest observed graph and
// measures risk and stress on the materialized forecasts.
nlohmann::json cmd_forecast_measure(const PipelineConfig& cfg, const Logger& log = {});

// Row of stress_summary.csv.
struct StressRow {
  int week = 0;
  std::string scenario;
  std::optional<ContagionResult> result;
  std::string status;  // "ok" or the reason the scenario could not run
};
std::vector<StressRow> stress_rows(const GraphSequence& seq,
                                   const std::vector<ScenarioSpec>& scenarios);
std::string stress_rows_csv(const std::vector<StressRow>& rows);

// Forecast graph for week t + h from the graph ending at week t.
ExposureGraph forecast_graph(const Forecaster& model, const ExposureGraph& g_t, int h,
                             const PipelineConfig& cfg);

}  // namespace dexp
