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
#include <filesystem>
#include <string>
#include <vector>

#include "dexp/contagion.hpp"
#include "dexp/forecaster.hpp"
#include "dexp/risk.hpp"
#include "dexp/synth.hpp"

namespace dexp {

struct EvaluateOptions {
  bool all_pairs = false;
  double threshold = 0.5;
};

struct PipelineConfig {
  std::filesystem::path data_dir = "data";
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 42;
  double prune_theta = 0.0;
  double similarity_theta = 0.3;
  RiskOptions risk;
  int early_warning_window = 26;
  int top_k = 10;
  std::vector<ScenarioSpec> scenarios = canonical_scenarios();
  TrainConfig train;
  EvaluateOptions evaluate;
  SynthConfig synth;
  std::string serve_host = "127.0.0.1";
  int serve_port = 8080;

  // Copies the global seed into the train and synth sections.
  void apply_seed(std::uint64_t s);
  // Throws kInvalidConfig.
  void validate() const;
};

// Missing keys keep their defaults; unknown keys are rejected so typos
// surface. Throws kInvalidConfig / kParseError / kMissingArtifact.
PipelineConfig parse_pipeline_config(const std::string& toml_text);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
std::string pipeline_config_to_toml(const PipelineConfig& cfg);

}  // namespace dexp
