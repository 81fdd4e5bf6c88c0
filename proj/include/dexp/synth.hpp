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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dexp/graph.hpp"
#include "dexp/token_mapper.hpp"

namespace dexp {

// Parameters of the synthetic holdings world.
//
// Protocols hold tokens of issuers whose score (sector affinity plus size of
// both sides plus a small fixed pair term) clears a threshold. Between regime
// shifts holdings are sticky and only churn at random; at a shift week the
// configured fraction of off-rule holdings is moved to on-rule issuers.
struct SynthConfig {
  int n_protocols = 100;
  int n_tokens = 300;
  int n_weeks = 60;
  double target_overlap = 0.985;
  // Weekly per-holding replacement probability; calibrated against
  // target_overlap when unset.
  std::optional<double> churn;
  double tvl_log_mean = 17.0;
  double tvl_log_sigma = 1.5;
  int n_sectors = 15;
  double issuer_fraction = 0.4;
  double primary_token_fraction = 0.3;
  double edge_density = 0.08;  // share of holder-issuer pairs selected initially
  double value_volatility = 0.03;
  double sector_drift_sd = 0.02;  // weekly log-size trend shared by a sector
  double drift_sd = 0.01;         // protocol-specific part of the trend
  double size_sensitivity = 1.0;
  double pair_noise = 0.2;
  double treasury_share = 0.1;
  double treasury_growth = 0.002;
  std::vector<int> shift_weeks;
  double rewire_fraction = 0.6;
  double declared_fraction = 0.4;
  double manual_fraction = 0.2;
  std::uint64_t seed = 7;

  // Throws kInvalidConfig.
  void validate() const;
  // Identical snapshots every week: overlap target 1 without shifts or an
  // explicit churn rate.
  bool frozen() const;
};

// Shift weeks every `period` weeks starting at `period`.
std::vector<int> periodic_shifts(int n_weeks, int period);

struct SynthData {
  std::vector<HoldingsSnapshot> snapshots;
  std::vector<TokenMetadata> tokens;
  std::vector<ProtocolMetadata> protocols;
  std::map<TokenId, ProtocolId> manual_map;
  IssuerMap true_issuers;  // issuer tokens only
  double churn = 0.0;
  double measured_overlap = 1.0;
};

SynthData generate_synthetic(const SynthConfig& cfg);

// Writes snapshots.jsonl, tokens.jsonl, protocols.jsonl, manual_map.csv and
// issuer_truth.csv into `dir`.
void write_synthetic(const std::filesystem::path& dir, const SynthData& data);

}  // namespace dexp
