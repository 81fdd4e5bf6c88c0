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

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dexp/graph.hpp"

namespace dexp {

enum class TargetRule { kLargestProtocol, kTopN, kSector, kExplicit };

struct ScenarioSpec {
  std::string name;
  TargetRule rule = TargetRule::kLargestProtocol;
  int top_n = 1;                       // kTopN
  std::string sector;                  // kSector
  std::vector<ProtocolId> targets;     // kExplicit
  double loss_ratio = 0.5;             // initial loss as a fraction of TVL
  double tau = 0.1;                    // distress threshold

  // Throws kInvalidScenario (or kInvalidTau) naming the offending field.
  void validate() const;
};

// Largest protocol at 50%, top-5 at 30%, bridge sector at 100%; tau = 0.1.
std::vector<ScenarioSpec> canonical_scenarios();

struct Shock {
  ProtocolId protocol;
  double delta0 = 0.0;
};

struct ContagionResult {
  std::vector<std::pair<ProtocolId, Usd>> losses;  // node order of the graph
  Usd system_loss_usd = 0.0;
  double system_loss_pct = 0.0;
  int depth = 0;
  int affected_count = 0;
  int distressed_count = 0;
  // rounds[0] = shocked protocols, rounds[r] = protocols first distressed
  // after propagation round r.
  std::vector<std::vector<ProtocolId>> rounds;
};

// Index-based view of an exposure graph for the simulator: for every debtor p
// the creditors q (edges q -> p) with exposure E_qp, sorted by q.
struct ContagionNetwork {
  std::vector<double> tvl;
  std::vector<std::size_t> offsets;  // size n + 1
  std::vector<std::size_t> creditor;
  std::vector<double> exposure;

  std::size_t size() const noexcept { return tvl.size(); }
};

ContagionNetwork make_contagion_network(const ExposureGraph& g);

struct ContagionOutcome {
  std::vector<double> loss;
  std::vector<char> distressed;
  int depth = 0;
  std::vector<std::vector<std::size_t>> rounds;
};

// Synchronous rounds. Shocked nodes start distressed. In each round every
// newly distressed debtor hands its loss (as of the moment it became
// distressed) to its creditors pro rata to exposure; creditor losses are
// capped at TVL. A node whose loss exceeds tau * TVL becomes distressed and
// propagates in the next round, exactly once. Stops when a round distresses
// nobody new. `depth` counts rounds that moved a positive loss.
ContagionOutcome simulate_contagion(const ContagionNetwork& net,
                                    std::span<const std::pair<std::size_t, double>> shocks,
                                    double tau);

ContagionResult run_contagion(const ExposureGraph& g, std::span<const Shock> shocked,
                              double tau);

// Largest TVL ties go to the smallest id.
std::vector<Shock> resolve_scenario(const ExposureGraph& g, const ScenarioSpec& spec);

struct StressComparison {
  double loss_baseline = 0.0;  // system loss % on the current graph
  double loss_model = 0.0;     // on the predicted graph
  double loss_realized = 0.0;  // on the realized graph
  std::vector<Shock> targets;
};

// Restricts all three graphs to the protocols present in both g_t and g_real,
// resolves targets once on the restricted realized graph and reuses them.
StressComparison predictive_stress_compare(const ExposureGraph& g_t,
                                           const ExposureGraph& g_pred,
                                           const ExposureGraph& g_real,
                                           const ScenarioSpec& spec, double tau);

// Scenario wire format: {name, rule, n?, sector?, targets?, delta0, tau}.
ScenarioSpec scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioSpec& s);
nlohmann::json contagion_result_to_json(const ContagionResult& r);

}  // namespace dexp
