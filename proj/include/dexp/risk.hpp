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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dexp/graph.hpp"

namespace dexp {

struct PageRankOptions {
  double damping = 0.85;
  int max_iters = 200;
  double tol = 1e-12;
};

// Weighted PageRank; result is indexed like g.nodes(). Mass leaves a node in
// proportion to its outgoing edge weights, dangling mass is spread uniformly.
// Pull-style kernel, parallel over destination nodes.
std::vector<double> pagerank(const ExposureGraph& g, const PageRankOptions& opts = {});

// Serial push-style reference for pagerank().
std::vector<double> pagerank_reference(const ExposureGraph& g,
                                       const PageRankOptions& opts = {});

// Share of p's outgoing exposure carried by its k largest edges; 0 without
// outgoing edges.
double tail_exposure(const ExposureGraph& g, const ProtocolId& p, int k);

struct SisWeights {
  double alpha = 1.0 / 3.0;
  double beta = 1.0 / 3.0;
  double gamma = 1.0 / 3.0;

  // Throws kInvalidConfig unless non-negative and summing to 1 within 1e-12.
  void validate() const;
};

// alpha * minmax(PageRank) + beta * TailExposure + gamma * minmax(log1p TVL).
// Min-max runs over the graph's nodes; constant components map to 0.
std::vector<double> sis(const ExposureGraph& g, const SisWeights& w = {}, int k = 5,
                        const PageRankOptions& pr = {});

struct SpilloverMatrix {
  std::vector<std::string> sectors;  // sorted
  std::vector<double> values;        // row-major K x K, USD

  std::size_t size() const noexcept { return sectors.size(); }
  double at(std::size_t i, std::size_t j) const { return values.at(i * sectors.size() + j); }
  double total() const;
};

// S_ij = total edge weight from sector i protocols to sector j protocols.
SpilloverMatrix spillover_matrix(const ExposureGraph& g,
                                 const std::map<ProtocolId, std::string>& category_of);
// Uses the categories stored on the graph's nodes.
SpilloverMatrix spillover_matrix(const ExposureGraph& g);

// Share-based Herfindahl-Hirschman index.
double hhi(std::span<const double> values);

// HHI of the off-diagonal entries.
double spillover_index(const SpilloverMatrix& s);

// |E| / (n (n - 1)).
double network_density(const ExposureGraph& g);

struct WarningFlag {
  int week = 0;
  bool flagged = false;
  friend bool operator==(const WarningFlag&, const WarningFlag&) = default;
};

// Flags week t when hhi_t - hhi_{t-1} exceeds twice the sample standard
// deviation of the previous `window` first differences. Weeks without a full
// trailing window are never flagged.
std::vector<WarningFlag> early_warning(std::span<const std::pair<int, double>> series,
                                       int window = 26);

struct RiskOptions {
  SisWeights weights;
  int tail_k = 5;
  PageRankOptions pagerank;
};

struct RiskReport {
  int week = 0;
  std::vector<std::pair<ProtocolId, double>> sis;  // node order
  SpilloverMatrix spillover;
  std::optional<double> spillover_index;
  std::optional<double> density;
  std::optional<double> tvl_hhi;
  std::optional<double> edge_hhi;
  std::optional<double> mean_sis;
  // Metric name -> reason, for metrics that are undefined on this graph.
  std::map<std::string, std::string> degenerate;

  // Highest SIS first; ties by protocol id.
  std::vector<std::pair<ProtocolId, double>> top_sis(std::size_t k) const;
};

RiskReport compute_risk_report(const ExposureGraph& g, const RiskOptions& opts = {});

// One report per graph, computed in parallel across weeks.
std::vector<RiskReport> compute_risk_reports(const GraphSequence& seq,
                                             const RiskOptions& opts = {});

nlohmann::json risk_report_to_json(const RiskReport& r, std::size_t top_k = 10);

// Long-format rows "week,metric,value" for every scalar metric.
std::string risk_timeseries_csv(std::span<const RiskReport> reports);

}  // namespace dexp
