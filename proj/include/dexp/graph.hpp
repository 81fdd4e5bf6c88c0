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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dexp/ids.hpp"

namespace dexp {

using Usd = double;

// Holdings of one protocol at one observation time.
struct ProtocolHoldings {
  std::string chain;
  std::string category;
  std::map<TokenId, Usd> holdings;
};

struct HoldingsSnapshot {
  int week = 0;
  std::string observed_at;  // ISO-8601 date
  std::map<ProtocolId, ProtocolHoldings> protocols;

  const ProtocolHoldings* find(const ProtocolId& p) const;
  std::size_t holding_count() const;
  // Throws kInvalidInput on negative or non-finite values.
  void validate() const;
};

// Token -> issuing protocol. Tokens absent from the map have no issuer among
// the graph's protocols.
using IssuerMap = std::unordered_map<TokenId, ProtocolId>;

// Summary of a protocol's token composition at the end of an interval; these
// feed the forecaster's tabular node features.
struct NodeComposition {
  int token_count = 0;
  double top5_share = 0.0;
  double entropy = 0.0;
};

struct Node {
  ProtocolId id;
  std::string category;
  std::string chain;
  Usd weight = 0.0;
  NodeComposition composition;
};

struct EdgeSpec {
  ProtocolId src;
  ProtocolId dst;
  Usd weight = 0.0;
};

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Usd weight = 0.0;
};

struct Interval {
  int t1 = 0;
  int t2 = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Weighted directed exposure graph for one interval. Edge p -> q means p holds
// claims issued by q. Immutable after construction; nodes are sorted by id and
// edges by (src, dst).
class ExposureGraph {
 public:
  ExposureGraph() = default;
  // Validates invariants: finite non-negative node weights, strictly positive
  // edge weights, unique nodes/edges, no self-loops, known endpoints.
  ExposureGraph(Interval interval, std::vector<Node> nodes,
                const std::vector<EdgeSpec>& edges);

  const Interval& interval() const noexcept { return interval_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  std::optional<std::size_t> index_of(const ProtocolId& id) const;
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  bool contains(const ProtocolId& id) const { return index_of(id).has_value(); }

  // Indices into edges() of the outgoing / incoming edges of node i, in
  // ascending order of the opposite endpoint.
  std::span<const std::size_t> out_edges(std::size_t i) const;
  std::span<const std::size_t> in_edges(std::size_t i) const;

  std::optional<Usd> edge_weight(const ProtocolId& src, const ProtocolId& dst) const;
  std::optional<Usd> edge_weight(std::size_t src, std::size_t dst) const;

  Usd total_node_weight() const;
  Usd total_edge_weight() const;
  Usd out_strength(std::size_t i) const;
  Usd in_strength(std::size_t i) const;

  std::vector<EdgeSpec> edge_specs() const;

  // Subgraph induced by the given protocol ids (unknown ids ignored).
  ExposureGraph restrict_to(const std::vector<ProtocolId>& keep) const;

 private:
  void build_adjacency();

  Interval interval_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<ProtocolId, std::size_t> index_;
  std::vector<std::size_t> out_offsets_, out_index_;
  std::vector<std::size_t> in_offsets_, in_index_;
};

// Ordered list of graphs whose intervals chain (t2 of i == t1 of i+1).
class GraphSequence {
 public:
  GraphSequence() = default;
  explicit GraphSequence(std::vector<ExposureGraph> graphs);

  std::span<const ExposureGraph> graphs() const noexcept { return graphs_; }
  std::size_t size() const noexcept { return graphs_.size(); }
  const ExposureGraph& operator[](std::size_t i) const { return graphs_.at(i); }
  // Position of the graph whose interval ends at `week`.
  std::optional<std::size_t> index_of_week(int week) const;

 private:
  std::vector<ExposureGraph> graphs_;
};

// Sum of t2 values of tokens held by p in both snapshots.
Usd compute_node_weight(const ProtocolId& p, const HoldingsSnapshot& snap1,
                        const HoldingsSnapshot& snap2);

// Per-token flow from holding changes of sender p and receiver q. Cases are
// evaluated in order; the first one that applies decides, and the result is
// zero when neither yields a positive amount.
Usd compute_value_flow(Usd delta_p, Usd delta_q);

// Sum of flows over tokens issued by q.
Usd compute_edge_weight(const ProtocolId& p, const ProtocolId& q,
                        const std::map<TokenId, Usd>& token_flows,
                        const IssuerMap& issuer_of);

NodeComposition compute_composition(const ProtocolHoldings& holdings);

// Builds the exposure graph for (snap1.week, snap2.week). Nodes with weight
// below `prune_theta` are dropped before edges are computed, so no edge ever
// touches a pruned node. Only tokens held by p in either snapshot contribute
// to edges leaving p.
ExposureGraph build_exposure_graph(const HoldingsSnapshot& snap1,
                                   const HoldingsSnapshot& snap2,
                                   const IssuerMap& issuer_of, Usd prune_theta);

// One graph per consecutive snapshot pair; intervals are built in parallel.
GraphSequence sequence_from_snapshots(std::span<const HoldingsSnapshot> snaps,
                                      const IssuerMap& issuer_of, Usd prune_theta);

// Serial reference for sequence_from_snapshots.
GraphSequence sequence_from_snapshots_serial(std::span<const HoldingsSnapshot> snaps,
                                             const IssuerMap& issuer_of,
                                             Usd prune_theta);

// Fraction of edges of `prev` that are still present in `next`; 1 when `prev`
// has no edges.
double edge_overlap(const ExposureGraph& prev, const ExposureGraph& next);

}  // namespace dexp
