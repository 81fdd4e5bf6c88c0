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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dexp/graph.hpp"
#include "dexp/nn.hpp"

namespace dexp {

using NodePair = std::pair<std::size_t, std::size_t>;

struct ModelDims {
  int embedding_dim = 64;
  std::vector<int> encoder_hidden{128, 64};
  std::vector<int> link_hidden{256, 64};
  std::vector<int> node_hidden{128, 32};
};

struct SplitConfig {
  int train_min = 30;
  int val_len = 8;
  int test_len = 12;
  int step = 4;
};

struct TrainConfig {
  std::vector<int> horizons{1, 4, 8, 12};
  int neg_ratio = 5;
  double w_pos = 5.0;
  double lambda_exist = 2.0;
  double lambda_weight = 0.5;
  double lambda_node = 20.0;
  nn::AdamConfig adam;
  double lr_heads = 5e-4;
  double lr_encoder = 5e-5;
  int epochs = 20;
  int patience = 3;
  bool early_stopping = true;
  double grad_clip_l2 = 1.0;
  double smooth_l1_delta = 1.0;
  std::uint64_t seed = 42;
  ModelDims dims;
  SplitConfig split;

  // Throws kInvalidConfig.
  void validate() const;
  bool has_horizon(int h) const;
};

// ---- features -------------------------------------------------------------

// Sector labels used for the one-hot block; anything unlisted maps to the
// final "other" slot.
std::vector<std::string> default_categories();

inline constexpr int kNumericFeatures = 8;

int feature_dim(std::span<const std::string> categories);

// Raw features, one column per node in graph order: log1p TVL, token count,
// top-5 share, entropy, in-degree, out-degree, log1p in-strength, log1p
// out-strength, then the sector one-hot.
nn::Matrix node_feature_matrix(const ExposureGraph& g, std::span<const std::string> categories);

// Standardizes the numeric block; the one-hot block passes through.
struct FeatureScaler {
  nn::Vector mean;
  nn::Vector scale;

  static FeatureScaler fit(std::span<const nn::Matrix> raw);
  void apply(nn::Matrix& features) const;
};

// ---- building blocks --------------------------------------------------------

// h_p = encoder(x_p), one column per node. Throws kDimensionMismatch when the
// feature matrix does not have one column per node.
nn::Matrix encode_nodes(const ExposureGraph& g, const nn::Matrix& features,
                        const nn::Mlp& encoder);

// [h_p; h_q; h_p * h_q; |h_p - h_q|].
nn::Vector pairwise_features(const nn::Vector& h_p, const nn::Vector& h_q);

struct LinkOutput {
  double prob = 0.5;
  double residual = 0.0;
};

LinkOutput link_head(const nn::Vector& f_pq, const nn::Mlp& head);

inline double reconstruct_edge_logweight(double w_now_log1p, double r) {
  return w_now_log1p + r;
}

// Edge-weighted means of in- and out-neighbour embeddings (zero columns for
// nodes without neighbours in that direction).
std::pair<nn::Matrix, nn::Matrix> neighbor_aggregates(const ExposureGraph& g,
                                                      const nn::Matrix& embeddings);

double node_head(const nn::Vector& h_p, const nn::Vector& h_in, const nn::Vector& h_out,
                 const nn::Mlp& head);

double sigmoid(double z);

// Weighted binary cross-entropy on a probability, clamped to [1e-7, 1 - 1e-7].
double bce_loss(double y_hat, int y, double w_pos);
// Same loss evaluated from a logit without forming the probability.
double bce_with_logits(double z, int y, double w_pos);
double smooth_l1(double r, double delta);
double smooth_l1_grad(double r, double delta);

struct LossBreakdown {
  double exist = 0.0;
  double weight = 0.0;
  double node = 0.0;
  double total = 0.0;
};

double total_loss(double l_exist, double l_weight, double l_node, const TrainConfig& cfg);

// ---- sampling and splits ----------------------------------------------------

struct LabeledPairs {
  std::vector<NodePair> pairs;
  std::vector<int> labels;
  // Set when the complement held fewer non-edges than requested; all of them
  // were used instead.
  bool insufficient_negatives = false;
};

// All positives followed by ratio * |positives| distinct ordered non-edges
// drawn uniformly from node_set x node_set without self-loops.
LabeledPairs negative_sample(std::span<const NodePair> positives,
                             std::span<const std::size_t> node_set, int ratio,
                             std::uint64_t seed);

// Half-open range of graph indices.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
};

struct Fold {
  IndexRange train;
  IndexRange val;
  IndexRange test;
};

// Expanding-window folds; a fold is emitted only when its full validation
// and test windows fit. Throws kInsufficientHistory when none does.
std::vector<Fold> walk_forward_split(std::size_t n_weeks, int train_min, int val_len,
                                     int test_len, int step);

struct ForecastPair {
  std::size_t anchor = 0;
  std::size_t target = 0;
  int horizon = 0;
};

// Pairs whose target lies inside the training window.
std::vector<ForecastPair> training_pairs(const Fold& fold, std::span<const int> horizons);
// Pairs whose target lies inside `window`, anchored h weeks earlier.
std::vector<ForecastPair> window_pairs(const IndexRange& window, std::span<const int> horizons);

// ---- model ------------------------------------------------------------------

struct HorizonHeads {
  nn::Mlp link;
  nn::Mlp node;
};

struct ForecasterParams {
  nn::Mlp encoder;
  std::map<int, HorizonHeads> heads;
};

// Supervision for one (anchor, target) pair, in anchor node indices.
struct TrainingExample {
  int horizon = 0;
  LabeledPairs pairs;
  std::vector<double> weight_now;     // log1p weight at the anchor, 0 if absent
  std::vector<double> weight_target;  // log1p weight at the target, 0 if absent
  std::vector<std::size_t> nodes;     // protocols present at both weeks
  std::vector<double> node_delta;     // log1p TVL change
};

TrainingExample make_example(const ExposureGraph& g_t, const ExposureGraph& g_target,
                             int horizon, int neg_ratio, std::uint64_t seed);

struct EdgeForecast {
  ProtocolId src;
  ProtocolId dst;
  double prob = 0.0;
  double logweight = 0.0;
};

struct ForecastBundle {
  int horizon = 0;
  int origin_week = 0;
  std::vector<EdgeForecast> edges;
  std::vector<std::pair<ProtocolId, double>> node_delta;
};

class Forecaster {
 public:
  Forecaster() = default;
  Forecaster(TrainConfig cfg, std::vector<std::string> categories, FeatureScaler scaler,
             ForecasterParams params);

  static Forecaster initialize(const TrainConfig& cfg, std::vector<std::string> categories,
                               FeatureScaler scaler);

  const TrainConfig& config() const noexcept { return cfg_; }
  const std::vector<std::string>& categories() const noexcept { return categories_; }
  const FeatureScaler& scaler() const noexcept { return scaler_; }
  const ForecasterParams& params() const noexcept { return params_; }
  ForecasterParams& params() noexcept { return params_; }

  nn::Matrix features(const ExposureGraph& g) const;
  nn::Matrix embed(const ExposureGraph& g) const;

  // Scores the candidate pairs (indices into g_t). Throws kUnknownHorizon.
  ForecastBundle predict(const ExposureGraph& g_t, int h,
                         std::span<const NodePair> candidates) const;
  // Existence probabilities only, in candidate order.
  std::vector<double> edge_probabilities(const ExposureGraph& g_t, int h,
                                         std::span<const NodePair> candidates) const;

  // Multi-task loss on one example; accumulates gradients when `grads` is
  // non-null (it must mirror params()).
  LossBreakdown loss(const ExposureGraph& g_t, const TrainingExample& ex,
                     ForecasterParams* grads) const;

  ForecasterParams zero_grads() const;

 private:
  TrainConfig cfg_;
  std::vector<std::string> categories_;
  FeatureScaler scaler_;
  ForecasterParams params_;
};

// Asserts A_{t+h} = A_t: existing edges 1 - 1e-6, other candidates 1e-6,
// log-weights carried over and zero node deltas.
inline constexpr double kPersistenceEps = 1e-6;
ForecastBundle persistence_predict(const ExposureGraph& g_t, int h,
                                   std::span<const NodePair> candidates);

// Predicted graph at t+h: edges with probability above `threshold`, weight
// expm1 of the predicted log-weight; node TVL shifted by the predicted delta.
ExposureGraph materialize_forecast(const ForecastBundle& bundle, const ExposureGraph& g_t,
                                   double threshold = 0.5);

// Existing edges plus `neg_ratio` * |E| sampled non-edges, or every ordered
// pair when `all_pairs` is set.
std::vector<NodePair> candidate_pairs(const ExposureGraph& g_t, int neg_ratio,
                                      std::uint64_t seed, bool all_pairs = false);

// ---- training ---------------------------------------------------------------

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double train_exist = 0.0;
  double train_weight = 0.0;
  double train_node = 0.0;
  double val_auprc = 0.0;
  double grad_norm = 0.0;
};

struct TrainResult {
  Forecaster model;
  std::vector<EpochRecord> history;
  int best_epoch = 0;
  bool stopped_early = false;
  Fold fold;
};

// Trains on `fold`; without a fold the last walk-forward fold from cfg.split
// is used. Throws kInsufficientHistory, kNonFiniteLoss.
TrainResult train(const GraphSequence& seq, const TrainConfig& cfg);
TrainResult train(const GraphSequence& seq, const TrainConfig& cfg, const Fold& fold);

// Validation-style AUPRC of `model` on the given pairs (pooled).
double pooled_auprc(const Forecaster& model, const GraphSequence& seq,
                    std::span<const ForecastPair> pairs, std::uint64_t seed);

// ---- checkpoints ------------------------------------------------------------

nlohmann::json train_config_to_json(const TrainConfig& cfg);
TrainConfig train_config_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const Forecaster& model, std::span<const EpochRecord> history = {});
Forecaster model_from_json(const nlohmann::json& j);

void save_model(const std::string& path, const Forecaster& model,
                std::span<const EpochRecord> history = {});
Forecaster load_model(const std::string& path);

}  // namespace dexp
