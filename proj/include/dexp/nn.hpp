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
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace dexp::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct DenseLayer {
  Matrix weight;  // out x in
  Vector bias;    // out
};

// Fully connected network, ReLU on hidden layers, linear output. Batches are
// column-major: one sample per column.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<DenseLayer> layers);

  // He-uniform weights, zero biases. dims = {in, hidden..., out}.
  static Mlp random(std::span<const int> dims, std::mt19937_64& rng);
  static Mlp zeros(std::span<const int> dims);

  int input_dim() const;
  int output_dim() const;
  std::vector<int> dims() const;
  std::vector<DenseLayer>& layers() noexcept { return layers_; }
  const std::vector<DenseLayer>& layers() const noexcept { return layers_; }
  std::size_t parameter_count() const;

  // Per-layer inputs and pre-activations retained for backward().
  struct Tape {
    std::vector<Matrix> inputs;
    std::vector<Matrix> pre;
  };

  Matrix forward(const Matrix& x) const;
  Matrix forward(const Matrix& x, Tape& tape) const;

  // Accumulates parameter gradients into `grads` (same shapes as this) and
  // returns the gradient with respect to the input batch.
  Matrix backward(const Tape& tape, const Matrix& grad_out, Mlp& grads) const;

 private:
  std::vector<DenseLayer> layers_;
};

// Flat view of one parameter tensor.
struct ParamRef {
  double* data = nullptr;
  std::size_t size = 0;
  double lr = 0.0;
  std::string name;
};

// Weight and bias tensors of an MLP, in layer order.
std::vector<ParamRef> param_refs(Mlp& mlp, double lr, const std::string& prefix);

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  std::int64_t step = 0;
  std::vector<Vector> m;
  std::vector<Vector> v;
};

// One bias-corrected Adam update; each tensor uses its own learning rate.
// Throws kShapeMismatch when params/grads/state disagree.
void adam_step(std::span<const ParamRef> params, std::span<const ParamRef> grads,
               AdamState& state, const AdamConfig& cfg);

double global_norm(std::span<const ParamRef> grads);

// Rescales so the global L2 norm is at most max_norm; returns the norm before
// clipping.
double clip_global_norm(std::span<const ParamRef> grads, double max_norm);

}  // namespace dexp::nn
