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
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "dexp/config.hpp"
#include "dexp/forecaster.hpp"
#include "dexp/graph.hpp"

namespace dexp {

struct HttpResponse {
  int status = 200;
  nlohmann::json body;
};

// Read-only JSON API over prepared artifacts. Graphs are required at
// construction; the model and calibration files are optional and their
// absence surfaces as 409 on the endpoints that need them.
//
//   GET  /weeks
//   GET  /graph/{week}/summary
//   GET  /risk/{week}
//   POST /stress        {week, scenario, use: observed|predicted, horizon}
//   GET  /calibration/{horizon}
class ScenarioService {
 public:
  // Throws kMissingArtifact when the graph index is absent.
  explicit ScenarioService(PipelineConfig cfg);

  bool has_model() const noexcept { return model_.has_value(); }
  const GraphSequence& graphs() const noexcept { return seq_; }

  // Routes one request. Never throws; failures map to 4xx/5xx bodies of the
  // form {"error": ..., "code": ...}.
  HttpResponse handle(const std::string& method, const std::string& path,
                      const std::string& body) const;

  HttpResponse weeks() const;
  HttpResponse graph_summary(int week) const;
  HttpResponse risk(int week) const;
  HttpResponse stress(const nlohmann::json& request) const;
  HttpResponse calibration(int horizon) const;

 private:
  const ExposureGraph* find_week(int week) const;
  const ExposureGraph& predicted(const ExposureGraph& g_t, int h) const;

  PipelineConfig cfg_;
  GraphSequence seq_;
  std::optional<Forecaster> model_;
  std::optional<nlohmann::json> calibration_;

  // In-memory read cache; entries are immutable once inserted.
  mutable std::mutex mu_;
  mutable std::map<int, nlohmann::json> risk_cache_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const ExposureGraph>> forecast_cache_;
};

// Blocking HTTP front end for a ScenarioService.
class HttpServer {
 public:
  explicit HttpServer(const ScenarioService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds host:port (port 0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port);
  // Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dexp
