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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dexp/graph.hpp"

namespace dexp {

// Rounds to 6 decimal places; every serialized USD amount goes through this so
// artifacts are byte-stable.
double round6(double v);

// Snapshot JSON Lines: one record per (week, protocol) with fields week, date,
// protocol_id, chain, category, holdings:[{token_id, usd_value}].
std::vector<HoldingsSnapshot> read_snapshots_jsonl(const std::filesystem::path& path);
void write_snapshots_jsonl(const std::filesystem::path& path,
                           const std::vector<HoldingsSnapshot>& snaps);

nlohmann::json graph_to_json(const ExposureGraph& g);
ExposureGraph graph_from_json(const nlohmann::json& j);

void write_graph(const std::filesystem::path& path, const ExposureGraph& g);
ExposureGraph read_graph(const std::filesystem::path& path);

// A built sequence on disk: <dir>/graph_<t2>.json plus <dir>/index.json.
void write_sequence(const std::filesystem::path& dir, const GraphSequence& seq);
GraphSequence read_sequence(const std::filesystem::path& dir);

// Writes text only when the content differs, so reruns leave mtimes alone.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dexp
