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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dexp/graph.hpp"
#include "dexp/ids.hpp"

namespace dexp {

struct TokenMetadata {
  TokenId token_id;
  std::optional<ProtocolId> declared_issuer;
  std::string symbol;
  std::string description;
};

enum class Provenance { kMetadata, kManual, kTfidf, kSelf };

std::string_view provenance_name(Provenance p) noexcept;
Provenance provenance_from_name(std::string_view name);

struct MappingEntry {
  ProtocolId protocol;
  Provenance provenance = Provenance::kSelf;
  double similarity = 0.0;  // best cosine score; only meaningful for kTfidf
};

struct MappingTable {
  std::map<TokenId, MappingEntry> entries;
  double similarity_theta = 0.3;

  IssuerMap issuer_map() const;
};

// Sparse vector as (term index, weight) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, double>>;

struct TfidfModel {
  std::map<std::string, std::size_t> vocabulary;
  std::vector<double> idf;
  std::map<ProtocolId, SparseVector> document_vectors;

  // L2-normalized tf-idf vector of arbitrary text under this model's
  // vocabulary and idf weights; terms outside the vocabulary are ignored.
  SparseVector vectorize(std::string_view text) const;
};

// Lowercase, split on non-alphanumerics, drop terms shorter than 2 chars.
std::vector<std::string> tokenize(std::string_view text);

// tf = count / length, idf = ln(N / (1 + df)) + 1, vectors L2-normalized.
// Protocols whose description has no terms get no document vector.
TfidfModel build_tfidf(const std::map<ProtocolId, std::string>& protocol_descriptions);

double cosine_similarity(const SparseVector& a, const SparseVector& b);

ProtocolId self_protocol_id(const TokenId& token);

// Four-stage fallback: declared issuer, manual table, best tf-idf match with
// similarity >= theta (ties -> smallest protocol id), else the token itself.
MappingEntry map_token(const TokenMetadata& meta, const std::map<TokenId, ProtocolId>& manual,
                       const TfidfModel& model, double theta);

MappingTable map_tokens(const std::vector<TokenMetadata>& tokens,
                        const std::map<TokenId, ProtocolId>& manual,
                        const TfidfModel& model, double theta);

// Token metadata JSON Lines: {token_id, issuer?, symbol, description}.
std::vector<TokenMetadata> read_token_metadata(const std::filesystem::path& path);
void write_token_metadata(const std::filesystem::path& path,
                          const std::vector<TokenMetadata>& tokens);

// Manual map CSV: token_id,protocol_id (header line optional).
std::map<TokenId, ProtocolId> read_manual_map(const std::filesystem::path& path);
void write_manual_map(const std::filesystem::path& path,
                      const std::map<TokenId, ProtocolId>& manual);

// Mapping CSV: token_id,protocol_id,provenance,similarity.
void write_mapping_csv(const std::filesystem::path& path, const MappingTable& table);
MappingTable read_mapping_csv(const std::filesystem::path& path);

struct ProtocolMetadata {
  ProtocolId id;
  std::string category;
  std::string chain;
  std::string description;
};

// Protocol metadata JSON Lines: {protocol_id, category, chain, description}.
std::vector<ProtocolMetadata> read_protocol_metadata(const std::filesystem::path& path);
void write_protocol_metadata(const std::filesystem::path& path,
                             const std::vector<ProtocolMetadata>& protocols);

}  // namespace dexp
