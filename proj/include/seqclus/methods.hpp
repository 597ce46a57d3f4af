// Copyright 2026 The seqclus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "seqclus/count_matrix.hpp"
#include "seqclus/dataset.hpp"
#include "seqclus/distance.hpp"
#include "seqclus/encoder.hpp"

namespace seqclus {

enum class MethodKind {
  ntreeclus_dt,
  ntreeclus_rf,
  ntreeclus_dt_pos,
  ntreeclus_rf_pos,
  kmer,
  levenshtein,
  jaro_winkler,
};

/// A clustering method: how sequences become a distance matrix.
struct MethodSpec {
  MethodKind kind = MethodKind::ntreeclus_rf;
  /// Window n for nTreeClus, k for k-mers. 0 selects round(sqrt(mean length)).
  std::size_t window = 0;
  std::size_t trees = 10;
  /// Vector metric for nTreeClus and k-mer profiles.
  Metric metric = Metric::cosine;

  /// Stable name such as "ntreeclus-rf", "kmer-k3" or "kmer-ksqrt".
  std::string label() const;
  bool is_ntreeclus() const;
};

/// Accepts ntreeclus-dt|ntreeclus-rf|ntreeclus-dt-pos|ntreeclus-rf-pos|kmer|
/// levenshtein|jaro-winkler.
MethodKind parse_method(std::string_view name);
std::string_view method_name(MethodKind kind);

struct MethodResult {
  DistanceMatrix distances;
  /// Count vectors for vector-based methods (used by the CH index).
  std::optional<CountMatrix> vectors;
  /// Trained model for nTreeClus methods.
  std::optional<ForestModel> model;
  std::size_t window = 0;
};

/// round(sqrt(mean length)), at least 1 and at most the shortest length.
std::size_t sqrt_mean_length(const SequenceDataset& ds);

MethodResult run_method(const SequenceDataset& ds, const MethodSpec& spec, std::uint64_t seed,
                        unsigned threads = 1);

}  // namespace seqclus
