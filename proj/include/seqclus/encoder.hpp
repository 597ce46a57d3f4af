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
#include <string>
#include <string_view>
#include <vector>

#include "seqclus/count_matrix.hpp"
#include "seqclus/dataset.hpp"
#include "seqclus/forest.hpp"
#include "seqclus/segmentation.hpp"

namespace seqclus {

/// Encoder variants: single tree or forest, with or without the position
/// feature.
enum class Variant { dt, rf, dt_pos, rf_pos };

Variant parse_variant(std::string_view name);
std::string_view variant_name(Variant v);
bool variant_uses_position(Variant v);
bool variant_is_forest(Variant v);

/// Terminal-node occupancy counts, one row per sequence.
struct SequenceRepresentation {
  CountMatrix counts;
  std::vector<std::string> seq_ids;
  std::size_t window = 0;
  std::size_t trees = 0;
  Variant variant = Variant::rf;
  std::uint64_t seed = 0;
};

/// Sparse binary occupancy of one window row: its terminal id in each tree.
std::vector<std::uint32_t> occupancy_row(const ForestModel& fm, const SegmentedMatrix& sm,
                                         std::size_t r);

/// Aggregates terminal occupancy per source sequence. The dense occupancy
/// matrix is never built; rows are routed and counted one sequence at a
/// time. Throws InputError on arity mismatch.
CountMatrix encode(const ForestModel& fm, const SegmentedMatrix& sm, unsigned threads = 1);

struct EncodeOptions {
  Variant variant = Variant::rf;
  std::size_t window = 0;  // 0: default_window(ds)
  std::size_t trees = 10;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

struct EncodedCorpus {
  ForestModel model;
  SequenceRepresentation representation;
};

/// segment -> train_forest -> encode.
EncodedCorpus encode_corpus(const SequenceDataset& ds, const EncodeOptions& options);

}  // namespace seqclus
