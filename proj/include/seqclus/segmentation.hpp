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
#include <iosfwd>
#include <span>
#include <vector>

#include "seqclus/dataset.hpp"

namespace seqclus {

/// Sliding-window table. Row r taken from sequence i at 0-based offset j has
/// features tokens[j .. j+n-1], target tokens[j+n], seq_id i and (optionally)
/// position j+1. Storage is column-major.
struct SegmentedMatrix {
  std::size_t window = 0;
  bool has_position = false;
  /// Feature columns: n token columns, then the position column if enabled.
  std::vector<std::vector<std::int32_t>> columns;
  std::vector<std::int32_t> target;
  std::vector<std::uint32_t> seq_id;
  /// Number of source sequences (including any that contributed no rows).
  std::size_t num_sequences = 0;
  /// Number of target classes (alphabet size).
  std::size_t num_classes = 0;

  std::size_t rows() const { return target.size(); }
  std::size_t num_features() const { return columns.size(); }

  /// Feature vector of row r (copy, in column order).
  std::vector<std::int32_t> row(std::size_t r) const;
};

/// Total window rows: sum over sequences of (L_i - n). No allocation.
std::size_t window_count(const SequenceDataset& ds, std::size_t n);

/// Builds the window table in (sequence, offset) order. Throws InputError
/// when n < 1 or when any sequence has length <= n (all offenders listed).
SegmentedMatrix segment(const SequenceDataset& ds, std::size_t n, bool include_position,
                        unsigned threads = 1);

/// TSV with header f1..fn, y_target, seq_id[, position]. Tokens are written
/// as symbols.
void write_segments_tsv(std::ostream& out, const SegmentedMatrix& sm, const Alphabet& alphabet);

}  // namespace seqclus
