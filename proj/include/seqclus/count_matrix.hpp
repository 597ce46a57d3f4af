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
#include <string>
#include <vector>

namespace seqclus {

struct SparseEntry {
  std::uint32_t col = 0;
  std::uint32_t count = 0;
  bool operator==(const SparseEntry&) const = default;
};

/// Rows of non-negative integer counts in CSR layout, columns sorted within
/// each row, zeros never stored.
class CountMatrix {
 public:
  CountMatrix() = default;
  explicit CountMatrix(std::size_t cols) : cols_(cols) {}

  /// Appends a row. Entries must have strictly increasing columns < cols().
  void push_row(std::span<const SparseEntry> entries);

  std::size_t rows() const { return offsets_.size() - 1; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  std::span<const SparseEntry> row(std::size_t i) const {
    return {entries_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::uint64_t row_sum(std::size_t i) const;
  std::uint32_t at(std::size_t i, std::size_t j) const;

  /// Row-major dense copy.
  std::vector<std::vector<std::uint32_t>> dense() const;

  bool operator==(const CountMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<SparseEntry> entries_;
};

/// `id<TAB>col:count col:count ...`, one line per row, preceded by a header.
void write_sparse_tsv(std::ostream& out, const CountMatrix& m,
                      const std::vector<std::string>& row_ids);

/// Full matrix: header `seq_id<TAB>0<TAB>1...` (or the given column names).
void write_dense_tsv(std::ostream& out, const CountMatrix& m,
                     const std::vector<std::string>& row_ids,
                     const std::vector<std::string>& col_names = {});

}  // namespace seqclus
