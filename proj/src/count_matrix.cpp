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

#include "seqclus/count_matrix.hpp"

#include <algorithm>
#include <ostream>

#include "seqclus/common.hpp"

namespace seqclus {

void CountMatrix::push_row(std::span<const SparseEntry> entries) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].col >= cols_) throw InputError("count matrix column out of range");
    if (k > 0 && entries[k].col <= entries[k - 1].col)
      throw InputError("count matrix row columns must be strictly increasing");
    if (entries[k].count > 0) entries_.push_back(entries[k]);
  }
  offsets_.push_back(entries_.size());
}

std::uint64_t CountMatrix::row_sum(std::size_t i) const {
  std::uint64_t s = 0;
  for (const auto& e : row(i)) s += e.count;
  return s;
}

std::uint32_t CountMatrix::at(std::size_t i, std::size_t j) const {
  const auto r = row(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return (it != r.end() && it->col == j) ? it->count : 0;
}

std::vector<std::vector<std::uint32_t>> CountMatrix::dense() const {
  std::vector<std::vector<std::uint32_t>> out(rows(), std::vector<std::uint32_t>(cols_, 0));
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : row(i)) out[i][e.col] = e.count;
  return out;
}

void write_sparse_tsv(std::ostream& out, const CountMatrix& m,
                      const std::vector<std::string>& row_ids) {
  out << "seq_id\tentries\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << row_ids.at(i) << '\t';
    bool first = true;
    for (const auto& e : m.row(i)) {
      if (!first) out << ' ';
      out << e.col << ':' << e.count;
      first = false;
    }
    out << '\n';
  }
}

void write_dense_tsv(std::ostream& out, const CountMatrix& m,
                     const std::vector<std::string>& row_ids,
                     const std::vector<std::string>& col_names) {
  out << "seq_id";
  for (std::size_t j = 0; j < m.cols(); ++j) {
    out << '\t';
    if (col_names.empty()) out << j;
    else out << col_names.at(j);
  }
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << row_ids.at(i);
    std::size_t j = 0;
    for (const auto& e : m.row(i)) {
      for (; j < e.col; ++j) out << "\t0";
      out << '\t' << e.count;
      ++j;
    }
    for (; j < m.cols(); ++j) out << "\t0";
    out << '\n';
  }
}

}  // namespace seqclus
