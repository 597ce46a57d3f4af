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

#include "seqclus/segmentation.hpp"

#include <ostream>
#include <string>

#include "seqclus/common.hpp"

namespace seqclus {

std::vector<std::int32_t> SegmentedMatrix::row(std::size_t r) const {
  std::vector<std::int32_t> out;
  out.reserve(columns.size());
  for (const auto& col : columns) out.push_back(col.at(r));
  return out;
}

namespace {

void check_window(const SequenceDataset& ds, std::size_t n) {
  if (n < 1) throw InputError("window size must be >= 1");
  std::string offenders;
  std::size_t count = 0;
  for (const auto& s : ds.sequences()) {
    if (s.length() <= n) {
      if (count < 20) offenders += (offenders.empty() ? "" : ",") + s.id;
      ++count;
    }
  }
  if (count > 0) {
    if (count > 20) offenders += ",...";
    throw InputError("window size " + std::to_string(n) + " needs sequences longer than " +
                     std::to_string(n) + "; " + std::to_string(count) +
                     " too short: " + offenders);
  }
}

}  // namespace

std::size_t window_count(const SequenceDataset& ds, std::size_t n) {
  check_window(ds, n);
  std::size_t total = 0;
  for (const auto& s : ds.sequences()) total += s.length() - n;
  return total;
}

SegmentedMatrix segment(const SequenceDataset& ds, std::size_t n, bool include_position,
                        unsigned threads) {
  const std::size_t total = window_count(ds, n);
  SegmentedMatrix sm;
  sm.window = n;
  sm.has_position = include_position;
  sm.num_sequences = ds.size();
  sm.num_classes = ds.alphabet().size();
  sm.columns.assign(n + (include_position ? 1 : 0), std::vector<std::int32_t>(total));
  sm.target.resize(total);
  sm.seq_id.resize(total);

  std::vector<std::size_t> offsets(ds.size() + 1, 0);
  for (std::size_t i = 0; i < ds.size(); ++i) offsets[i + 1] = offsets[i] + ds[i].length() - n;

  // Each sequence writes its own row block, so the (i, j) order is fixed.
  parallel_for(ds.size(), threads, [&](std::size_t i) {
    const auto& tokens = ds[i].tokens;
    const std::size_t windows = tokens.size() - n;
    for (std::size_t j = 0; j < windows; ++j) {
      const std::size_t r = offsets[i] + j;
      for (std::size_t c = 0; c < n; ++c)
        sm.columns[c][r] = static_cast<std::int32_t>(tokens[j + c]);
      sm.target[r] = static_cast<std::int32_t>(tokens[j + n]);
      sm.seq_id[r] = static_cast<std::uint32_t>(i);
      if (include_position) sm.columns[n][r] = static_cast<std::int32_t>(j + 1);
    }
  });
  return sm;
}

void write_segments_tsv(std::ostream& out, const SegmentedMatrix& sm, const Alphabet& alphabet) {
  for (std::size_t c = 0; c < sm.window; ++c) out << 'f' << (c + 1) << '\t';
  out << "y_target\tseq_id";
  if (sm.has_position) out << "\tposition";
  out << '\n';
  for (std::size_t r = 0; r < sm.rows(); ++r) {
    for (std::size_t c = 0; c < sm.window; ++c)
      out << alphabet.symbol(static_cast<Token>(sm.columns[c][r])) << '\t';
    out << alphabet.symbol(static_cast<Token>(sm.target[r])) << '\t' << sm.seq_id[r];
    if (sm.has_position) out << '\t' << sm.columns[sm.window][r];
    out << '\n';
  }
}

}  // namespace seqclus
