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

#include "seqclus/encoder.hpp"

#include <algorithm>

#include "seqclus/common.hpp"

namespace seqclus {

Variant parse_variant(std::string_view name) {
  if (name == "dt") return Variant::dt;
  if (name == "rf") return Variant::rf;
  if (name == "dt_pos" || name == "dt-pos") return Variant::dt_pos;
  if (name == "rf_pos" || name == "rf-pos") return Variant::rf_pos;
  throw InputError("unknown encoder variant '" + std::string(name) + "'");
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::dt: return "dt";
    case Variant::rf: return "rf";
    case Variant::dt_pos: return "dt_pos";
    case Variant::rf_pos: return "rf_pos";
  }
  return "rf";
}

bool variant_uses_position(Variant v) { return v == Variant::dt_pos || v == Variant::rf_pos; }
bool variant_is_forest(Variant v) { return v == Variant::rf || v == Variant::rf_pos; }

std::vector<std::uint32_t> occupancy_row(const ForestModel& fm, const SegmentedMatrix& sm,
                                         std::size_t r) {
  return fm.route(sm.row(r));
}

CountMatrix encode(const ForestModel& fm, const SegmentedMatrix& sm, unsigned threads) {
  if (sm.num_features() != fm.num_features)
    throw InputError("segmented matrix has " + std::to_string(sm.num_features()) +
                     " features, model expects " + std::to_string(fm.num_features));

  // Rows of one sequence are contiguous; find each sequence's row block.
  std::vector<std::size_t> begin(sm.num_sequences + 1, sm.rows());
  for (std::size_t r = sm.rows(); r-- > 0;) begin[sm.seq_id[r]] = r;
  std::vector<std::size_t> end(sm.num_sequences, 0);
  for (std::size_t r = 0; r < sm.rows(); ++r) end[sm.seq_id[r]] = r + 1;
  for (std::size_t r = 1; r < sm.rows(); ++r)
    if (sm.seq_id[r] < sm.seq_id[r - 1])
      throw InputError("segmented matrix rows are not grouped by sequence");

  std::vector<std::vector<SparseEntry>> rows(sm.num_sequences);
  parallel_for(sm.num_sequences, threads, [&](std::size_t i) {
    if (end[i] == 0) return;
    std::vector<std::uint32_t> terminals;
    terminals.reserve((end[i] - begin[i]) * fm.trees.size());
    std::vector<std::int32_t> feature(sm.num_features());
    for (std::size_t r = begin[i]; r < end[i]; ++r) {
      for (std::size_t c = 0; c < feature.size(); ++c) feature[c] = sm.columns[c][r];
      for (const auto& tree : fm.trees) terminals.push_back(tree.route(feature));
    }
    std::sort(terminals.begin(), terminals.end());
    auto& out = rows[i];
    for (std::size_t k = 0; k < terminals.size();) {
      std::size_t j = k;
      while (j < terminals.size() && terminals[j] == terminals[k]) ++j;
      out.push_back({terminals[k], static_cast<std::uint32_t>(j - k)});
      k = j;
    }
  });

  CountMatrix counts(fm.total_terminals);
  for (const auto& r : rows) counts.push_row(r);
  return counts;
}

EncodedCorpus encode_corpus(const SequenceDataset& ds, const EncodeOptions& options) {
  const std::size_t n = options.window == 0 ? default_window(ds) : options.window;
  const SegmentedMatrix sm = segment(ds, n, variant_uses_position(options.variant), options.threads);
  ForestParams params = variant_is_forest(options.variant)
                            ? ForestParams::forest(options.trees, options.seed)
                            : ForestParams::single_tree(options.seed);
  EncodedCorpus out;
  out.model = train_forest(sm, params, options.threads);
  auto& rep = out.representation;
  rep.counts = encode(out.model, sm, options.threads);
  for (const auto& s : ds.sequences()) rep.seq_ids.push_back(s.id);
  rep.window = n;
  rep.trees = out.model.trees.size();
  rep.variant = options.variant;
  rep.seed = options.seed;
  return out;
}

}  // namespace seqclus
