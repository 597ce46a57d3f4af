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
#include <span>
#include <string>
#include <vector>

#include "seqclus/segmentation.hpp"

namespace seqclus {

enum class ForestMode { single_tree, forest };

struct ForestParams {
  std::size_t trees = 10;
  ForestMode mode = ForestMode::forest;
  /// Features tried per split; 0 selects ceil(sqrt(features)) in forest mode
  /// and all features in single-tree mode.
  std::size_t mtry = 0;
  bool bootstrap = true;
  std::size_t min_leaf = 1;
  /// 0 means unlimited depth.
  std::size_t max_depth = 0;
  std::uint64_t seed = 42;

  static ForestParams single_tree(std::uint64_t seed = 42);
  static ForestParams forest(std::size_t trees = 10, std::uint64_t seed = 42);

  /// Copy with defaults filled in for `num_features` columns. Single-tree
  /// mode forces one tree, no bootstrap and all features. Throws InputError
  /// on inconsistent values.
  ForestParams resolved(std::size_t num_features) const;

  bool operator==(const ForestParams&) const = default;
};

/// Rows whose feature value is <= threshold go left.
struct SplitRule {
  std::size_t feature = 0;
  double threshold = 0.0;

  bool operator==(const SplitRule&) const = default;
};

/// 1 - sum p_k^2. Throws InputError on an empty histogram.
double gini(std::span<const std::uint32_t> histogram);

/// Best Gini split of the node made of `rows` (indices into the columns,
/// repeats allowed) among the `features` columns. Thresholds are midpoints
/// between adjacent observed values. Ties go to the lower feature index,
/// then the lower threshold. Returns nullopt when no split with both sides
/// holding at least `min_leaf` rows strictly reduces impurity.
std::optional<SplitRule> best_split(const std::vector<std::vector<std::int32_t>>& columns,
                                    std::span<const std::int32_t> target,
                                    std::span<const std::uint32_t> rows,
                                    std::span<const std::size_t> features,
                                    std::size_t num_classes, std::size_t min_leaf = 1);

struct TreeNode {
  /// -1 for leaves.
  std::int32_t feature = -1;
  double threshold = 0.0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  /// Global terminal id (leaves only).
  std::uint32_t terminal = 0;
  /// In-bag rows that reached this node.
  std::uint32_t samples = 0;
  /// Leaf class histogram as a range into TreeModel::histogram.
  std::uint32_t hist_begin = 0;
  std::uint32_t hist_end = 0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct ClassCount {
  std::uint32_t cls = 0;
  std::uint32_t count = 0;
  bool operator==(const ClassCount&) const = default;
};

class TreeModel {
 public:
  std::vector<TreeNode> nodes;
  /// Sparse per-leaf class histograms (nonzero classes only).
  std::vector<ClassCount> histogram;
  std::uint32_t first_terminal = 0;
  std::uint32_t num_leaves = 0;

  /// Node index of the leaf reached by `row`.
  std::uint32_t leaf_of(std::span<const std::int32_t> row) const;
  std::uint32_t route(std::span<const std::int32_t> row) const {
    return nodes[leaf_of(row)].terminal;
  }
  std::size_t depth() const;

  bool operator==(const TreeModel&) const = default;
};

class ForestModel {
 public:
  ForestParams params;
  std::size_t num_features = 0;
  std::size_t num_classes = 0;
  std::vector<TreeModel> trees;
  std::size_t total_terminals = 0;

  /// One terminal id per tree. Throws InputError on arity mismatch.
  std::vector<std::uint32_t> route(std::span<const std::int32_t> row) const;

  std::string to_json() const;
  static ForestModel from_json(const std::string& text);

  bool operator==(const ForestModel&) const = default;
};

/// Grows the ensemble. Tree k draws its bootstrap sample and per-split
/// feature subsets from Rng(derive_seed(seed, {k})), so the result does not
/// depend on `threads`.
ForestModel train_forest(const SegmentedMatrix& sm, const ForestParams& params,
                         unsigned threads = 1);

}  // namespace seqclus
