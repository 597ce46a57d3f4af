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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqclus/count_matrix.hpp"
#include "seqclus/distance.hpp"

namespace seqclus {

/// One agglomeration step. Node ids follow the usual linkage convention:
/// leaves are 0..N-1 and merge m creates node N+m.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::size_t size = 0;

  bool operator==(const Merge&) const = default;
};

struct Dendrogram {
  std::size_t leaves = 0;
  std::vector<Merge> merges;
  std::vector<std::string> labels;
};

/// Ward linkage by the Lance-Williams recurrence applied directly to the
/// given dissimilarities (they play the role of squared Euclidean
/// distances). At each step the cheapest merge is taken; candidates within
/// a relative 1e-10 of the minimum count as tied and the pair with the
/// smallest (min member of A, min member of B) wins. Throws InputError on
/// non-finite entries or order < 2.
Dendrogram ward_linkage(const DistanceMatrix& dm);

struct ClusterAssignment {
  /// Cluster ids 0..k-1, numbered by first occurrence.
  std::vector<int> labels;
  std::size_t k = 0;
};

/// Undoes the k-1 last (highest) merges. Throws InputError unless 1 <= k <= N.
ClusterAssignment cut(const Dendrogram& dg, std::size_t k);

/// Newick text with branch lengths from merge heights; a merge at height h
/// places its subtree root h/2 above the leaves. Labels that are not
/// Newick-safe are single-quoted.
std::string to_newick(const Dendrogram& dg, const std::vector<std::string>& labels);
std::string to_newick(const Dendrogram& dg);

enum class InternalIndex { asw, ch, dunn };
InternalIndex parse_index(std::string_view name);
std::string_view index_name(InternalIndex index);

struct KScore {
  std::size_t k = 0;
  double score = 0.0;
  bool valid = false;
  std::string note;
};

struct KEstimate {
  std::size_t best_k = 0;
  std::vector<KScore> scores;
};

/// Cuts at every k in [k_min, k_max] and scores each partition (CH needs
/// `vectors`). Returns the arg-max; ties go to the smaller k. Non-numeric
/// scores are recorded as invalid and skipped.
KEstimate estimate_k(const Dendrogram& dg, const DistanceMatrix& dm, const CountMatrix* vectors,
                     std::size_t k_min, std::size_t k_max, InternalIndex index,
                     unsigned threads = 1);

/// Weighted average of several per-k curves after min-max normalising each
/// over its valid k values (+inf maps to 1). Equal weights when `weights`
/// is empty.
KEstimate combine_estimates(const std::vector<KEstimate>& curves,
                            const std::vector<double>& weights = {});

}  // namespace seqclus
