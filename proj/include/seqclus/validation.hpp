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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqclus/count_matrix.hpp"
#include "seqclus/distance.hpp"

namespace seqclus {

/// Returned by calinski_harabasz and dunn when the within-cluster spread is
/// zero but clusters are separated.
inline constexpr double kInfiniteIndex = std::numeric_limits<double>::infinity();

/// Mean silhouette width. Singleton clusters contribute 0, as does 0/0.
/// Throws InputError when fewer than 2 clusters are present.
double average_silhouette(const DistanceMatrix& dm, std::span<const int> labels);
/// Per-point silhouette values.
std::vector<double> silhouettes(const DistanceMatrix& dm, std::span<const int> labels,
                                unsigned threads = 1);

/// (BGSS / (k-1)) / (WGSS / (n-k)) over the row vectors. Requires 2 <= k < n.
double calinski_harabasz(const CountMatrix& vectors, std::span<const int> labels);
double calinski_harabasz(const std::vector<std::vector<double>>& vectors,
                         std::span<const int> labels);

/// Minimum single-linkage separation over maximum complete diameter.
double dunn_index(const DistanceMatrix& dm, std::span<const int> labels);

/// Cluster x class counts. Cluster and class ids are arbitrary ints and are
/// renumbered in first-occurrence order.
class ContingencyTable {
 public:
  ContingencyTable(std::span<const int> clusters, std::span<const int> classes);

  std::size_t num_clusters() const { return cluster_sizes_.size(); }
  std::size_t num_classes() const { return class_sizes_.size(); }
  std::size_t total() const { return total_; }
  std::size_t at(std::size_t cluster, std::size_t cls) const {
    return counts_[cluster * class_sizes_.size() + cls];
  }
  const std::vector<std::size_t>& cluster_sizes() const { return cluster_sizes_; }
  const std::vector<std::size_t>& class_sizes() const { return class_sizes_; }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> cluster_sizes_;
  std::vector<std::size_t> class_sizes_;
  std::size_t total_ = 0;
};

double purity(const ContingencyTable& ct);
double rand_index(std::span<const int> assign, std::span<const int> truth);
/// Hubert-Arabie ARI. When the expected index equals its maximum (both
/// partitions trivial), returns 1 for identical partitions and 0 otherwise.
double adjusted_rand(std::span<const int> assign, std::span<const int> truth);

struct PairCounts {
  double same_both = 0;      // same cluster, same class
  double same_cluster = 0;   // pairs sharing a cluster
  double same_class = 0;     // pairs sharing a class
  double total = 0;          // n choose 2
};
PairCounts pair_counts(const ContingencyTable& ct);

/// Pair-counting F1. 0 when either partition has no co-member pairs.
double f_measure(const ContingencyTable& ct);

/// Leave-one-out 1-NN accuracy; distance ties go to the smaller index.
double one_nn_accuracy(const DistanceMatrix& dm, std::span<const int> truth);

struct ValidationReport {
  std::optional<double> asw, ch, dunn;
  std::optional<double> purity, ri, ari, f_measure;
  std::optional<double> one_nn;
  /// Which input each internal index consumed ("distances" or "vectors").
  std::vector<std::pair<std::string, std::string>> inputs;

  std::string to_json() const;
};

/// Fills every index computable from what is given. `vectors` may be null
/// (CH skipped); `truth` may be empty (external indices and 1-NN skipped).
ValidationReport validate(const DistanceMatrix& dm, std::span<const int> labels,
                          const CountMatrix* vectors, std::span<const int> truth);

}  // namespace seqclus
