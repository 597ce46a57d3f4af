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
#include <string_view>
#include <vector>

#include "seqclus/count_matrix.hpp"
#include "seqclus/dataset.hpp"

namespace seqclus {

enum class Metric { cosine, manhattan, levenshtein, jaro_winkler, precomputed };

Metric parse_metric(std::string_view name);
std::string_view metric_name(Metric m);

/// Symmetric dissimilarities with a zero diagonal, stored as the strict
/// upper triangle.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t order, Metric metric);

  std::size_t order() const { return order_; }
  Metric metric() const { return metric_; }

  double operator()(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    return i < j ? data_[index(i, j)] : data_[index(j, i)];
  }
  /// Sets d(i, j) = d(j, i); i != j.
  void set(std::size_t i, std::size_t j, double value);

  std::vector<std::string> ids;

  /// Builds from a full square matrix; throws when it is not symmetric with
  /// a zero diagonal, or has negative or non-finite entries.
  static DistanceMatrix from_square(const std::vector<std::vector<double>>& square,
                                    Metric metric = Metric::precomputed);
  std::vector<std::vector<double>> square() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    return i * order_ - i * (i + 1) / 2 + (j - i - 1);
  }
  std::size_t order_ = 0;
  Metric metric_ = Metric::cosine;
  std::vector<double> data_;
};

/// 1 - a.b / (|a| |b|) over sparse count rows. Throws InputError when either
/// vector is all zero.
double cosine_dissimilarity(std::span<const SparseEntry> a, std::span<const SparseEntry> b);
double cosine_dissimilarity(std::span<const double> a, std::span<const double> b);

double manhattan(std::span<const SparseEntry> a, std::span<const SparseEntry> b);
double manhattan(std::span<const double> a, std::span<const double> b);

/// All pairs under cosine or manhattan. `ids` label rows in error messages
/// and in the result.
DistanceMatrix distance_matrix(const CountMatrix& rows, Metric metric,
                               const std::vector<std::string>& ids, unsigned threads = 1);
DistanceMatrix distance_matrix(const std::vector<std::vector<double>>& rows, Metric metric,
                               unsigned threads = 1);

/// Levenshtein (unit costs) or Jaro-Winkler distance (1 - similarity) over
/// raw token sequences.
DistanceMatrix string_distance_matrix(const SequenceDataset& ds, Metric metric,
                                      unsigned threads = 1);

/// Full square TSV with an ids header.
void write_distance_tsv(std::ostream& out, const DistanceMatrix& dm);

}  // namespace seqclus
