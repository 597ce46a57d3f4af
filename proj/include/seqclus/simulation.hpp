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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqclus/clustering.hpp"
#include "seqclus/dataset.hpp"
#include "seqclus/methods.hpp"

namespace seqclus {

/// How cluster patterns are planted.
///  shifted: a cluster pattern at a uniformly random admissible offset.
///  gapped:  patterns x then y separated by a random gap of fresh noise.
///  pinned:  one shared pattern, planted at a cluster-specific fixed offset.
enum class PatternKind { shifted, gapped, pinned };

PatternKind parse_pattern_kind(std::string_view name);
std::string_view pattern_kind_name(PatternKind kind);

struct ScenarioSpec {
  std::size_t sequences = 40;
  std::size_t alphabet = 4;
  std::size_t length_min = 20;
  std::size_t length_max = 20;
  PatternKind kind = PatternKind::shifted;
  /// Pattern length (the x pattern for gapped scenarios).
  std::size_t pattern_length = 6;
  /// y pattern length for gapped scenarios.
  std::size_t pattern_length_y = 0;
  std::size_t clusters = 2;
  /// Cluster 0 carries no pattern (shifted/gapped only).
  bool background_cluster = true;

  /// Throws InputError when the scenario cannot be generated.
  void validate() const;
  std::string describe() const;
};

/// Where a pattern went in one sequence; offsets are 0-based, -1 if absent.
struct PlantRecord {
  int cluster = 0;
  long offset = -1;
  long offset_y = -1;
};

struct GeneratedBatch {
  SequenceDataset data;
  std::vector<int> truth;
  /// Pattern per cluster (empty for a background cluster); gapped scenarios
  /// store x here and y in patterns_y.
  std::vector<std::vector<Token>> patterns;
  std::vector<std::vector<Token>> patterns_y;
  /// Offsets per cluster for pinned scenarios.
  std::vector<long> pinned_offsets;
  std::vector<PlantRecord> plants;
};

/// Symbols used by generated corpora: "A", "B", ... (at most 26).
std::string alphabet_symbol(std::size_t i);

/// Deterministic in (spec, seed). Background tokens are i.i.d. uniform;
/// patterns overwrite background in place so lengths stay as drawn.
GeneratedBatch gen_batch(const ScenarioSpec& spec, std::uint64_t seed);

struct OutcomeRow {
  std::size_t cell = 0;
  std::size_t replication = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::size_t window = 0;
  double purity = 0, ri = 0, ari = 0, f_measure = 0, asw = 0, one_nn = 0;
  bool ok = true;
  std::string error;
};

struct MethodSummary {
  std::string method;
  std::size_t runs = 0;
  std::size_t failures = 0;
  double purity = 0, ri = 0, ari = 0, f_measure = 0, asw = 0, one_nn = 0;
};

struct ExperimentReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t replications = 0;
  std::vector<ScenarioSpec> cells;
  std::vector<MethodSpec> methods;
  std::vector<OutcomeRow> rows;

  /// Means per method label over successful rows, in method order.
  std::vector<MethodSummary> summary() const;
  /// Means restricted to one cell.
  std::vector<MethodSummary> summary_for_cell(std::size_t cell) const;

  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

/// Every (cell, replication) batch is generated from
/// derive_seed(seed, {cell, replication}); each method clusters it with Ward
/// cut at the true cluster count and is scored on all indices. A failing
/// method is recorded in its row, not thrown.
ExperimentReport run_experiment(const std::vector<ScenarioSpec>& grid,
                                const std::vector<MethodSpec>& methods,
                                std::size_t replications, std::uint64_t seed,
                                unsigned threads = 1);

struct KEstimateRow {
  std::size_t cell = 0;
  std::size_t replication = 0;
  std::size_t true_k = 0;
  std::string index;
  std::size_t estimated_k = 0;
  bool ok = true;
  std::string error;
};

/// Cluster-count study: nTreeClus (RF) + cosine + Ward, then estimate_k with
/// each index over [2, min(k_max, N-1)].
std::vector<KEstimateRow> run_k_estimation(const std::vector<ScenarioSpec>& grid,
                                           const std::vector<InternalIndex>& indices,
                                           std::size_t replications, std::size_t k_max,
                                           std::uint64_t seed, unsigned threads = 1);
void write_k_estimation_csv(std::ostream& out, const std::vector<KEstimateRow>& rows);

enum class SensitivityKind { instances, seq_length };

struct CurvePoint {
  std::size_t parameter = 0;
  MethodSummary metrics;
};

/// ASW and external indices of nTreeClus (RF) as the number of sequences
/// (20..200, L=40) or the sequence length (20..200, N=100) grows; a=10,
/// pattern length 10, two clusters.
std::vector<CurvePoint> sensitivity_suite(SensitivityKind kind, std::uint64_t seed,
                                          std::size_t replications = 4, unsigned threads = 1);

/// Named experiment presets.
struct Preset {
  std::string name;
  std::string description;
  std::vector<ScenarioSpec> grid;
  std::vector<MethodSpec> methods;
  std::size_t replications = 1;
  /// Cluster-count presets run run_k_estimation instead of run_experiment.
  bool k_estimation = false;
  std::size_t k_max = 20;
};

std::vector<std::string> preset_names();
Preset make_preset(std::string_view name);

/// The nTreeClus / baseline method set used by the table presets.
std::vector<MethodSpec> table_methods();

}  // namespace seqclus
