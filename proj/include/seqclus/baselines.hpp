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
#include <span>
#include <string>
#include <vector>

#include "seqclus/count_matrix.hpp"
#include "seqclus/dataset.hpp"

namespace seqclus {

/// k-mer count profiles over the union of observed k-mers. Columns are
/// ordered lexicographically by token ordinal tuple.
struct KmerProfiles {
  std::size_t k = 0;
  CountMatrix counts;
  /// Column keys as token ordinal tuples.
  std::vector<std::vector<Token>> keys;

  /// Key of column j rendered with the alphabet's symbols.
  std::string key_label(std::size_t j, const Alphabet& alphabet) const;
};

/// Throws InputError when k < 1 or any sequence is shorter than k.
KmerProfiles kmer_profiles(const SequenceDataset& ds, std::size_t k, unsigned threads = 1);

/// Unit-cost edit distance over tokens, two-row dynamic program.
std::size_t levenshtein(std::span<const Token> a, std::span<const Token> b);

/// Jaro-Winkler similarity: match window floor(max(len)/2) - 1, prefix scale
/// 0.1, prefix capped at 4.
double jaro_winkler(std::span<const Token> a, std::span<const Token> b);
/// Plain Jaro similarity.
double jaro(std::span<const Token> a, std::span<const Token> b);

}  // namespace seqclus
