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
#include <unordered_map>
#include <vector>

namespace seqclus {

using Token = std::uint32_t;

/// Ordered set of distinct symbols; ordinal ids are assigned in
/// first-occurrence order.
class Alphabet {
 public:
  /// Returns the ordinal for `symbol`, adding it if unseen.
  Token intern(std::string_view symbol);
  std::optional<Token> find(std::string_view symbol) const;

  const std::string& symbol(Token id) const { return symbols_.at(id); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, Token> index_;
};

struct CategoricalSequence {
  std::string id;
  std::vector<Token> tokens;

  std::size_t length() const { return tokens.size(); }
};

class SequenceDataset {
 public:
  SequenceDataset() = default;

  /// Appends a sequence given as symbols. Throws InputError on an empty
  /// sequence or duplicate id.
  void add(std::string id, const std::vector<std::string>& symbols,
           std::optional<std::string> label = std::nullopt);

  const std::vector<CategoricalSequence>& sequences() const { return sequences_; }
  const CategoricalSequence& operator[](std::size_t i) const { return sequences_[i]; }
  std::size_t size() const { return sequences_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }

  bool has_labels() const { return !labels_.empty(); }
  /// Per-sequence class ids (first-occurrence order of label strings).
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& label_names() const { return label_names_; }

  std::size_t max_length() const;
  std::size_t min_length() const;
  double mean_length() const;

  /// Decoded symbols of sequence i.
  std::vector<std::string> symbols_of(std::size_t i) const;

  /// New dataset with sequences reordered as `order` (a permutation of
  /// indices). Alphabet ordinals and label ids are kept unchanged.
  SequenceDataset permuted(const std::vector<std::size_t>& order) const;

 private:
  std::vector<CategoricalSequence> sequences_;
  Alphabet alphabet_;
  std::vector<int> labels_;
  std::vector<std::string> label_names_;
  std::unordered_map<std::string, int> label_index_;
  std::unordered_map<std::string, std::size_t> id_index_;
  std::size_t unlabeled_ = 0;
};

enum class InputFormat { fasta, csv, lines };

InputFormat parse_format(std::string_view name);

struct LoadOptions {
  InputFormat format = InputFormat::lines;
  /// csv: the last column is a class label.
  bool label_column = false;
  /// csv: the first column is a sequence id.
  bool id_column = false;
};

/// Parses a corpus. Sequence order is preserved and the alphabet is exactly
/// the set of observed tokens in first-occurrence order.
///
/// fasta: ">id description" headers; each residue character is a token.
/// csv:   comma-separated tokens per row.
/// lines: one sequence per line; whitespace-separated tokens when the line
///        contains whitespace, otherwise one token per UTF-8 character.
SequenceDataset load_sequences(std::istream& in, const LoadOptions& options);
SequenceDataset load_sequences_file(const std::string& path, const LoadOptions& options);
SequenceDataset load_sequences_string(std::string_view text, const LoadOptions& options);

/// Canonical CSV: `id,tok1,...,tokL[,label]`. Reloads with id_column=true and
/// label_column=has_labels().
void write_csv(std::ostream& out, const SequenceDataset& ds);

/// round(sqrt(mean length)) clamped to [1, min length - 1].
std::size_t default_window(const SequenceDataset& ds);

}  // namespace seqclus
