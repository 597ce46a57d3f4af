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

#include "seqclus/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "seqclus/common.hpp"

namespace seqclus {

Token Alphabet::intern(std::string_view symbol) {
  auto it = index_.find(std::string(symbol));
  if (it != index_.end()) return it->second;
  const auto id = static_cast<Token>(symbols_.size());
  symbols_.emplace_back(symbol);
  index_.emplace(symbols_.back(), id);
  return id;
}

std::optional<Token> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void SequenceDataset::add(std::string id, const std::vector<std::string>& symbols,
                          std::optional<std::string> label) {
  if (symbols.empty()) throw InputError("sequence '" + id + "' is empty");
  if (id_index_.count(id)) throw InputError("duplicate sequence id '" + id + "'");
  const bool labeled = label.has_value();
  if (!sequences_.empty() && labeled != has_labels())
    throw InputError("sequence '" + id + "': labels must be given for all sequences or none");

  CategoricalSequence seq;
  seq.id = id;
  seq.tokens.reserve(symbols.size());
  for (const auto& s : symbols) {
    if (s.find_first_not_of(" \t\r\n") == std::string::npos)
      throw InputError("sequence '" + id + "' contains an empty or whitespace-only token");
    seq.tokens.push_back(alphabet_.intern(s));
  }
  if (labeled) {
    auto [it, inserted] = label_index_.emplace(*label, static_cast<int>(label_names_.size()));
    if (inserted) label_names_.push_back(*label);
    labels_.push_back(it->second);
  }
  id_index_.emplace(seq.id, sequences_.size());
  sequences_.push_back(std::move(seq));
}

std::size_t SequenceDataset::max_length() const {
  std::size_t m = 0;
  for (const auto& s : sequences_) m = std::max(m, s.length());
  return m;
}

std::size_t SequenceDataset::min_length() const {
  if (sequences_.empty()) return 0;
  std::size_t m = sequences_.front().length();
  for (const auto& s : sequences_) m = std::min(m, s.length());
  return m;
}

double SequenceDataset::mean_length() const {
  if (sequences_.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : sequences_) total += static_cast<double>(s.length());
  return total / static_cast<double>(sequences_.size());
}

std::vector<std::string> SequenceDataset::symbols_of(std::size_t i) const {
  std::vector<std::string> out;
  out.reserve(sequences_.at(i).length());
  for (Token t : sequences_[i].tokens) out.push_back(alphabet_.symbol(t));
  return out;
}

SequenceDataset SequenceDataset::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != size()) throw InputError("permutation size does not match dataset");
  std::vector<bool> seen(size(), false);
  SequenceDataset out;
  out.alphabet_ = alphabet_;
  out.label_names_ = label_names_;
  out.label_index_ = label_index_;
  for (std::size_t i : order) {
    if (i >= size() || seen[i]) throw InputError("invalid permutation");
    seen[i] = true;
    out.id_index_.emplace(sequences_[i].id, out.sequences_.size());
    out.sequences_.push_back(sequences_[i]);
    if (has_labels()) out.labels_.push_back(labels_[i]);
  }
  return out;
}

InputFormat parse_format(std::string_view name) {
  if (name == "fasta") return InputFormat::fasta;
  if (name == "csv") return InputFormat::csv;
  if (name == "lines") return InputFormat::lines;
  throw InputError("unknown input format '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> utf8_chars(std::string_view s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    len = std::min(len, s.size() - i);
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    if (pos == std::string_view::npos) {
      out.emplace_back(trim(s.substr(start)));
      break;
    }
    out.emplace_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

void load_fasta(std::istream& in, SequenceDataset& ds) {
  std::string line;
  std::string id;
  std::string residues;
  bool open = false;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!open) return;
    if (residues.empty()) throw InputError("FASTA record '" + id + "' has no sequence");
    std::vector<std::string> symbols;
    symbols.reserve(residues.size());
    for (char c : residues) symbols.emplace_back(1, c);
    ds.add(id, symbols);
    residues.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '>') {
      flush();
      const auto words = split_whitespace(view.substr(1));
      if (words.empty())
        throw InputError("malformed FASTA header at line " + std::to_string(line_no));
      id = words.front();
      open = true;
      continue;
    }
    if (!open)
      throw InputError("malformed FASTA: sequence data before first header at line " +
                       std::to_string(line_no));
    for (char c : view)
      if (!std::isspace(static_cast<unsigned char>(c))) residues.push_back(c);
  }
  flush();
}

void load_csv(std::istream& in, const LoadOptions& options, SequenceDataset& ds) {
  std::string line;
  std::size_t row = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_commas(line);
    ++row;
    std::string id = "seq" + std::to_string(row);
    std::optional<std::string> label;
    const std::size_t needed = 1 + (options.id_column ? 1 : 0) + (options.label_column ? 1 : 0);
    if (fields.size() < needed)
      throw InputError("csv line " + std::to_string(line_no) + " has too few columns");
    if (options.id_column) {
      id = fields.front();
      if (id.empty()) throw InputError("csv line " + std::to_string(line_no) + " has an empty id");
      fields.erase(fields.begin());
    }
    if (options.label_column) {
      label = fields.back();
      fields.pop_back();
    }
    for (const auto& f : fields)
      if (f.empty())
        throw InputError("csv line " + std::to_string(line_no) +
                         " contains an empty or whitespace-only token");
    ds.add(std::move(id), fields, std::move(label));
  }
}

void load_lines(std::istream& in, SequenceDataset& ds) {
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    ++row;
    const bool spaced = view.find_first_of(" \t") != std::string_view::npos;
    ds.add("seq" + std::to_string(row), spaced ? split_whitespace(view) : utf8_chars(view));
  }
}

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\r\n") != std::string::npos;
}

}  // namespace

SequenceDataset load_sequences(std::istream& in, const LoadOptions& options) {
  SequenceDataset ds;
  switch (options.format) {
    case InputFormat::fasta: load_fasta(in, ds); break;
    case InputFormat::csv: load_csv(in, options, ds); break;
    case InputFormat::lines: load_lines(in, ds); break;
  }
  if (ds.size() == 0) throw InputError("empty corpus");
  return ds;
}

SequenceDataset load_sequences_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return load_sequences(in, options);
}

SequenceDataset load_sequences_string(std::string_view text, const LoadOptions& options) {
  std::istringstream in{std::string(text)};
  return load_sequences(in, options);
}

void write_csv(std::ostream& out, const SequenceDataset& ds) {
  const auto& symbols = ds.alphabet().symbols();
  for (const auto& s : symbols)
    if (needs_quoting(s)) throw InputError("token '" + s + "' cannot be written as csv");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& seq = ds[i];
    if (needs_quoting(seq.id)) throw InputError("id '" + seq.id + "' cannot be written as csv");
    out << seq.id;
    for (Token t : seq.tokens) out << ',' << symbols[t];
    if (ds.has_labels()) out << ',' << ds.label_names()[ds.labels()[i]];
    out << '\n';
  }
}

std::size_t default_window(const SequenceDataset& ds) {
  if (ds.size() == 0) throw InputError("empty corpus");
  for (const auto& s : ds.sequences())
    if (s.length() < 2)
      throw InputError("sequence '" + s.id + "' has length 1; no window of size >= 1 fits");
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(ds.mean_length())));
  return std::clamp<std::size_t>(n, 1, ds.min_length() - 1);
}

}  // namespace seqclus
