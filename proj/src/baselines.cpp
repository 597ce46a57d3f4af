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

#include "seqclus/baselines.hpp"

#include <algorithm>
#include <map>

#include "seqclus/common.hpp"

namespace seqclus {

std::string KmerProfiles::key_label(std::size_t j, const Alphabet& alphabet) const {
  std::string out;
  const auto& key = keys.at(j);
  const bool single_chars = std::all_of(key.begin(), key.end(), [&](Token t) {
    return alphabet.symbol(t).size() == 1;
  });
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0 && !single_chars) out += '|';
    out += alphabet.symbol(key[i]);
  }
  return out;
}

KmerProfiles kmer_profiles(const SequenceDataset& ds, std::size_t k, unsigned threads) {
  if (k < 1) throw InputError("k must be >= 1");
  for (const auto& s : ds.sequences())
    if (s.length() < k)
      throw InputError("sequence '" + s.id + "' is shorter than k=" + std::to_string(k));

  using Key = std::vector<Token>;
  // Per-sequence sorted (key, count) lists, then a global key union.
  std::vector<std::vector<std::pair<Key, std::uint32_t>>> local(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t i) {
    std::map<Key, std::uint32_t> counts;
    const auto& t = ds[i].tokens;
    for (std::size_t j = 0; j + k <= t.size(); ++j)
      ++counts[Key(t.begin() + static_cast<long>(j), t.begin() + static_cast<long>(j + k))];
    local[i].assign(counts.begin(), counts.end());
  });

  std::map<Key, std::uint32_t> column;
  for (const auto& l : local)
    for (const auto& kv : l) column.emplace(kv.first, 0);
  KmerProfiles out;
  out.k = k;
  std::uint32_t next = 0;
  for (auto& kv : column) {
    kv.second = next++;
    out.keys.push_back(kv.first);
  }
  out.counts = CountMatrix(column.size());
  std::vector<SparseEntry> row;
  for (const auto& l : local) {
    row.clear();
    for (const auto& kv : l) row.push_back({column.at(kv.first), kv.second});
    out.counts.push_row(row);
  }
  return out;
}

std::size_t levenshtein(std::span<const Token> a, std::span<const Token> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double jaro(std::span<const Token> a, std::span<const Token> b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;
  std::vector<char> a_match(a.size(), 0), b_match(b.size(), 0);
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t lo = i > window ? i - window : 0;
    const std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (b_match[j] || a[i] != b[j]) continue;
      a_match[i] = b_match[j] = 1;
      ++matches;
      break;
    }
  }
  if (matches == 0) return 0.0;
  std::size_t half_transpositions = 0;
  for (std::size_t i = 0, j = 0; i < a.size(); ++i) {
    if (!a_match[i]) continue;
    while (!b_match[j]) ++j;
    if (a[i] != b[j]) ++half_transpositions;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(half_transpositions / 2);
  return (m / static_cast<double>(a.size()) + m / static_cast<double>(b.size()) + (m - t) / m) /
         3.0;
}

double jaro_winkler(std::span<const Token> a, std::span<const Token> b) {
  constexpr double kPrefixScale = 0.1;
  constexpr std::size_t kMaxPrefix = 4;
  const double sim = jaro(a, b);
  std::size_t prefix = 0;
  while (prefix < kMaxPrefix && prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix])
    ++prefix;
  return sim + static_cast<double>(prefix) * kPrefixScale * (1.0 - sim);
}

}  // namespace seqclus
