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

#include "seqclus/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "seqclus/baselines.hpp"
#include "seqclus/common.hpp"

namespace seqclus {

Metric parse_metric(std::string_view name) {
  if (name == "cosine") return Metric::cosine;
  if (name == "manhattan") return Metric::manhattan;
  if (name == "levenshtein") return Metric::levenshtein;
  if (name == "jaro_winkler" || name == "jaro-winkler") return Metric::jaro_winkler;
  if (name == "precomputed") return Metric::precomputed;
  throw InputError("unknown metric '" + std::string(name) + "'");
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::cosine: return "cosine";
    case Metric::manhattan: return "manhattan";
    case Metric::levenshtein: return "levenshtein";
    case Metric::jaro_winkler: return "jaro-winkler";
    case Metric::precomputed: return "precomputed";
  }
  return "cosine";
}

DistanceMatrix::DistanceMatrix(std::size_t order, Metric metric)
    : order_(order), metric_(metric), data_(order * (order > 0 ? order - 1 : 0) / 2, 0.0) {}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i == j) throw InputError("cannot set a diagonal distance");
  if (i > j) std::swap(i, j);
  data_[index(i, j)] = value;
}

DistanceMatrix DistanceMatrix::from_square(const std::vector<std::vector<double>>& square,
                                           Metric metric) {
  const std::size_t n = square.size();
  DistanceMatrix dm(n, metric);
  for (std::size_t i = 0; i < n; ++i) {
    if (square[i].size() != n) throw InputError("distance matrix is not square");
    if (square[i][i] != 0.0) throw InputError("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = square[i][j];
      if (!std::isfinite(v) || v < 0.0) throw InputError("distance entries must be finite and >= 0");
      if (square[j][i] != v) throw InputError("distance matrix is not symmetric");
      dm.set(i, j, v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) dm.ids.push_back(std::to_string(i));
  return dm;
}

std::vector<std::vector<double>> DistanceMatrix::square() const {
  std::vector<std::vector<double>> out(order_, std::vector<double>(order_, 0.0));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

namespace {

std::uint64_t sq_norm(std::span<const SparseEntry> a) {
  std::uint64_t s = 0;
  for (const auto& e : a) s += static_cast<std::uint64_t>(e.count) * e.count;
  return s;
}

double cosine_from(std::uint64_t dot, std::uint64_t na, std::uint64_t nb) {
  const double sim = static_cast<double>(dot) /
                     std::sqrt(static_cast<double>(na) * static_cast<double>(nb));
  return std::clamp(1.0 - sim, 0.0, 1.0);
}

double cosine_with_norms(std::span<const SparseEntry> a, std::span<const SparseEntry> b,
                         std::uint64_t na, std::uint64_t nb) {
  std::uint64_t dot = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].col < b[j].col) ++i;
    else if (b[j].col < a[i].col) ++j;
    else {
      dot += static_cast<std::uint64_t>(a[i].count) * b[j].count;
      ++i;
      ++j;
    }
  }
  return cosine_from(dot, na, nb);
}

}  // namespace

double cosine_dissimilarity(std::span<const SparseEntry> a, std::span<const SparseEntry> b) {
  const auto na = sq_norm(a), nb = sq_norm(b);
  if (na == 0 || nb == 0) throw InputError("cosine dissimilarity of a zero vector is undefined");
  return cosine_with_norms(a, b, na, nb);
}

double cosine_dissimilarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("vectors differ in length");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw InputError("cosine dissimilarity of a zero vector is undefined");
  return std::clamp(1.0 - dot / std::sqrt(na * nb), 0.0, 1.0);
}

double manhattan(std::span<const SparseEntry> a, std::span<const SparseEntry> b) {
  std::uint64_t total = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      total += a[i++].count;
    } else if (i == a.size() || b[j].col < a[i].col) {
      total += b[j++].count;
    } else {
      total += a[i].count > b[j].count ? a[i].count - b[j].count : b[j].count - a[i].count;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(total);
}

double manhattan(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InputError("vectors differ in length");
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total;
}

DistanceMatrix distance_matrix(const CountMatrix& rows, Metric metric,
                               const std::vector<std::string>& ids, unsigned threads) {
  const std::size_t n = rows.rows();
  if (n < 2) throw InputError("distance matrix needs at least 2 rows");
  if (metric != Metric::cosine && metric != Metric::manhattan)
    throw InputError("vector distance must be cosine or manhattan");
  auto label = [&](std::size_t i) { return i < ids.size() ? ids[i] : std::to_string(i); };
  std::vector<std::uint64_t> norms(n);
  for (std::size_t i = 0; i < n; ++i) {
    norms[i] = sq_norm(rows.row(i));
    if (metric == Metric::cosine && norms[i] == 0)
      throw InputError("sequence '" + label(i) + "' has an all-zero vector; cosine undefined");
  }
  DistanceMatrix dm(n, metric);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = metric == Metric::cosine
                           ? cosine_with_norms(rows.row(i), rows.row(j), norms[i], norms[j])
                           : manhattan(rows.row(i), rows.row(j));
      dm.set(i, j, d);
    }
  });
  for (std::size_t i = 0; i < n; ++i) dm.ids.push_back(label(i));
  return dm;
}

DistanceMatrix distance_matrix(const std::vector<std::vector<double>>& rows, Metric metric,
                               unsigned threads) {
  const std::size_t n = rows.size();
  if (n < 2) throw InputError("distance matrix needs at least 2 rows");
  if (metric != Metric::cosine && metric != Metric::manhattan)
    throw InputError("vector distance must be cosine or manhattan");
  DistanceMatrix dm(n, metric);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j)
      dm.set(i, j, metric == Metric::cosine ? cosine_dissimilarity(rows[i], rows[j])
                                            : manhattan(rows[i], rows[j]));
  });
  for (std::size_t i = 0; i < n; ++i) dm.ids.push_back(std::to_string(i));
  return dm;
}

DistanceMatrix string_distance_matrix(const SequenceDataset& ds, Metric metric, unsigned threads) {
  const std::size_t n = ds.size();
  if (n < 2) throw InputError("distance matrix needs at least 2 sequences");
  if (metric != Metric::levenshtein && metric != Metric::jaro_winkler)
    throw InputError("string distance must be levenshtein or jaro-winkler");
  DistanceMatrix dm(n, metric);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = ds[i].tokens;
      const auto& b = ds[j].tokens;
      dm.set(i, j, metric == Metric::levenshtein
                       ? static_cast<double>(levenshtein(a, b))
                       : std::clamp(1.0 - jaro_winkler(a, b), 0.0, 1.0));
    }
  });
  for (const auto& s : ds.sequences()) dm.ids.push_back(s.id);
  return dm;
}

void write_distance_tsv(std::ostream& out, const DistanceMatrix& dm) {
  out << "seq_id";
  for (std::size_t i = 0; i < dm.order(); ++i) out << '\t' << dm.ids.at(i);
  out << '\n';
  char buf[32];
  for (std::size_t i = 0; i < dm.order(); ++i) {
    out << dm.ids.at(i);
    for (std::size_t j = 0; j < dm.order(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", dm(i, j));
      out << '\t' << buf;
    }
    out << '\n';
  }
}

}  // namespace seqclus
