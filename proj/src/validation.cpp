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

#include "seqclus/validation.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <unordered_map>

#include "seqclus/common.hpp"

namespace seqclus {

namespace {

/// Renumbers arbitrary ids to 0..k-1 in first-occurrence order.
std::vector<std::size_t> canonical(std::span<const int> labels, std::size_t& k) {
  std::unordered_map<int, std::size_t> ids;
  std::vector<std::size_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = ids.emplace(labels[i], ids.size());
    out[i] = it->second;
  }
  k = ids.size();
  return out;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

std::vector<double> silhouettes(const DistanceMatrix& dm, std::span<const int> labels,
                                unsigned threads) {
  const std::size_t n = dm.order();
  if (labels.size() != n) throw InputError("label count does not match distance matrix");
  std::size_t k = 0;
  const auto lab = canonical(labels, k);
  if (k < 2) throw InputError("silhouette needs at least 2 clusters");
  std::vector<std::size_t> sizes(k, 0);
  for (auto c : lab) ++sizes[c];

  std::vector<double> s(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    if (sizes[lab[i]] == 1) return;
    std::vector<double> sum(k, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sum[lab[j]] += dm(i, j);
    const double a = sum[lab[i]] / static_cast<double>(sizes[lab[i]] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c)
      if (c != lab[i]) b = std::min(b, sum[c] / static_cast<double>(sizes[c]));
    const double denom = std::max(a, b);
    s[i] = denom > 0.0 ? (b - a) / denom : 0.0;
  });
  return s;
}

double average_silhouette(const DistanceMatrix& dm, std::span<const int> labels) {
  const auto s = silhouettes(dm, labels);
  double total = 0.0;
  for (double v : s) total += v;
  return total / static_cast<double>(s.size());
}

double calinski_harabasz(const CountMatrix& vectors, std::span<const int> labels) {
  const std::size_t n = vectors.rows();
  if (labels.size() != n) throw InputError("label count does not match vectors");
  std::size_t k = 0;
  const auto lab = canonical(labels, k);
  if (k < 2 || k >= n) throw InputError("Calinski-Harabasz needs 2 <= k < n");

  using u128 = unsigned __int128;
  // Per cluster: n_C * sum |x|^2 - |S_C|^2 is n_C * WGSS_C, exact in integers.
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < n; ++i) members[lab[i]].push_back(i);
  std::vector<std::uint64_t> scratch(vectors.cols(), 0);
  std::vector<std::uint32_t> touched;
  auto sum_sq_of_sum = [&](const std::vector<std::size_t>& rows) {
    touched.clear();
    for (auto r : rows)
      for (const auto& e : vectors.row(r)) {
        if (scratch[e.col] == 0) touched.push_back(e.col);
        scratch[e.col] += e.count;
      }
    u128 total = 0;
    for (auto c : touched) {
      total += static_cast<u128>(scratch[c]) * scratch[c];
      scratch[c] = 0;
    }
    return total;
  };

  long double wgss = 0.0L, between_part = 0.0L;
  bool wgss_zero = true;
  for (const auto& rows : members) {
    u128 own = 0;
    for (auto r : rows)
      for (const auto& e : vectors.row(r)) own += static_cast<u128>(e.count) * e.count;
    const u128 s2 = sum_sq_of_sum(rows);
    const u128 nc = rows.size();
    const u128 within_scaled = nc * own - s2;
    if (within_scaled != 0) wgss_zero = false;
    wgss += static_cast<long double>(within_scaled) / static_cast<long double>(rows.size());
    between_part += static_cast<long double>(s2) / static_cast<long double>(rows.size());
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const long double bgss =
      between_part - static_cast<long double>(sum_sq_of_sum(all)) / static_cast<long double>(n);
  const long double between = std::max(0.0L, bgss);
  if (wgss_zero) return between > 0 ? kInfiniteIndex : std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>((between / static_cast<long double>(k - 1)) /
                             (wgss / static_cast<long double>(n - k)));
}

double calinski_harabasz(const std::vector<std::vector<double>>& vectors,
                         std::span<const int> labels) {
  const std::size_t n = vectors.size();
  if (labels.size() != n) throw InputError("label count does not match vectors");
  std::size_t k = 0;
  const auto lab = canonical(labels, k);
  if (k < 2 || k >= n) throw InputError("Calinski-Harabasz needs 2 <= k < n");
  const std::size_t dim = vectors.front().size();
  std::vector<std::vector<double>> centroid(k, std::vector<double>(dim, 0.0));
  std::vector<double> overall(dim, 0.0);
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (vectors[i].size() != dim) throw InputError("vectors differ in length");
    ++sizes[lab[i]];
    for (std::size_t d = 0; d < dim; ++d) {
      centroid[lab[i]][d] += vectors[i][d];
      overall[d] += vectors[i][d];
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    for (auto& v : centroid[c]) v /= static_cast<double>(sizes[c]);
  for (auto& v : overall) v /= static_cast<double>(n);
  double wgss = 0.0, bgss = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = vectors[i][d] - centroid[lab[i]][d];
      wgss += diff * diff;
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = centroid[c][d] - overall[d];
      bgss += static_cast<double>(sizes[c]) * diff * diff;
    }
  if (wgss == 0.0) return bgss > 0.0 ? kInfiniteIndex : std::numeric_limits<double>::quiet_NaN();
  return (bgss / static_cast<double>(k - 1)) / (wgss / static_cast<double>(n - k));
}

double dunn_index(const DistanceMatrix& dm, std::span<const int> labels) {
  const std::size_t n = dm.order();
  if (labels.size() != n) throw InputError("label count does not match distance matrix");
  std::size_t k = 0;
  const auto lab = canonical(labels, k);
  if (k < 2) throw InputError("Dunn index needs at least 2 clusters");
  double separation = std::numeric_limits<double>::infinity();
  double diameter = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = dm(i, j);
      if (lab[i] == lab[j]) diameter = std::max(diameter, d);
      else separation = std::min(separation, d);
    }
  if (diameter == 0.0) return separation > 0.0 ? kInfiniteIndex : 0.0;
  return separation / diameter;
}

ContingencyTable::ContingencyTable(std::span<const int> clusters, std::span<const int> classes) {
  if (clusters.size() != classes.size())
    throw InputError("assignment and truth differ in length");
  std::size_t kc = 0, kl = 0;
  const auto c = canonical(clusters, kc);
  const auto l = canonical(classes, kl);
  counts_.assign(kc * kl, 0);
  cluster_sizes_.assign(kc, 0);
  class_sizes_.assign(kl, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    ++counts_[c[i] * kl + l[i]];
    ++cluster_sizes_[c[i]];
    ++class_sizes_[l[i]];
  }
  total_ = clusters.size();
}

double purity(const ContingencyTable& ct) {
  if (ct.total() == 0) throw InputError("purity of an empty partition");
  std::size_t hits = 0;
  for (std::size_t j = 0; j < ct.num_clusters(); ++j) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < ct.num_classes(); ++i) best = std::max(best, ct.at(j, i));
    hits += best;
  }
  return static_cast<double>(hits) / static_cast<double>(ct.total());
}

PairCounts pair_counts(const ContingencyTable& ct) {
  PairCounts p;
  for (std::size_t j = 0; j < ct.num_clusters(); ++j)
    for (std::size_t i = 0; i < ct.num_classes(); ++i)
      p.same_both += choose2(static_cast<double>(ct.at(j, i)));
  for (auto s : ct.cluster_sizes()) p.same_cluster += choose2(static_cast<double>(s));
  for (auto s : ct.class_sizes()) p.same_class += choose2(static_cast<double>(s));
  p.total = choose2(static_cast<double>(ct.total()));
  return p;
}

double rand_index(std::span<const int> assign, std::span<const int> truth) {
  const ContingencyTable ct(assign, truth);
  const auto p = pair_counts(ct);
  if (p.total == 0) return 1.0;
  const double agree = p.total - p.same_cluster - p.same_class + 2.0 * p.same_both;
  return agree / p.total;
}

double adjusted_rand(std::span<const int> assign, std::span<const int> truth) {
  const ContingencyTable ct(assign, truth);
  const auto p = pair_counts(ct);
  const double expected = p.total > 0 ? p.same_cluster * p.same_class / p.total : 0.0;
  const double maximum = (p.same_cluster + p.same_class) / 2.0;
  if (maximum == expected) {
    // Both partitions trivial: identical iff same number of blocks.
    return ct.num_clusters() == ct.num_classes() ? 1.0 : 0.0;
  }
  return (p.same_both - expected) / (maximum - expected);
}

double f_measure(const ContingencyTable& ct) {
  const auto p = pair_counts(ct);
  if (p.same_cluster == 0 || p.same_class == 0 || p.same_both == 0) return 0.0;
  const double precision = p.same_both / p.same_cluster;
  const double recall = p.same_both / p.same_class;
  return 2.0 * precision * recall / (precision + recall);
}

double one_nn_accuracy(const DistanceMatrix& dm, std::span<const int> truth) {
  const std::size_t n = dm.order();
  if (truth.size() != n) throw InputError("label count does not match distance matrix");
  if (n < 2) throw InputError("1-NN needs at least 2 points");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nearest = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = dm(i, j);
      if (nearest == n || d < best) {
        best = d;
        nearest = j;
      }
    }
    if (truth[nearest] == truth[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

ValidationReport validate(const DistanceMatrix& dm, std::span<const int> labels,
                          const CountMatrix* vectors, std::span<const int> truth) {
  ValidationReport r;
  std::size_t k = 0;
  canonical(labels, k);
  if (k >= 2) {
    r.asw = average_silhouette(dm, labels);
    r.dunn = dunn_index(dm, labels);
    r.inputs.emplace_back("ASW", "distances");
    r.inputs.emplace_back("Dunn", "distances");
    if (vectors != nullptr && k < labels.size()) {
      r.ch = calinski_harabasz(*vectors, labels);
      r.inputs.emplace_back("CH", "vectors");
    }
  }
  if (!truth.empty()) {
    const ContingencyTable ct(labels, truth);
    r.purity = purity(ct);
    r.ri = rand_index(labels, truth);
    r.ari = adjusted_rand(labels, truth);
    r.f_measure = f_measure(ct);
    r.one_nn = one_nn_accuracy(dm, truth);
  }
  return r;
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (!v) j[key] = nullptr;
    else if (std::isinf(*v)) j[key] = *v > 0 ? "Infinity" : "-Infinity";
    else if (std::isnan(*v)) j[key] = "NaN";
    else j[key] = *v;
  };
  put("Purity", purity);
  put("RI", ri);
  put("ARI", ari);
  put("F-meas", f_measure);
  put("ASW", asw);
  put("CH", ch);
  put("Dunn", dunn);
  put("1NN", one_nn);
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  return j.dump(2);
}

}  // namespace seqclus
