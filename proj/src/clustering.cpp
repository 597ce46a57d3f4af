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

#include "seqclus/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "seqclus/common.hpp"
#include "seqclus/validation.hpp"

namespace seqclus {

namespace {

constexpr double kTieTolerance = 1e-10;

/// Condensed working matrix over slots 0..n-1.
class Working {
 public:
  explicit Working(const DistanceMatrix& dm) : n_(dm.order()), d_(n_ * (n_ - 1) / 2) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) d_[idx(i, j)] = dm(i, j);
  }
  double get(std::size_t i, std::size_t j) const { return i < j ? d_[idx(i, j)] : d_[idx(j, i)]; }
  void put(std::size_t i, std::size_t j, double v) {
    if (i < j) d_[idx(i, j)] = v;
    else d_[idx(j, i)] = v;
  }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }
  std::size_t n_;
  std::vector<double> d_;
};

}  // namespace

Dendrogram ward_linkage(const DistanceMatrix& dm) {
  const std::size_t n = dm.order();
  if (n < 2) throw InputError("linkage needs at least 2 points");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = dm(i, j);
      if (!std::isfinite(v)) throw InputError("distance matrix has a non-finite entry");
      scale = std::max(scale, std::abs(v));
    }

  Working w(dm);
  std::vector<char> active(n, 1);
  std::vector<std::size_t> size(n, 1), node(n);
  std::iota(node.begin(), node.end(), 0);
  // Row-wise nearest neighbour among active slots to the right.
  std::vector<double> nn_val(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> nn_idx(n, n);

  auto refresh = [&](std::size_t i) {
    nn_val[i] = std::numeric_limits<double>::infinity();
    nn_idx[i] = n;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!active[j]) continue;
      const double v = w.get(i, j);
      if (v < nn_val[i]) {
        nn_val[i] = v;
        nn_idx[i] = j;
      }
    }
  };
  for (std::size_t i = 0; i + 1 < n; ++i) refresh(i);

  Dendrogram dg;
  dg.leaves = n;
  dg.labels = dm.ids;
  if (dg.labels.size() != n) {
    dg.labels.clear();
    for (std::size_t i = 0; i < n; ++i) dg.labels.push_back(std::to_string(i));
  }
  dg.merges.reserve(n - 1);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && nn_idx[i] < n) best = std::min(best, nn_val[i]);
    const double limit = best + kTieTolerance * (std::abs(best) + 1e-9 * scale);

    std::size_t a = n, b = n;
    for (std::size_t i = 0; i < n && a == n; ++i) {
      if (!active[i] || nn_idx[i] == n || nn_val[i] > limit) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && w.get(i, j) <= limit) {
          a = i;
          b = j;
          break;
        }
      }
    }
    const double height = w.get(a, b);
    const double na = static_cast<double>(size[a]);
    const double nb = static_cast<double>(size[b]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == a || k == b) continue;
      const double nk = static_cast<double>(size[k]);
      const double v =
          ((na + nk) * w.get(a, k) + (nb + nk) * w.get(b, k) - nk * height) / (na + nb + nk);
      w.put(a, k, v);
    }
    dg.merges.push_back({node[a], node[b], height, size[a] + size[b]});
    active[b] = 0;
    size[a] += size[b];
    node[a] = n + step;

    refresh(a);
    for (std::size_t k = 0; k < a; ++k) {
      if (!active[k]) continue;
      if (nn_idx[k] == a || nn_idx[k] == b) {
        refresh(k);
      } else {
        const double v = w.get(k, a);
        if (v < nn_val[k] || (v == nn_val[k] && a < nn_idx[k])) {
          nn_val[k] = v;
          nn_idx[k] = a;
        }
      }
    }
    for (std::size_t k = a + 1; k < b; ++k)
      if (active[k] && nn_idx[k] == b) refresh(k);
  }
  return dg;
}

ClusterAssignment cut(const Dendrogram& dg, std::size_t k) {
  const std::size_t n = dg.leaves;
  if (k < 1 || k > n)
    throw InputError("k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k));
  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m < n - k; ++m) {
    const auto& mg = dg.merges[m];
    parent[find(mg.left)] = n + m;
    parent[find(mg.right)] = n + m;
  }
  ClusterAssignment out;
  out.labels.resize(n);
  std::vector<int> id_of(2 * n - 1, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto root = find(i);
    if (id_of[root] < 0) id_of[root] = next++;
    out.labels[i] = id_of[root];
  }
  out.k = static_cast<std::size_t>(next);
  return out;
}

namespace {

std::string newick_label(const std::string& s) {
  if (!s.empty() && s.find_first_of(" \t\n()[]':;,") == std::string::npos) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  return out + "'";
}

std::string format_length(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", std::max(0.0, v));
  return buf;
}

}  // namespace

std::string to_newick(const Dendrogram& dg, const std::vector<std::string>& labels) {
  const std::size_t n = dg.leaves;
  if (labels.size() != n) throw InputError("label count does not match dendrogram leaves");
  if (n == 1) return newick_label(labels[0]) + ";";
  auto height = [&](std::size_t id) { return id < n ? 0.0 : dg.merges[id - n].height / 2.0; };

  // Iterative post-order so deep (chained) trees do not exhaust the stack.
  std::vector<std::string> text(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) text[i] = newick_label(labels[i]);
  for (std::size_t m = 0; m < dg.merges.size(); ++m) {
    const auto& mg = dg.merges[m];
    const double h = mg.height / 2.0;
    std::string s = "(";
    s += text[mg.left];
    s += ':' + format_length(h - height(mg.left)) + ',';
    s += text[mg.right];
    s += ':' + format_length(h - height(mg.right)) + ')';
    text[n + m] = std::move(s);
    text[mg.left].clear();
    text[mg.right].clear();
  }
  return text[2 * n - 2] + ";";
}

std::string to_newick(const Dendrogram& dg) {
  if (dg.labels.size() == dg.leaves) return to_newick(dg, dg.labels);
  std::vector<std::string> labels(dg.leaves);
  for (std::size_t i = 0; i < dg.leaves; ++i) labels[i] = std::to_string(i);
  return to_newick(dg, labels);
}

InternalIndex parse_index(std::string_view name) {
  if (name == "asw") return InternalIndex::asw;
  if (name == "ch") return InternalIndex::ch;
  if (name == "dunn") return InternalIndex::dunn;
  throw InputError("unknown index '" + std::string(name) + "'");
}

std::string_view index_name(InternalIndex index) {
  switch (index) {
    case InternalIndex::asw: return "asw";
    case InternalIndex::ch: return "ch";
    case InternalIndex::dunn: return "dunn";
  }
  return "asw";
}

KEstimate estimate_k(const Dendrogram& dg, const DistanceMatrix& dm, const CountMatrix* vectors,
                     std::size_t k_min, std::size_t k_max, InternalIndex index,
                     unsigned threads) {
  const std::size_t n = dg.leaves;
  if (k_min < 2 || k_max > n - 1 || k_min > k_max)
    throw InputError("k range must satisfy 2 <= k_min <= k_max <= N-1 (N=" + std::to_string(n) + ")");
  if (index == InternalIndex::ch && vectors == nullptr)
    throw InputError("the CH index needs representation vectors");

  KEstimate est;
  est.scores.resize(k_max - k_min + 1);
  parallel_for(est.scores.size(), threads, [&](std::size_t s) {
    KScore& ks = est.scores[s];
    ks.k = k_min + s;
    const auto assign = cut(dg, ks.k);
    try {
      switch (index) {
        case InternalIndex::asw: ks.score = average_silhouette(dm, assign.labels); break;
        case InternalIndex::ch: ks.score = calinski_harabasz(*vectors, assign.labels); break;
        case InternalIndex::dunn: ks.score = dunn_index(dm, assign.labels); break;
      }
      ks.valid = !std::isnan(ks.score);
      if (!ks.valid) ks.note = "undefined index value";
    } catch (const InputError& e) {
      ks.valid = false;
      ks.note = e.what();
    }
  });
  bool found = false;
  double best = 0.0;
  for (const auto& ks : est.scores) {
    if (!ks.valid) continue;
    if (!found || ks.score > best) {
      best = ks.score;
      est.best_k = ks.k;
      found = true;
    }
  }
  if (!found) throw InputError("no k in range produced a valid index value");
  return est;
}

KEstimate combine_estimates(const std::vector<KEstimate>& curves,
                            const std::vector<double>& weights) {
  if (curves.empty()) throw InputError("nothing to combine");
  if (!weights.empty() && weights.size() != curves.size())
    throw InputError("one weight per index curve is required");
  const std::size_t len = curves.front().scores.size();
  for (const auto& c : curves)
    if (c.scores.size() != len) throw InputError("index curves cover different k ranges");

  KEstimate out;
  out.scores.resize(len);
  for (std::size_t s = 0; s < len; ++s) {
    out.scores[s].k = curves.front().scores[s].k;
    out.scores[s].valid = true;
  }
  double weight_sum = 0.0;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const double wgt = weights.empty() ? 1.0 : weights[c];
    weight_sum += wgt;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& ks : curves[c].scores)
      if (ks.valid && std::isfinite(ks.score)) {
        lo = std::min(lo, ks.score);
        hi = std::max(hi, ks.score);
      }
    for (std::size_t s = 0; s < len; ++s) {
      const auto& ks = curves[c].scores[s];
      if (!ks.valid) {
        out.scores[s].valid = false;
        continue;
      }
      double norm;
      if (std::isinf(ks.score)) norm = ks.score > 0 ? 1.0 : 0.0;
      else if (hi > lo) norm = (ks.score - lo) / (hi - lo);
      else norm = 1.0;
      out.scores[s].score += wgt * norm;
    }
  }
  bool found = false;
  double best = 0.0;
  for (auto& ks : out.scores) {
    if (!ks.valid) continue;
    ks.score /= weight_sum;
    if (!found || ks.score > best) {
      best = ks.score;
      out.best_k = ks.k;
      found = true;
    }
  }
  if (!found) throw InputError("no k is valid under every index");
  return out;
}

}  // namespace seqclus
