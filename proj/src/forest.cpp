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

#include "seqclus/forest.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numeric>

#include "seqclus/common.hpp"
#include "seqclus/rng.hpp"

namespace seqclus {

ForestParams ForestParams::single_tree(std::uint64_t seed) {
  ForestParams p;
  p.trees = 1;
  p.mode = ForestMode::single_tree;
  p.bootstrap = false;
  p.seed = seed;
  return p;
}

ForestParams ForestParams::forest(std::size_t trees, std::uint64_t seed) {
  ForestParams p;
  p.trees = trees;
  p.seed = seed;
  return p;
}

ForestParams ForestParams::resolved(std::size_t num_features) const {
  if (num_features == 0) throw InputError("forest needs at least one feature column");
  ForestParams p = *this;
  if (p.mode == ForestMode::single_tree) {
    p.trees = 1;
    p.bootstrap = false;
    p.mtry = num_features;
  } else if (p.mtry == 0) {
    p.mtry = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(num_features))));
  }
  if (p.trees < 1) throw InputError("tree count must be >= 1");
  if (p.mtry < 1 || p.mtry > num_features)
    throw InputError("mtry must lie in [1, " + std::to_string(num_features) + "]");
  if (p.min_leaf < 1) throw InputError("min_leaf must be >= 1");
  return p;
}

double gini(std::span<const std::uint32_t> histogram) {
  std::uint64_t total = 0;
  for (auto c : histogram) total += c;
  if (total == 0) throw InputError("gini of an empty histogram");
  double sum_sq = 0.0;
  for (auto c : histogram) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

namespace {

using i128 = __int128;

// Weighted child impurity is minimised by maximising SL/nL + SR/nR, where
// S = sum of squared class counts on a side. Scores are kept as exact
// fractions so equal splits compare equal and tie-breaks are reproducible.
struct Score {
  i128 num = 0;
  i128 den = 1;
};

bool better(const Score& a, const Score& b) { return a.num * b.den > b.num * a.den; }

struct Candidate {
  Score score;
  double threshold = 0.0;
  bool valid = false;
};

class SplitSearch {
 public:
  SplitSearch(const std::vector<std::vector<std::int32_t>>& columns,
              std::span<const std::int32_t> target, std::size_t num_classes, std::size_t min_leaf)
      : columns_(columns), target_(target), classes_(num_classes), min_leaf_(min_leaf) {
    col_min_.resize(columns.size());
    col_max_.resize(columns.size());
    for (std::size_t f = 0; f < columns.size(); ++f) {
      const auto& col = columns[f];
      if (col.empty()) continue;
      auto [lo, hi] = std::minmax_element(col.begin(), col.end());
      col_min_[f] = *lo;
      col_max_[f] = *hi;
    }
  }

  /// Prepares the class totals of a node. Returns false when the node cannot
  /// be split at all (too few rows or pure).
  bool prepare(std::span<const std::uint32_t> rows) {
    rows_ = rows;
    total_.assign(classes_, 0);
    for (auto r : rows) ++total_[static_cast<std::size_t>(target_[r])];
    parent_sq_ = 0;
    std::size_t nonzero = 0;
    for (auto c : total_) {
      parent_sq_ += static_cast<std::int64_t>(c) * c;
      if (c) ++nonzero;
    }
    return rows.size() >= 2 * min_leaf_ && nonzero >= 2;
  }

  /// Best threshold on one feature, or invalid when none reduces impurity.
  Candidate search(std::size_t feature) {
    const auto& col = columns_[feature];
    const std::int64_t range =
        static_cast<std::int64_t>(col_max_[feature]) - col_min_[feature] + 1;
    const auto m = static_cast<std::int64_t>(rows_.size());
    if (range * static_cast<std::int64_t>(classes_) <= 2 * m + 64)
      return search_counting(col, col_min_[feature], static_cast<std::size_t>(range));
    return search_sorted(col);
  }

 private:
  // Sweep state shared by both strategies.
  struct Sweep {
    std::vector<std::int64_t> left;
    std::int64_t n_left = 0;
    std::int64_t sq_left = 0;
    std::int64_t sq_right = 0;
  };

  void start(Sweep& s) const {
    s.left.assign(classes_, 0);
    s.n_left = 0;
    s.sq_left = 0;
    s.sq_right = parent_sq_;
  }

  void move_left(Sweep& s, std::size_t cls, std::int64_t c) const {
    const std::int64_t l = s.left[cls];
    const std::int64_t r = static_cast<std::int64_t>(total_[cls]) - l;
    s.sq_left += 2 * l * c + c * c;
    s.sq_right += -2 * r * c + c * c;
    s.left[cls] = l + c;
    s.n_left += c;
  }

  void consider(const Sweep& s, double threshold, Candidate& best) const {
    const auto m = static_cast<std::int64_t>(rows_.size());
    const std::int64_t n_left = s.n_left;
    const std::int64_t n_right = m - n_left;
    if (n_left < static_cast<std::int64_t>(min_leaf_) ||
        n_right < static_cast<std::int64_t>(min_leaf_))
      return;
    Score score{static_cast<i128>(s.sq_left) * n_right + static_cast<i128>(s.sq_right) * n_left,
                static_cast<i128>(n_left) * n_right};
    // Must strictly beat the unsplit node (score parent_sq / m).
    if (!(score.num * m > static_cast<i128>(parent_sq_) * score.den)) return;
    if (!best.valid || better(score, best.score)) {
      best.score = score;
      best.threshold = threshold;
      best.valid = true;
    }
  }

  Candidate search_counting(const std::vector<std::int32_t>& col, std::int32_t lo,
                            std::size_t range) {
    counts_.assign(range * classes_, 0);
    present_.assign(range, 0);
    for (auto r : rows_) {
      const auto v = static_cast<std::size_t>(col[r] - lo);
      ++counts_[v * classes_ + static_cast<std::size_t>(target_[r])];
      present_[v] = 1;
    }
    Candidate best;
    Sweep s;
    start(s);
    std::size_t prev = range;
    for (std::size_t v = 0; v < range; ++v) {
      if (!present_[v]) continue;
      if (prev != range)
        consider(s, (static_cast<double>(prev) + static_cast<double>(v)) / 2.0 + lo, best);
      for (std::size_t k = 0; k < classes_; ++k)
        if (auto c = counts_[v * classes_ + k]) move_left(s, k, c);
      prev = v;
    }
    return best;
  }

  Candidate search_sorted(const std::vector<std::int32_t>& col) {
    pairs_.clear();
    pairs_.reserve(rows_.size());
    for (auto r : rows_) pairs_.emplace_back(col[r], target_[r]);
    std::sort(pairs_.begin(), pairs_.end());
    Candidate best;
    Sweep s;
    start(s);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i > 0 && pairs_[i].first != pairs_[i - 1].first)
        consider(s, (static_cast<double>(pairs_[i - 1].first) + pairs_[i].first) / 2.0, best);
      move_left(s, static_cast<std::size_t>(pairs_[i].second), 1);
    }
    return best;
  }

  const std::vector<std::vector<std::int32_t>>& columns_;
  std::span<const std::int32_t> target_;
  std::size_t classes_;
  std::size_t min_leaf_;
  std::vector<std::int32_t> col_min_, col_max_;
  std::span<const std::uint32_t> rows_;
  std::vector<std::uint32_t> total_;
  std::int64_t parent_sq_ = 0;
  std::vector<std::int64_t> counts_;
  std::vector<std::uint8_t> present_;
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs_;
};

/// Best split among `features` (evaluated in ascending index order so the
/// lower index wins ties).
std::optional<SplitRule> best_among(SplitSearch& search, std::vector<std::size_t> features) {
  std::sort(features.begin(), features.end());
  std::optional<SplitRule> rule;
  Candidate best;
  for (auto f : features) {
    Candidate c = search.search(f);
    if (c.valid && (!best.valid || better(c.score, best.score))) {
      best = c;
      rule = SplitRule{f, c.threshold};
    }
  }
  return rule;
}

TreeModel grow_tree(const SegmentedMatrix& sm, const ForestParams& params, std::size_t tree_index) {
  Rng rng(derive_seed(params.seed, {tree_index}));
  const std::size_t m = sm.rows();
  const std::size_t nf = sm.num_features();

  std::vector<std::uint32_t> rows(m);
  if (params.bootstrap) {
    for (auto& r : rows) r = static_cast<std::uint32_t>(rng.below(m));
  } else {
    std::iota(rows.begin(), rows.end(), 0u);
  }

  SplitSearch search(sm.columns, sm.target, sm.num_classes, params.min_leaf);
  TreeModel tree;
  struct Pending {
    std::uint32_t node;
    std::size_t begin, end, depth;
  };
  std::vector<Pending> stack;
  tree.nodes.emplace_back();
  stack.push_back({0, 0, m, 0});
  std::vector<std::size_t> order(nf);

  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    std::span<const std::uint32_t> node_rows(rows.data() + p.begin, p.end - p.begin);
    tree.nodes[p.node].samples = static_cast<std::uint32_t>(node_rows.size());

    std::optional<SplitRule> rule;
    const bool depth_ok = params.max_depth == 0 || p.depth < params.max_depth;
    if (depth_ok && search.prepare(node_rows)) {
      if (params.mtry >= nf) {
        std::iota(order.begin(), order.end(), 0);
        rule = best_among(search, order);
      } else {
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        rule = best_among(search, {order.begin(), order.begin() + static_cast<long>(params.mtry)});
        // Keep drawing features beyond mtry until one yields a valid split.
        for (std::size_t k = params.mtry; !rule && k < nf; ++k) rule = best_among(search, {order[k]});
      }
    }

    if (!rule) {
      std::vector<std::uint32_t> hist(sm.num_classes, 0);
      for (auto r : node_rows) ++hist[static_cast<std::size_t>(sm.target[r])];
      auto& node = tree.nodes[p.node];
      node.hist_begin = static_cast<std::uint32_t>(tree.histogram.size());
      for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k]) tree.histogram.push_back({static_cast<std::uint32_t>(k), hist[k]});
      node.hist_end = static_cast<std::uint32_t>(tree.histogram.size());
      continue;
    }

    const auto& col = sm.columns[rule->feature];
    auto mid = std::partition(rows.begin() + static_cast<long>(p.begin),
                              rows.begin() + static_cast<long>(p.end),
                              [&](std::uint32_t r) { return col[r] <= rule->threshold; });
    const auto split = static_cast<std::size_t>(mid - rows.begin());
    const auto left = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes.emplace_back();
    auto& node = tree.nodes[p.node];
    node.feature = static_cast<std::int32_t>(rule->feature);
    node.threshold = rule->threshold;
    node.left = left;
    node.right = left + 1;
    // Right pushed first so the left subtree is grown first.
    stack.push_back({left + 1, split, p.end, p.depth + 1});
    stack.push_back({left, p.begin, split, p.depth + 1});
  }

  // Local terminal ids in left-to-right leaf order.
  std::vector<std::uint32_t> walk{0};
  std::uint32_t next = 0;
  while (!walk.empty()) {
    const auto id = walk.back();
    walk.pop_back();
    auto& node = tree.nodes[id];
    if (node.is_leaf()) {
      node.terminal = next++;
    } else {
      walk.push_back(node.right);
      walk.push_back(node.left);
    }
  }
  tree.num_leaves = next;
  return tree;
}

}  // namespace

std::optional<SplitRule> best_split(const std::vector<std::vector<std::int32_t>>& columns,
                                    std::span<const std::int32_t> target,
                                    std::span<const std::uint32_t> rows,
                                    std::span<const std::size_t> features,
                                    std::size_t num_classes, std::size_t min_leaf) {
  for (auto f : features)
    if (f >= columns.size()) throw InputError("feature index out of range");
  SplitSearch search(columns, target, num_classes, min_leaf);
  if (!search.prepare(rows)) return std::nullopt;
  return best_among(search, {features.begin(), features.end()});
}

std::uint32_t TreeModel::leaf_of(std::span<const std::int32_t> row) const {
  std::uint32_t id = 0;
  while (!nodes[id].is_leaf()) {
    const auto& n = nodes[id];
    id = row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return id;
}

std::size_t TreeModel::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> walk{{0, 0}};
  while (!walk.empty()) {
    auto [id, d] = walk.back();
    walk.pop_back();
    best = std::max(best, d);
    if (!nodes[id].is_leaf()) {
      walk.emplace_back(nodes[id].left, d + 1);
      walk.emplace_back(nodes[id].right, d + 1);
    }
  }
  return best;
}

std::vector<std::uint32_t> ForestModel::route(std::span<const std::int32_t> row) const {
  if (row.size() != num_features)
    throw InputError("row has " + std::to_string(row.size()) + " features, model expects " +
                     std::to_string(num_features));
  std::vector<std::uint32_t> out;
  out.reserve(trees.size());
  for (const auto& t : trees) out.push_back(t.route(row));
  return out;
}

ForestModel train_forest(const SegmentedMatrix& sm, const ForestParams& params, unsigned threads) {
  if (sm.rows() == 0) throw InputError("cannot train on an empty segmented matrix");
  if (sm.num_classes == 0) throw InputError("segmented matrix has no target classes");
  ForestModel fm;
  fm.params = params.resolved(sm.num_features());
  fm.num_features = sm.num_features();
  fm.num_classes = sm.num_classes;
  fm.trees.resize(fm.params.trees);
  parallel_for(fm.trees.size(), threads,
               [&](std::size_t k) { fm.trees[k] = grow_tree(sm, fm.params, k); });

  std::uint32_t offset = 0;
  for (auto& t : fm.trees) {
    t.first_terminal = offset;
    for (auto& n : t.nodes)
      if (n.is_leaf()) n.terminal += offset;
    offset += t.num_leaves;
  }
  fm.total_terminals = offset;
  return fm;
}

namespace {
constexpr const char* kModelFormat = "seqclus-forest";
constexpr int kModelVersion = 1;
}  // namespace

std::string ForestModel::to_json() const {
  using nlohmann::json;
  json j;
  j["format"] = kModelFormat;
  j["version"] = kModelVersion;
  j["params"] = {{"trees", params.trees},
                 {"mode", params.mode == ForestMode::forest ? "forest" : "single_tree"},
                 {"mtry", params.mtry},
                 {"bootstrap", params.bootstrap},
                 {"min_leaf", params.min_leaf},
                 {"max_depth", params.max_depth},
                 {"seed", params.seed}};
  j["num_features"] = num_features;
  j["num_classes"] = num_classes;
  j["total_terminals"] = total_terminals;
  json trees_json = json::array();
  for (const auto& t : trees) {
    json tj;
    std::vector<std::int32_t> feature;
    std::vector<double> threshold;
    std::vector<std::uint32_t> left, right, terminal, samples, hist_begin, hist_end, cls, count;
    for (const auto& n : t.nodes) {
      feature.push_back(n.feature);
      threshold.push_back(n.threshold);
      left.push_back(n.left);
      right.push_back(n.right);
      terminal.push_back(n.terminal);
      samples.push_back(n.samples);
      hist_begin.push_back(n.hist_begin);
      hist_end.push_back(n.hist_end);
    }
    for (const auto& h : t.histogram) {
      cls.push_back(h.cls);
      count.push_back(h.count);
    }
    tj["first_terminal"] = t.first_terminal;
    tj["num_leaves"] = t.num_leaves;
    tj["feature"] = feature;
    tj["threshold"] = threshold;
    tj["left"] = left;
    tj["right"] = right;
    tj["terminal"] = terminal;
    tj["samples"] = samples;
    tj["hist_begin"] = hist_begin;
    tj["hist_end"] = hist_end;
    tj["hist_class"] = cls;
    tj["hist_count"] = count;
    trees_json.push_back(std::move(tj));
  }
  j["trees"] = std::move(trees_json);
  return j.dump();
}

ForestModel ForestModel::from_json(const std::string& text) {
  using nlohmann::json;
  ForestModel fm;
  try {
    const json j = json::parse(text);
    if (j.at("format") != kModelFormat) throw InputError("not a seqclus forest model");
    if (j.at("version") != kModelVersion)
      throw InputError("unsupported model version " + j.at("version").dump());
    const auto& p = j.at("params");
    fm.params.trees = p.at("trees");
    fm.params.mode = p.at("mode") == "forest" ? ForestMode::forest : ForestMode::single_tree;
    fm.params.mtry = p.at("mtry");
    fm.params.bootstrap = p.at("bootstrap");
    fm.params.min_leaf = p.at("min_leaf");
    fm.params.max_depth = p.at("max_depth");
    fm.params.seed = p.at("seed");
    fm.num_features = j.at("num_features");
    fm.num_classes = j.at("num_classes");
    fm.total_terminals = j.at("total_terminals");
    for (const auto& tj : j.at("trees")) {
      TreeModel t;
      t.first_terminal = tj.at("first_terminal");
      t.num_leaves = tj.at("num_leaves");
      const auto feature = tj.at("feature").get<std::vector<std::int32_t>>();
      const auto threshold = tj.at("threshold").get<std::vector<double>>();
      const auto left = tj.at("left").get<std::vector<std::uint32_t>>();
      const auto right = tj.at("right").get<std::vector<std::uint32_t>>();
      const auto terminal = tj.at("terminal").get<std::vector<std::uint32_t>>();
      const auto samples = tj.at("samples").get<std::vector<std::uint32_t>>();
      const auto hist_begin = tj.at("hist_begin").get<std::vector<std::uint32_t>>();
      const auto hist_end = tj.at("hist_end").get<std::vector<std::uint32_t>>();
      const auto cls = tj.at("hist_class").get<std::vector<std::uint32_t>>();
      const auto count = tj.at("hist_count").get<std::vector<std::uint32_t>>();
      const std::size_t n = feature.size();
      if (threshold.size() != n || left.size() != n || right.size() != n ||
          terminal.size() != n || samples.size() != n || hist_begin.size() != n ||
          hist_end.size() != n || cls.size() != count.size() || n == 0)
        throw InputError("inconsistent tree arrays in model");
      for (std::size_t i = 0; i < n; ++i) {
        TreeNode node{feature[i], threshold[i], left[i],     right[i],
                      terminal[i], samples[i],  hist_begin[i], hist_end[i]};
        if (!node.is_leaf() &&
            (node.left >= n || node.right >= n ||
             static_cast<std::size_t>(node.feature) >= fm.num_features))
          throw InputError("corrupt tree node in model");
        t.nodes.push_back(node);
      }
      for (std::size_t i = 0; i < cls.size(); ++i) t.histogram.push_back({cls[i], count[i]});
      fm.trees.push_back(std::move(t));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
  return fm;
}

}  // namespace seqclus
