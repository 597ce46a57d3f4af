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

#include "seqclus/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>

#include "seqclus/common.hpp"
#include "seqclus/rng.hpp"
#include "seqclus/validation.hpp"

namespace seqclus {

PatternKind parse_pattern_kind(std::string_view name) {
  if (name == "shifted") return PatternKind::shifted;
  if (name == "gapped") return PatternKind::gapped;
  if (name == "pinned") return PatternKind::pinned;
  throw InputError("unknown pattern kind '" + std::string(name) + "'");
}

std::string_view pattern_kind_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::shifted: return "shifted";
    case PatternKind::gapped: return "gapped";
    case PatternKind::pinned: return "pinned";
  }
  return "shifted";
}

std::string alphabet_symbol(std::size_t i) {
  if (i >= 26) throw InputError("generated alphabets are limited to 26 symbols");
  return std::string(1, static_cast<char>('A' + i));
}

void ScenarioSpec::validate() const {
  if (clusters < 2) throw InputError("a scenario needs at least 2 clusters");
  if (sequences < clusters) throw InputError("fewer sequences than clusters");
  if (alphabet < 2 || alphabet > 26) throw InputError("alphabet size must lie in [2, 26]");
  if (length_min < 2 || length_max < length_min) throw InputError("invalid length range");
  if (pattern_length < 1) throw InputError("pattern length must be >= 1");
  std::size_t footprint = pattern_length;
  if (kind == PatternKind::gapped) {
    if (pattern_length_y < 1) throw InputError("gapped scenarios need a y pattern length");
    footprint += pattern_length_y;
  }
  if (footprint >= length_min)
    throw InputError("pattern does not fit: footprint " + std::to_string(footprint) +
                     " >= minimum length " + std::to_string(length_min));
  if (kind == PatternKind::pinned && length_min - pattern_length + 1 < clusters)
    throw InputError("not enough distinct offsets for pinned clusters");
  const std::size_t patterned = clusters - (background_cluster && kind != PatternKind::pinned ? 1 : 0);
  const double distinct = std::pow(static_cast<double>(alphabet), static_cast<double>(pattern_length));
  if (kind != PatternKind::pinned && distinct < static_cast<double>(patterned))
    throw InputError("alphabet too small for distinct cluster patterns");
}

std::string ScenarioSpec::describe() const {
  std::string s = std::string(pattern_kind_name(kind)) + " N=" + std::to_string(sequences) +
                  " a=" + std::to_string(alphabet) + " L=" + std::to_string(length_min);
  if (length_max != length_min) s += ".." + std::to_string(length_max);
  s += " Lp=" + std::to_string(pattern_length);
  if (kind == PatternKind::gapped) s += "+" + std::to_string(pattern_length_y);
  s += " C=" + std::to_string(clusters);
  return s;
}

namespace {

std::vector<Token> draw_pattern(Rng& rng, std::size_t length, std::size_t alphabet) {
  std::vector<Token> p(length);
  for (auto& t : p) t = static_cast<Token>(rng.below(alphabet));
  return p;
}

/// Distinct random patterns, one per slot.
std::vector<std::vector<Token>> draw_distinct(Rng& rng, std::size_t count, std::size_t length,
                                              std::size_t alphabet) {
  std::vector<std::vector<Token>> out;
  while (out.size() < count) {
    auto p = draw_pattern(rng, length, alphabet);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

GeneratedBatch gen_batch(const ScenarioSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  GeneratedBatch batch;
  const std::size_t c = spec.clusters;
  const bool pinned = spec.kind == PatternKind::pinned;
  const bool background = spec.background_cluster && !pinned;

  batch.patterns.assign(c, {});
  batch.patterns_y.assign(c, {});
  if (pinned) {
    const auto shared = draw_pattern(rng, spec.pattern_length, spec.alphabet);
    std::vector<long> offsets(spec.length_min - spec.pattern_length + 1);
    std::iota(offsets.begin(), offsets.end(), 0L);
    rng.shuffle(offsets);
    for (std::size_t k = 0; k < c; ++k) {
      batch.patterns[k] = shared;
      batch.pinned_offsets.push_back(offsets[k]);
    }
  } else {
    const std::size_t first = background ? 1 : 0;
    auto xs = draw_distinct(rng, c - first, spec.pattern_length, spec.alphabet);
    for (std::size_t k = first; k < c; ++k) batch.patterns[k] = xs[k - first];
    if (spec.kind == PatternKind::gapped) {
      auto ys = draw_distinct(rng, c - first, spec.pattern_length_y, spec.alphabet);
      for (std::size_t k = first; k < c; ++k) batch.patterns_y[k] = ys[k - first];
    }
  }

  // Near-equal cluster sizes, then a random order of labels.
  std::vector<int> labels;
  for (std::size_t k = 0; k < c; ++k) {
    const std::size_t size = spec.sequences / c + (k < spec.sequences % c ? 1 : 0);
    labels.insert(labels.end(), size, static_cast<int>(k));
  }
  rng.shuffle(labels);

  for (std::size_t i = 0; i < spec.sequences; ++i) {
    const int k = labels[i];
    const auto length =
        static_cast<std::size_t>(rng.between(static_cast<long>(spec.length_min),
                                             static_cast<long>(spec.length_max)));
    std::vector<Token> tokens(length);
    for (auto& t : tokens) t = static_cast<Token>(rng.below(spec.alphabet));

    PlantRecord rec;
    rec.cluster = k;
    const auto& x = batch.patterns[static_cast<std::size_t>(k)];
    if (!x.empty()) {
      if (pinned) {
        rec.offset = batch.pinned_offsets[static_cast<std::size_t>(k)];
      } else if (spec.kind == PatternKind::gapped) {
        const auto& y = batch.patterns_y[static_cast<std::size_t>(k)];
        const long slack = static_cast<long>(length - x.size() - y.size());
        const long gap = rng.between(0, slack);
        rec.offset = rng.between(0, slack - gap);
        rec.offset_y = rec.offset + static_cast<long>(x.size()) + gap;
        std::copy(y.begin(), y.end(), tokens.begin() + rec.offset_y);
      } else {
        rec.offset = rng.between(0, static_cast<long>(length - x.size()));
      }
      std::copy(x.begin(), x.end(), tokens.begin() + rec.offset);
    }

    std::vector<std::string> symbols;
    symbols.reserve(tokens.size());
    for (auto t : tokens) symbols.push_back(alphabet_symbol(t));
    batch.data.add("s" + std::to_string(i + 1), symbols, "c" + std::to_string(k));
    batch.truth.push_back(k);
    batch.plants.push_back(rec);
  }
  return batch;
}

namespace {

void accumulate(MethodSummary& s, const OutcomeRow& r) {
  ++s.runs;
  if (!r.ok) {
    ++s.failures;
    return;
  }
  s.purity += r.purity;
  s.ri += r.ri;
  s.ari += r.ari;
  s.f_measure += r.f_measure;
  s.asw += r.asw;
  s.one_nn += r.one_nn;
}

void finish(MethodSummary& s) {
  const std::size_t ok = s.runs - s.failures;
  if (ok == 0) return;
  const double d = static_cast<double>(ok);
  s.purity /= d;
  s.ri /= d;
  s.ari /= d;
  s.f_measure /= d;
  s.asw /= d;
  s.one_nn /= d;
}

std::vector<MethodSummary> summarize(const ExperimentReport& r,
                                     std::optional<std::size_t> cell) {
  std::vector<MethodSummary> out;
  for (const auto& m : r.methods) {
    const std::string label = m.label() + (m.is_ntreeclus() && m.window ? "-n" + std::to_string(m.window) : "");
    if (std::none_of(out.begin(), out.end(), [&](const auto& s) { return s.method == label; }))
      out.push_back({label});
  }
  for (const auto& row : r.rows) {
    if (cell && row.cell != *cell) continue;
    for (auto& s : out)
      if (s.method == row.method) accumulate(s, row);
  }
  for (auto& s : out) finish(s);
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::vector<MethodSummary> ExperimentReport::summary() const { return summarize(*this, std::nullopt); }

std::vector<MethodSummary> ExperimentReport::summary_for_cell(std::size_t cell) const {
  return summarize(*this, cell);
}

void ExperimentReport::write_csv(std::ostream& out) const {
  out << "cell,replication,seed,method,window,sequences,alphabet,length_min,length_max,"
         "pattern_kind,pattern_length,pattern_length_y,clusters,purity,ri,ari,f_measure,asw,"
         "one_nn,status\n";
  for (const auto& r : rows) {
    const auto& s = cells.at(r.cell);
    out << r.cell << ',' << r.replication << ',' << r.seed << ',' << r.method << ',' << r.window
        << ',' << s.sequences << ',' << s.alphabet << ',' << s.length_min << ',' << s.length_max
        << ',' << pattern_kind_name(s.kind) << ',' << s.pattern_length << ','
        << s.pattern_length_y << ',' << s.clusters << ',';
    if (r.ok) {
      out << fmt(r.purity) << ',' << fmt(r.ri) << ',' << fmt(r.ari) << ',' << fmt(r.f_measure)
          << ',' << fmt(r.asw) << ',' << fmt(r.one_nn) << ",ok\n";
    } else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      out << ",,,,,,error: " << msg << '\n';
    }
  }
}

namespace {

nlohmann::ordered_json spec_json(const ScenarioSpec& s) {
  return {{"sequences", s.sequences},
          {"alphabet", s.alphabet},
          {"length_min", s.length_min},
          {"length_max", s.length_max},
          {"pattern_kind", pattern_kind_name(s.kind)},
          {"pattern_length", s.pattern_length},
          {"pattern_length_y", s.pattern_length_y},
          {"clusters", s.clusters},
          {"background_cluster", s.background_cluster}};
}

nlohmann::ordered_json summary_json(const MethodSummary& s) {
  return {{"method", s.method},      {"runs", s.runs},       {"failures", s.failures},
          {"Purity", s.purity},      {"RI", s.ri},           {"ARI", s.ari},
          {"F-meas", s.f_measure},   {"ASW", s.asw},         {"1NN", s.one_nn}};
}

}  // namespace

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["seed"] = seed;
  j["replications"] = replications;
  auto cells_json = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto cj = spec_json(cells[c]);
    auto seeds = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < replications; ++r) seeds.push_back(derive_seed(seed, {c, r}));
    cj["batch_seeds"] = seeds;
    auto per = nlohmann::ordered_json::array();
    for (const auto& s : summary_for_cell(c)) per.push_back(summary_json(s));
    cj["summary"] = per;
    cells_json.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells_json);
  auto sum = nlohmann::ordered_json::array();
  for (const auto& s : summary()) sum.push_back(summary_json(s));
  j["summary"] = std::move(sum);
  return j.dump(2);
}

ExperimentReport run_experiment(const std::vector<ScenarioSpec>& grid,
                                const std::vector<MethodSpec>& methods,
                                std::size_t replications, std::uint64_t seed, unsigned threads) {
  for (const auto& s : grid) s.validate();
  if (methods.empty()) throw InputError("no methods given");
  if (replications < 1) throw InputError("replications must be >= 1");
  ExperimentReport report;
  report.seed = seed;
  report.replications = replications;
  report.cells = grid;
  report.methods = methods;

  const std::size_t jobs = grid.size() * replications;
  std::vector<std::vector<OutcomeRow>> slots(jobs);
  parallel_for(jobs, threads, [&](std::size_t job) {
    const std::size_t cell = job / replications;
    const std::size_t rep = job % replications;
    const std::uint64_t batch_seed = derive_seed(seed, {cell, rep});
    const auto batch = gen_batch(grid[cell], batch_seed);
    for (const auto& m : methods) {
      OutcomeRow row;
      row.cell = cell;
      row.replication = rep;
      row.seed = batch_seed;
      row.method = m.label() + (m.is_ntreeclus() && m.window ? "-n" + std::to_string(m.window) : "");
      try {
        const auto res = run_method(batch.data, m, batch_seed, 1);
        row.window = res.window;
        const auto dg = ward_linkage(res.distances);
        const auto assign = cut(dg, grid[cell].clusters);
        const ContingencyTable ct(assign.labels, batch.truth);
        row.purity = purity(ct);
        row.ri = rand_index(assign.labels, batch.truth);
        row.ari = adjusted_rand(assign.labels, batch.truth);
        row.f_measure = f_measure(ct);
        row.asw = average_silhouette(res.distances, assign.labels);
        row.one_nn = one_nn_accuracy(res.distances, batch.truth);
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
      slots[job].push_back(std::move(row));
    }
  });
  for (auto& s : slots)
    for (auto& r : s) report.rows.push_back(std::move(r));
  return report;
}

std::vector<KEstimateRow> run_k_estimation(const std::vector<ScenarioSpec>& grid,
                                           const std::vector<InternalIndex>& indices,
                                           std::size_t replications, std::size_t k_max,
                                           std::uint64_t seed, unsigned threads) {
  for (const auto& s : grid) s.validate();
  const std::size_t jobs = grid.size() * replications;
  std::vector<std::vector<KEstimateRow>> slots(jobs);
  parallel_for(jobs, threads, [&](std::size_t job) {
    const std::size_t cell = job / replications;
    const std::size_t rep = job % replications;
    const std::uint64_t batch_seed = derive_seed(seed, {cell, rep});
    auto make_row = [&](InternalIndex index) {
      KEstimateRow row;
      row.cell = cell;
      row.replication = rep;
      row.true_k = grid[cell].clusters;
      row.index = std::string(index_name(index));
      return row;
    };
    try {
      const auto batch = gen_batch(grid[cell], batch_seed);
      const auto res = run_method(batch.data, MethodSpec{}, batch_seed, 1);
      const auto dg = ward_linkage(res.distances);
      const std::size_t upper = std::min(k_max, batch.data.size() - 1);
      for (auto index : indices) {
        auto row = make_row(index);
        try {
          row.estimated_k =
              estimate_k(dg, res.distances, res.vectors ? &*res.vectors : nullptr, 2, upper, index)
                  .best_k;
        } catch (const std::exception& e) {
          row.ok = false;
          row.error = e.what();
        }
        slots[job].push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      for (auto index : indices) {
        auto row = make_row(index);
        row.ok = false;
        row.error = e.what();
        slots[job].push_back(std::move(row));
      }
    }
  });
  std::vector<KEstimateRow> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

void write_k_estimation_csv(std::ostream& out, const std::vector<KEstimateRow>& rows) {
  out << "cell,replication,true_k,index,estimated_k,status\n";
  for (const auto& r : rows) {
    out << r.cell << ',' << r.replication << ',' << r.true_k << ',' << r.index << ',';
    if (r.ok) out << r.estimated_k << ",ok\n";
    else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out << ",error: " << msg << '\n';
    }
  }
}

std::vector<CurvePoint> sensitivity_suite(SensitivityKind kind, std::uint64_t seed,
                                          std::size_t replications, unsigned threads) {
  std::vector<ScenarioSpec> grid;
  std::vector<std::size_t> params;
  for (std::size_t v = 20; v <= 200; v += 20) {
    ScenarioSpec s;
    s.alphabet = 10;
    s.pattern_length = 10;
    if (kind == SensitivityKind::instances) {
      s.sequences = v;
      s.length_min = s.length_max = 40;
    } else {
      s.sequences = 100;
      s.length_min = s.length_max = v;
    }
    grid.push_back(s);
    params.push_back(v);
  }
  const auto report = run_experiment(grid, {MethodSpec{}}, replications, seed, threads);
  std::vector<CurvePoint> out;
  for (std::size_t c = 0; c < grid.size(); ++c)
    out.push_back({params[c], report.summary_for_cell(c).front()});
  return out;
}

std::vector<MethodSpec> table_methods() {
  std::vector<MethodSpec> m;
  for (auto kind : {MethodKind::ntreeclus_dt, MethodKind::ntreeclus_rf, MethodKind::ntreeclus_dt_pos,
                    MethodKind::ntreeclus_rf_pos, MethodKind::levenshtein, MethodKind::jaro_winkler})
    m.push_back({kind});
  for (std::size_t k : {1, 2, 3, 0}) m.push_back({MethodKind::kmer, k});
  return m;
}

namespace {

ScenarioSpec make_spec(std::size_t n, std::size_t a, std::size_t lmin, std::size_t lmax,
                       PatternKind kind, std::size_t lp, std::size_t lp_y = 0,
                       std::size_t clusters = 2, bool background = true) {
  ScenarioSpec s;
  s.sequences = n;
  s.alphabet = a;
  s.length_min = lmin;
  s.length_max = lmax;
  s.kind = kind;
  s.pattern_length = lp;
  s.pattern_length_y = lp_y;
  s.clusters = clusters;
  s.background_cluster = background;
  return s;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"sim1-desk",   "sim1-full",  "sim2-desk",   "sim2-full",        "sim3-desk",
          "sim3-full",  "sim4-desk",   "sim4-full",  "window-desk",       "window-full",
          "kest-desk",   "kest-full",  "sens-instances", "sens-length"};
}

Preset make_preset(std::string_view name) {
  Preset p;
  p.name = name;
  using PK = PatternKind;
  if (name == "sim1-desk") {
    p.description = "shifted pattern; N=40, a in {4,10}, L=40, Lp=10, 5 replications";
    for (std::size_t a : {4, 10}) p.grid.push_back(make_spec(40, a, 40, 40, PK::shifted, 10));
    p.methods = table_methods();
    p.replications = 5;
  } else if (name == "sim1-full") {
    p.description = "shifted pattern; N in {40,120,200}, a in {4,6,10,20}, L in {20,40,90}, Lp in {6,10,15}, 10 replications";
    for (std::size_t n : {40, 120, 200})
      for (std::size_t a : {4, 6, 10, 20})
        for (std::size_t l : {20, 40, 90})
          for (std::size_t lp : {6, 10, 15}) p.grid.push_back(make_spec(n, a, l, l, PK::shifted, lp));
    p.methods = table_methods();
    p.replications = 10;
  } else if (name == "sim2-desk") {
    p.description = "gapped pattern pair; N=40, a in {4,10}, L=40, (x,y)=(4,6), 5 replications";
    for (std::size_t a : {4, 10}) p.grid.push_back(make_spec(40, a, 40, 40, PK::gapped, 4, 6));
    p.methods = table_methods();
    p.replications = 5;
  } else if (name == "sim2-full") {
    p.description = "gapped pattern pair; N in {40,120,200}, a in {4,6,10,20}, L in {20,40,90}, (x,y) in {(2,3),(4,6),(6,9)}, 10 replications";
    const std::pair<std::size_t, std::size_t> pairs[] = {{2, 3}, {4, 6}, {6, 9}};
    for (std::size_t n : {40, 120, 200})
      for (std::size_t a : {4, 6, 10, 20})
        for (std::size_t l : {20, 40, 90})
          for (auto [x, y] : pairs) p.grid.push_back(make_spec(n, a, l, l, PK::gapped, x, y));
    p.methods = table_methods();
    p.replications = 10;
  } else if (name == "sim3-desk") {
    p.description = "same pattern at cluster-specific offsets; N=120, a=7, L in [80,120], Lp=10, 5 replications";
    p.grid.push_back(make_spec(120, 7, 80, 120, PK::pinned, 10));
    p.methods = table_methods();
    p.replications = 5;
  } else if (name == "sim3-full") {
    p.description = "same pattern at cluster-specific offsets; N in {40,120,200}, a in {5,7,11,16}, L in [80,120], Lp in {6,10,20}, 10 replications";
    for (std::size_t n : {40, 120, 200})
      for (std::size_t a : {5, 7, 11, 16})
        for (std::size_t lp : {6, 10, 20}) p.grid.push_back(make_spec(n, a, 80, 120, PK::pinned, lp));
    p.methods = table_methods();
    p.replications = 10;
  } else if (name == "sim4-desk") {
    p.description = "shifted pattern, variable lengths; N=120, a=7, L in [80,120], Lp=10, 5 replications";
    p.grid.push_back(make_spec(120, 7, 80, 120, PK::shifted, 10));
    p.methods = table_methods();
    p.replications = 5;
  } else if (name == "sim4-full") {
    p.description = "shifted pattern, variable lengths; N in {40,120,200}, a in {5,7,11,16}, L in [80,120], Lp in {6,10,20}, 10 replications";
    for (std::size_t n : {40, 120, 200})
      for (std::size_t a : {5, 7, 11, 16})
        for (std::size_t lp : {6, 10, 20}) p.grid.push_back(make_spec(n, a, 80, 120, PK::shifted, lp));
    p.methods = table_methods();
    p.replications = 10;
  } else if (name == "window-desk" || name == "window-full") {
    const bool full = name == "window-full";
    p.description = full ? "window sweep n,k in [1,25]; N=180, L=40, a in {7,20}, Lp in {8,15}, 10 replications"
                          : "window sweep n,k in [1,25]; N=180, L=40, a=20, Lp=15, 3 replications";
    if (full) {
      for (std::size_t a : {7, 20})
        for (std::size_t lp : {8, 15}) p.grid.push_back(make_spec(180, a, 40, 40, PK::shifted, lp));
    } else {
      p.grid.push_back(make_spec(180, 20, 40, 40, PK::shifted, 15));
    }
    for (std::size_t n = 1; n <= 25; ++n) {
      p.methods.push_back({MethodKind::ntreeclus_rf, n});
      p.methods.push_back({MethodKind::kmer, n});
    }
    p.replications = full ? 10 : 3;
  } else if (name == "kest-desk" || name == "kest-full") {
    const bool full = name == "kest-full";
    p.description = full ? "cluster-count estimation; N in {30,100}, a in {4,7,20}, L in {50,100}, Lp in {7,18}, C in {3,6,10}, 3 replications"
                          : "cluster-count estimation; N=100, a in {4,20}, L in {50,100}, Lp in {7,18}, C in {3,6,10}, 1 replication";
    for (std::size_t c : {3, 6, 10}) {
      const auto ns = full ? std::vector<std::size_t>{30, 100} : std::vector<std::size_t>{100};
      const auto as = full ? std::vector<std::size_t>{4, 7, 20} : std::vector<std::size_t>{4, 20};
      for (auto n : ns)
        for (auto a : as)
          for (std::size_t l : {50, 100})
            for (std::size_t lp : {7, 18})
              p.grid.push_back(make_spec(n, a, l, l, PK::shifted, lp, 0, c, false));
    }
    p.methods = {MethodSpec{}};
    p.replications = full ? 3 : 1;
    p.k_estimation = true;
  } else if (name == "sens-instances" || name == "sens-length") {
    const bool inst = name == "sens-instances";
    p.description = inst ? "N in {20..200}, a=10, L=40, Lp=10, 4 replications"
                         : "N=100, a=10, L in {20..200}, Lp=10, 4 replications";
    for (std::size_t v = 20; v <= 200; v += 20)
      p.grid.push_back(inst ? make_spec(v, 10, 40, 40, PK::shifted, 10)
                            : make_spec(100, 10, v, v, PK::shifted, 10));
    p.methods = {MethodSpec{}};
    p.replications = 4;
  } else {
    throw InputError("unknown preset '" + std::string(name) + "'");
  }
  return p;
}

}  // namespace seqclus
