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

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "seqclus/baselines.hpp"
#include "seqclus/clustering.hpp"
#include "seqclus/common.hpp"
#include "seqclus/dataset.hpp"
#include "seqclus/encoder.hpp"
#include "seqclus/methods.hpp"
#include "seqclus/rng.hpp"
#include "seqclus/segmentation.hpp"
#include "seqclus/simulation.hpp"
#include "seqclus/validation.hpp"

namespace {

using namespace seqclus;
using json = nlohmann::ordered_json;

struct Config {
  std::string command;
  std::string input;
  std::string format;
  bool label_column = false;
  bool id_column = false;
  std::string method = "ntreeclus-rf";
  std::size_t n = 0;
  std::size_t t = 10;
  std::uint64_t seed = 42;
  std::string metric = "cosine";
  std::size_t k = 0;
  std::string k_range;
  std::string index = "asw";
  std::string weights;
  bool position = false;
  bool dense = false;
  std::string out;
  std::string save_model;
  std::string dump_segments;
  std::string dist_out;
  std::string newick;
  std::string assign_out;
  std::string scores_out;
  std::string preset;
  std::size_t replications = 0;
  std::size_t sequences = 200;
  std::size_t length = 100;
  unsigned threads = 0;

  /// Fields that determine results; threads and output paths are excluded.
  json hashed() const {
    return {{"command", command}, {"input", input},     {"format", format},
            {"label_column", label_column}, {"id_column", id_column}, {"method", method},
            {"n", n},             {"t", t},             {"seed", seed},
            {"metric", metric},   {"k", k},             {"k_range", k_range},
            {"index", index},     {"weights", weights}, {"position", position},
            {"dense", dense},     {"preset", preset},   {"replications", replications},
            {"sequences", sequences}, {"length", length}};
  }
};

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Tracks written files so a failed run leaves nothing behind.
class Outputs {
 public:
  std::ofstream open(const std::string& path) {
    paths_.push_back(path);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    return f;
  }
  void write(const std::string& path, const std::string& text) {
    auto f = open(path);
    f << text;
    if (!f) throw InputError("write failed for '" + path + "'");
  }
  void remove_all() {
    std::error_code ec;
    for (const auto& p : paths_) std::filesystem::remove(p, ec);
  }
  const std::vector<std::string>& paths() const { return paths_; }

 private:
  std::vector<std::string> paths_;
};

void write_manifest(Outputs& out, const std::string& artifact, const Config& cfg,
                    json extra = json::object()) {
  json m;
  m["tool"] = "seqclus";
  m["version"] = kVersion;
  m["command"] = cfg.command;
  m["seed"] = cfg.seed;
  m["config"] = cfg.hashed();
  m["config_hash"] = hex64(fnv1a(cfg.hashed().dump()));
  m["artifact"] = std::filesystem::path(artifact).filename().string();
  for (auto& [key, value] : extra.items()) m[key] = value;
  m["timestamp"] = utc_now();
  out.write(artifact + ".manifest.json", m.dump(2) + "\n");
}

InputFormat infer_format(const Config& cfg) {
  if (!cfg.format.empty()) return parse_format(cfg.format);
  const auto ext = std::filesystem::path(cfg.input).extension().string();
  if (ext == ".fa" || ext == ".fasta" || ext == ".fna" || ext == ".faa") return InputFormat::fasta;
  if (ext == ".csv") return InputFormat::csv;
  return InputFormat::lines;
}

SequenceDataset load(const Config& cfg) {
  if (cfg.input.empty()) throw InputError("--input is required");
  LoadOptions opt;
  opt.format = infer_format(cfg);
  opt.label_column = cfg.label_column;
  opt.id_column = cfg.id_column;
  return load_sequences_file(cfg.input, opt);
}

MethodSpec method_spec(const Config& cfg) {
  MethodSpec m;
  m.kind = parse_method(cfg.method);
  if (cfg.position) {
    if (m.kind == MethodKind::ntreeclus_rf) m.kind = MethodKind::ntreeclus_rf_pos;
    else if (m.kind == MethodKind::ntreeclus_dt) m.kind = MethodKind::ntreeclus_dt_pos;
    else if (!m.is_ntreeclus()) throw InputError("--position applies to nTreeClus methods only");
  }
  m.window = cfg.n;
  if (cfg.t < 1) throw InputError("--t must be >= 1");
  m.trees = cfg.t;
  m.metric = parse_metric(cfg.metric);
  if (m.metric != Metric::cosine && m.metric != Metric::manhattan)
    throw InputError("--metric must be cosine or manhattan");
  return m;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--k-range must look like a:b");
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const auto a = std::stoul(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    const auto b = std::stoul(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("--k-range must look like a:b");
  }
}

std::vector<InternalIndex> parse_indices(const std::string& text) {
  std::vector<InternalIndex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_index(item));
  if (out.empty()) throw InputError("--index is empty");
  return out;
}

std::vector<double> parse_weights(const std::string& text, std::size_t count) {
  if (text.empty()) return {};
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw InputError("bad weight '" + item + "'");
    }
  }
  if (out.size() != count) throw InputError("--weights needs one value per index");
  return out;
}

std::string fmt_score(double v) {
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

json json_score(double v) {
  if (std::isfinite(v)) return v;
  return fmt_score(v);
}

/// Runs every requested index over the k range and combines them when there
/// is more than one.
KEstimate estimate(const Config& cfg, const Dendrogram& dg, const MethodResult& res,
                   std::vector<std::pair<InternalIndex, KEstimate>>& curves) {
  auto [lo, hi] = parse_range(cfg.k_range);
  const auto indices = parse_indices(cfg.index);
  const auto weights = parse_weights(cfg.weights, indices.size());
  const CountMatrix* vectors = res.vectors ? &*res.vectors : nullptr;
  std::vector<KEstimate> raw;
  for (auto index : indices) {
    if (index == InternalIndex::ch && !vectors)
      throw InputError("the ch index needs a vector representation; method '" + cfg.method +
                       "' only yields distances");
    raw.push_back(estimate_k(dg, res.distances, vectors, lo, hi, index, cfg.threads));
    curves.emplace_back(index, raw.back());
  }
  if (raw.size() == 1) return raw.front();
  return combine_estimates(raw, weights);
}

void write_scores(Outputs& out, const std::string& path,
                  const std::vector<std::pair<InternalIndex, KEstimate>>& curves,
                  const std::optional<KEstimate>& combined) {
  auto f = out.open(path);
  f << "k\tindex\tscore\tvalid\n";
  for (const auto& [index, est] : curves)
    for (const auto& s : est.scores)
      f << s.k << '\t' << index_name(index) << '\t' << fmt_score(s.score) << '\t'
        << (s.valid ? 1 : 0) << '\n';
  if (combined)
    for (const auto& s : combined->scores)
      f << s.k << "\tcombined\t" << fmt_score(s.score) << '\t' << (s.valid ? 1 : 0) << '\n';
}

json curves_json(const std::vector<std::pair<InternalIndex, KEstimate>>& curves) {
  json j = json::object();
  for (const auto& [index, est] : curves) {
    json c = json::array();
    for (const auto& s : est.scores)
      c.push_back({{"k", s.k}, {"score", json_score(s.score)}, {"valid", s.valid}});
    j[std::string(index_name(index))] = {{"best_k", est.best_k}, {"scores", c}};
  }
  return j;
}

void write_distances(Outputs& out, const Config& cfg, const DistanceMatrix& dm) {
  if (cfg.dist_out.empty()) return;
  auto f = out.open(cfg.dist_out);
  write_distance_tsv(f, dm);
  f.close();
  write_manifest(out, cfg.dist_out, cfg);
}

int cmd_encode(const Config& cfg, Outputs& out) {
  const auto ds = load(cfg);
  const auto spec = method_spec(cfg);
  if (cfg.out.empty()) throw InputError("--out is required");
  std::vector<std::string> ids;
  for (const auto& s : ds.sequences()) ids.push_back(s.id);

  json extra;
  if (spec.is_ntreeclus()) {
    EncodeOptions opt;
    opt.variant = spec.kind == MethodKind::ntreeclus_dt       ? Variant::dt
                  : spec.kind == MethodKind::ntreeclus_dt_pos ? Variant::dt_pos
                  : spec.kind == MethodKind::ntreeclus_rf_pos ? Variant::rf_pos
                                                              : Variant::rf;
    opt.window = cfg.n;
    opt.trees = cfg.t;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    const auto enc = encode_corpus(ds, opt);
    const auto& rep = enc.representation;
    {
      auto f = out.open(cfg.out);
      if (cfg.dense) write_dense_tsv(f, rep.counts, rep.seq_ids);
      else write_sparse_tsv(f, rep.counts, rep.seq_ids);
    }
    if (!cfg.save_model.empty()) out.write(cfg.save_model, enc.model.to_json() + "\n");
    if (!cfg.dump_segments.empty()) {
      const auto sm = segment(ds, rep.window, variant_uses_position(rep.variant), cfg.threads);
      auto f = out.open(cfg.dump_segments);
      write_segments_tsv(f, sm, ds.alphabet());
    }
    extra = {{"window", rep.window},
             {"trees", rep.trees},
             {"variant", variant_name(rep.variant)},
             {"terminal_nodes", rep.counts.cols()}};
  } else if (spec.kind == MethodKind::kmer) {
    const std::size_t k = cfg.n == 0 ? sqrt_mean_length(ds) : cfg.n;
    const auto prof = kmer_profiles(ds, k, cfg.threads);
    auto f = out.open(cfg.out);
    if (cfg.dense) {
      std::vector<std::string> names;
      for (std::size_t j = 0; j < prof.keys.size(); ++j)
        names.push_back(prof.key_label(j, ds.alphabet()));
      write_dense_tsv(f, prof.counts, ids, names);
    } else {
      write_sparse_tsv(f, prof.counts, ids);
    }
    extra = {{"k", k}, {"features", prof.counts.cols()}};
  } else {
    throw InputError("encode supports nTreeClus and kmer methods only");
  }
  write_manifest(out, cfg.out, cfg, extra);
  return 0;
}

void write_assignment(Outputs& out, const std::string& path, const SequenceDataset& ds,
                      const ClusterAssignment& a) {
  auto f = out.open(path);
  f << "seq_id,cluster\n";
  for (std::size_t i = 0; i < ds.size(); ++i) f << ds[i].id << ',' << a.labels[i] << '\n';
}

int cmd_cluster(const Config& cfg, Outputs& out) {
  const auto ds = load(cfg);
  const auto spec = method_spec(cfg);
  if (cfg.k == 0 && cfg.k_range.empty()) throw InputError("cluster needs --k or --k-range");
  if (cfg.k != 0 && !cfg.k_range.empty()) throw InputError("--k and --k-range are exclusive");
  const auto res = run_method(ds, spec, cfg.seed, cfg.threads);
  const auto dg = ward_linkage(res.distances);

  std::size_t k = cfg.k;
  std::vector<std::pair<InternalIndex, KEstimate>> curves;
  std::optional<KEstimate> combined;
  if (k == 0) {
    const auto est = estimate(cfg, dg, res, curves);
    if (curves.size() > 1) combined = est;
    k = est.best_k;
    if (k == 0) throw InputError("no k in range produced a valid index value");
  }
  if (k > ds.size()) throw InputError("--k exceeds the number of sequences");
  const auto assign = cut(dg, k);

  const std::string assign_path = !cfg.assign_out.empty() ? cfg.assign_out : cfg.out;
  json extra = {{"method", spec.label()}, {"window", res.window}, {"k", k}};
  if (!assign_path.empty()) {
    write_assignment(out, assign_path, ds, assign);
    write_manifest(out, assign_path, cfg, extra);
  } else {
    std::cout << "seq_id,cluster\n";
    for (std::size_t i = 0; i < ds.size(); ++i) std::cout << ds[i].id << ',' << assign.labels[i] << '\n';
  }
  if (!cfg.newick.empty()) {
    out.write(cfg.newick, to_newick(dg) + "\n");
    write_manifest(out, cfg.newick, cfg, extra);
  }
  if (!cfg.scores_out.empty()) {
    if (curves.empty()) throw InputError("--scores-out needs --k-range");
    write_scores(out, cfg.scores_out, curves, combined);
    write_manifest(out, cfg.scores_out, cfg, extra);
  }
  write_distances(out, cfg, res.distances);
  return 0;
}

int cmd_estimate_k(const Config& cfg, Outputs& out) {
  const auto ds = load(cfg);
  const auto spec = method_spec(cfg);
  if (cfg.k_range.empty()) throw InputError("estimate-k needs --k-range a:b");
  const auto res = run_method(ds, spec, cfg.seed, cfg.threads);
  const auto dg = ward_linkage(res.distances);
  std::vector<std::pair<InternalIndex, KEstimate>> curves;
  const auto est = estimate(cfg, dg, res, curves);
  json j;
  j["best_k"] = est.best_k;
  j["method"] = spec.label();
  j["window"] = res.window;
  j["indices"] = curves_json(curves);
  if (curves.size() > 1) {
    json c = json::array();
    for (const auto& s : est.scores)
      c.push_back({{"k", s.k}, {"score", json_score(s.score)}, {"valid", s.valid}});
    j["combined"] = {{"weights", cfg.weights.empty() ? "equal" : cfg.weights}, {"scores", c}};
  }
  if (!cfg.scores_out.empty()) {
    write_scores(out, cfg.scores_out, curves,
                 curves.size() > 1 ? std::optional<KEstimate>(est) : std::nullopt);
    write_manifest(out, cfg.scores_out, cfg);
  }
  if (!cfg.out.empty()) {
    out.write(cfg.out, j.dump(2) + "\n");
    write_manifest(out, cfg.out, cfg);
  }
  std::cout << "k=" << est.best_k << '\n';
  write_distances(out, cfg, res.distances);
  return 0;
}

int cmd_evaluate(const Config& cfg, Outputs& out) {
  const auto ds = load(cfg);
  if (!ds.has_labels()) throw InputError("evaluate needs labelled input (--label-column)");
  auto spec = method_spec(cfg);
  // For k-mer profiles --k names the k-mer length; clusters always match the classes.
  if (cfg.k != 0) {
    if (spec.kind != MethodKind::kmer) throw InputError("--k in evaluate sets the k-mer length");
    spec.window = cfg.k;
  }
  const auto res = run_method(ds, spec, cfg.seed, cfg.threads);
  const auto dg = ward_linkage(res.distances);
  const std::size_t classes = ds.label_names().size();
  if (classes < 2) throw InputError("evaluate needs at least two classes");
  const auto assign = cut(dg, classes);
  const auto report =
      validate(res.distances, assign.labels, res.vectors ? &*res.vectors : nullptr, ds.labels());
  json j = json::parse(report.to_json());
  json row;
  row["method"] = spec.label();
  row["window"] = res.window;
  row["clusters"] = classes;
  for (auto& [key, value] : j.items()) row[key] = value;
  const std::string text = row.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    out.write(cfg.out, text);
    write_manifest(out, cfg.out, cfg);
  }
  write_distances(out, cfg, res.distances);
  return 0;
}

int cmd_simulate(const Config& cfg, Outputs& out) {
  if (cfg.preset.empty()) throw InputError("simulate needs --preset");
  auto preset = make_preset(cfg.preset);
  if (cfg.replications) preset.replications = cfg.replications;
  if (cfg.out.empty()) throw InputError("--out is required");
  json extra = {{"preset", preset.name}, {"description", preset.description}};
  if (preset.k_estimation) {
    const auto indices = parse_indices(cfg.index == "asw" ? "asw,ch,dunn" : cfg.index);
    const auto rows =
        run_k_estimation(preset.grid, indices, preset.replications, preset.k_max, cfg.seed, cfg.threads);
    {
      auto f = out.open(cfg.out);
      write_k_estimation_csv(f, rows);
    }
    json cells = json::array();
    for (std::size_t c = 0; c < preset.grid.size(); ++c) {
      const auto& s = preset.grid[c];
      json seeds = json::array();
      for (std::size_t r = 0; r < preset.replications; ++r) seeds.push_back(derive_seed(cfg.seed, {c, r}));
      cells.push_back({{"scenario", s.describe()}, {"clusters", s.clusters}, {"batch_seeds", seeds}});
    }
    json acc = json::object();
    for (auto index : indices) {
      std::size_t hit = 0, total = 0;
      for (const auto& r : rows)
        if (r.index == index_name(index)) {
          ++total;
          hit += r.ok && r.estimated_k == r.true_k;
        }
      acc[std::string(index_name(index))] = total ? static_cast<double>(hit) / total : 0.0;
    }
    json rows_json = json::array();
    for (const auto& r : rows)
      rows_json.push_back({{"cell", r.cell}, {"replication", r.replication}, {"true_k", r.true_k},
                           {"index", r.index}, {"estimated_k", r.estimated_k}, {"ok", r.ok}});
    extra["cells"] = cells;
    extra["accuracy"] = acc;
    extra["rows"] = rows_json;
  } else {
    auto report = run_experiment(preset.grid, preset.methods, preset.replications, cfg.seed, cfg.threads);
    report.name = preset.name;
    {
      auto f = out.open(cfg.out);
      report.write_csv(f);
    }
    extra["report"] = json::parse(report.to_json());
  }
  write_manifest(out, cfg.out, cfg, extra);
  return 0;
}

int cmd_bench(const Config& cfg, Outputs& out) {
  using clock = std::chrono::steady_clock;
  SequenceDataset ds;
  if (!cfg.input.empty()) {
    ds = load(cfg);
  } else {
    ScenarioSpec s;
    s.sequences = cfg.sequences;
    s.length_min = s.length_max = cfg.length;
    s.alphabet = 10;
    s.pattern_length = std::min<std::size_t>(10, cfg.length / 2);
    ds = gen_batch(s, cfg.seed).data;
  }
  const auto spec = method_spec(cfg);
  json timings = json::object();
  auto time = [&](const char* name, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    timings[name] = std::chrono::duration<double>(clock::now() - t0).count();
  };
  MethodResult res;
  time("method", [&] { res = run_method(ds, spec, cfg.seed, cfg.threads); });
  Dendrogram dg;
  time("ward", [&] { dg = ward_linkage(res.distances); });
  json j = {{"sequences", ds.size()},
            {"mean_length", ds.mean_length()},
            {"method", spec.label()},
            {"window", res.window},
            {"threads", resolve_threads(cfg.threads)},
            {"seconds", timings}};
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) std::cout << text;
  else out.write(cfg.out, text);
  return 0;
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Categorical sequence clustering with tree-ensemble representations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* c) {
    c->add_option("--input,-i", cfg.input, "Input corpus");
    c->add_option("--format", cfg.format, "fasta|csv|lines (default: from extension)");
    c->add_flag("--label-column", cfg.label_column, "CSV: last column holds class labels");
    c->add_flag("--id-column", cfg.id_column, "CSV: first column holds sequence ids");
  };
  auto add_method = [&](CLI::App* c) {
    c->add_option("--method", cfg.method,
                  "ntreeclus-dt|ntreeclus-rf|ntreeclus-dt-pos|ntreeclus-rf-pos|kmer|levenshtein|jaro-winkler");
    c->add_option("--n", cfg.n, "Window size (k-mer length for kmer); 0 = round(sqrt(mean length))");
    c->add_option("--t", cfg.t, "Number of trees for forest variants");
    c->add_option("--metric", cfg.metric, "cosine|manhattan");
    c->add_flag("--position", cfg.position, "Add the window position as a feature");
    c->add_option("--dist-out", cfg.dist_out, "Write the distance matrix as TSV");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", cfg.seed, "Master seed");
    c->add_option("--threads", cfg.threads, "Worker threads (0 = SEQCLUS_THREADS or all cores)");
    c->add_option("--out,-o", cfg.out, "Primary output path");
  };

  auto* encode = app.add_subcommand("encode", "Encode sequences as terminal-node counts");
  add_input(encode);
  add_method(encode);
  add_common(encode);
  encode->add_flag("--dense", cfg.dense, "Dense TSV instead of sparse");
  encode->add_option("--save-model", cfg.save_model, "Write the trained forest as JSON");
  encode->add_option("--dump-segments", cfg.dump_segments, "Write the segmented matrix as TSV");

  auto* cluster = app.add_subcommand("cluster", "Ward clustering of the encoded corpus");
  add_input(cluster);
  add_method(cluster);
  add_common(cluster);
  cluster->add_option("--k", cfg.k, "Number of clusters");
  cluster->add_option("--k-range", cfg.k_range, "Estimate k over a:b");
  cluster->add_option("--index", cfg.index, "asw|ch|dunn, comma separated to combine");
  cluster->add_option("--weights", cfg.weights, "Comma separated weights for combined indices");
  cluster->add_option("--newick", cfg.newick, "Write the dendrogram as Newick");
  cluster->add_option("--assign-out", cfg.assign_out, "Assignment CSV (default: --out or stdout)");
  cluster->add_option("--scores-out", cfg.scores_out, "Per-k index scores as TSV");

  auto* estk = app.add_subcommand("estimate-k", "Estimate the number of clusters");
  add_input(estk);
  add_method(estk);
  add_common(estk);
  estk->add_option("--k-range", cfg.k_range, "Candidate range a:b")->required();
  estk->add_option("--index", cfg.index, "asw|ch|dunn, comma separated to combine");
  estk->add_option("--weights", cfg.weights, "Comma separated weights for combined indices");
  estk->add_option("--scores-out", cfg.scores_out, "Per-k index scores as TSV");

  auto* evaluate = app.add_subcommand("evaluate", "Cluster at the true class count and score");
  add_input(evaluate);
  add_method(evaluate);
  add_common(evaluate);
  evaluate->add_option("--k", cfg.k, "k-mer length for --method kmer");

  auto* simulate = app.add_subcommand("simulate", "Run a simulation preset");
  add_common(simulate);
  std::string presets;
  for (const auto& p : preset_names()) presets += (presets.empty() ? "" : "|") + p;
  simulate->add_option("--preset", cfg.preset, presets);
  simulate->add_option("--replications", cfg.replications, "Override the preset's replications");
  simulate->add_option("--index", cfg.index, "Indices for cluster-count presets (default asw,ch,dunn)");

  auto* bench = app.add_subcommand("bench", "Time the pipeline");
  add_input(bench);
  add_method(bench);
  add_common(bench);
  bench->add_option("--sequences", cfg.sequences, "Generated corpus size when no --input");
  bench->add_option("--length", cfg.length, "Generated sequence length when no --input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return 1;
  }

  Outputs outputs;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "encode") return cmd_encode(cfg, outputs);
    if (cfg.command == "cluster") return cmd_cluster(cfg, outputs);
    if (cfg.command == "estimate-k") return cmd_estimate_k(cfg, outputs);
    if (cfg.command == "evaluate") return cmd_evaluate(cfg, outputs);
    if (cfg.command == "simulate") return cmd_simulate(cfg, outputs);
    return cmd_bench(cfg, outputs);
  } catch (const InputError& e) {
    outputs.remove_all();
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    outputs.remove_all();
    std::cerr << "internal error: " << one_line(e.what()) << '\n';
    return 2;
  }
}
