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

#include "seqclus/methods.hpp"

#include <algorithm>
#include <cmath>

#include "seqclus/baselines.hpp"
#include "seqclus/common.hpp"

namespace seqclus {

MethodKind parse_method(std::string_view name) {
  if (name == "ntreeclus-dt") return MethodKind::ntreeclus_dt;
  if (name == "ntreeclus-rf" || name == "ntreeclus") return MethodKind::ntreeclus_rf;
  if (name == "ntreeclus-dt-pos") return MethodKind::ntreeclus_dt_pos;
  if (name == "ntreeclus-rf-pos") return MethodKind::ntreeclus_rf_pos;
  if (name == "kmer") return MethodKind::kmer;
  if (name == "levenshtein") return MethodKind::levenshtein;
  if (name == "jaro-winkler" || name == "jaro_winkler") return MethodKind::jaro_winkler;
  throw InputError("unknown method '" + std::string(name) + "'");
}

std::string_view method_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::ntreeclus_dt: return "ntreeclus-dt";
    case MethodKind::ntreeclus_rf: return "ntreeclus-rf";
    case MethodKind::ntreeclus_dt_pos: return "ntreeclus-dt-pos";
    case MethodKind::ntreeclus_rf_pos: return "ntreeclus-rf-pos";
    case MethodKind::kmer: return "kmer";
    case MethodKind::levenshtein: return "levenshtein";
    case MethodKind::jaro_winkler: return "jaro-winkler";
  }
  return "ntreeclus-rf";
}

bool MethodSpec::is_ntreeclus() const {
  return kind == MethodKind::ntreeclus_dt || kind == MethodKind::ntreeclus_rf ||
         kind == MethodKind::ntreeclus_dt_pos || kind == MethodKind::ntreeclus_rf_pos;
}

std::string MethodSpec::label() const {
  std::string out(method_name(kind));
  if (kind == MethodKind::kmer) out += window == 0 ? "-ksqrt" : "-k" + std::to_string(window);
  return out;
}

std::size_t sqrt_mean_length(const SequenceDataset& ds) {
  const auto v = static_cast<std::size_t>(std::llround(std::sqrt(ds.mean_length())));
  return std::clamp<std::size_t>(v, 1, std::max<std::size_t>(1, ds.min_length()));
}

namespace {

Variant variant_of(MethodKind kind) {
  switch (kind) {
    case MethodKind::ntreeclus_dt: return Variant::dt;
    case MethodKind::ntreeclus_dt_pos: return Variant::dt_pos;
    case MethodKind::ntreeclus_rf_pos: return Variant::rf_pos;
    default: return Variant::rf;
  }
}

}  // namespace

MethodResult run_method(const SequenceDataset& ds, const MethodSpec& spec, std::uint64_t seed,
                        unsigned threads) {
  MethodResult out;
  std::vector<std::string> ids;
  for (const auto& s : ds.sequences()) ids.push_back(s.id);

  if (spec.is_ntreeclus()) {
    EncodeOptions opt;
    opt.variant = variant_of(spec.kind);
    opt.window = spec.window;
    opt.trees = spec.trees;
    opt.seed = seed;
    opt.threads = threads;
    auto enc = encode_corpus(ds, opt);
    out.window = enc.representation.window;
    out.distances = distance_matrix(enc.representation.counts, spec.metric, ids, threads);
    out.vectors = std::move(enc.representation.counts);
    out.model = std::move(enc.model);
    return out;
  }
  switch (spec.kind) {
    case MethodKind::kmer: {
      const std::size_t k = spec.window == 0 ? sqrt_mean_length(ds) : spec.window;
      auto profiles = kmer_profiles(ds, k, threads);
      out.window = k;
      out.distances = distance_matrix(profiles.counts, spec.metric, ids, threads);
      out.vectors = std::move(profiles.counts);
      return out;
    }
    case MethodKind::levenshtein:
      out.distances = string_distance_matrix(ds, Metric::levenshtein, threads);
      return out;
    case MethodKind::jaro_winkler:
      out.distances = string_distance_matrix(ds, Metric::jaro_winkler, threads);
      return out;
    default: break;
  }
  throw InputError("unsupported method");
}

}  // namespace seqclus
