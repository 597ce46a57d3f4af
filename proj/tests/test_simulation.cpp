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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "seqclus/common.hpp"
#include "seqclus/methods.hpp"
#include "seqclus/rng.hpp"
#include "seqclus/simulation.hpp"

using namespace seqclus;

namespace {

ScenarioSpec spec(PatternKind kind, std::size_t n, std::size_t a, std::size_t lmin, std::size_t lmax,
                  std::size_t lp, std::size_t lpy = 0, std::size_t c = 2) {
  ScenarioSpec s;
  s.sequences = n;
  s.alphabet = a;
  s.length_min = lmin;
  s.length_max = lmax;
  s.kind = kind;
  s.pattern_length = lp;
  s.pattern_length_y = lpy;
  s.clusters = c;
  return s;
}

bool contains_at(const std::vector<Token>& seq, const std::vector<Token>& pat, long offset) {
  return offset >= 0 && static_cast<std::size_t>(offset) + pat.size() <= seq.size() &&
         std::equal(pat.begin(), pat.end(), seq.begin() + offset);
}

}  // namespace

TEST_CASE("seed derivation") {
  CHECK(derive_seed(1, {0, 0}) == derive_seed(1, {0, 0}));
  CHECK(derive_seed(1, {0, 1}) != derive_seed(1, {1, 0}));
  CHECK(derive_seed(1, {0}) != derive_seed(2, {0}));
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng r(6);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(7) < 7);
    const long v = r.between(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("shifted batch: half the sequences carry the pattern") {
  const auto b = gen_batch(spec(PatternKind::shifted, 40, 4, 20, 20, 6), 42);
  CHECK(b.data.size() == 40);
  CHECK(b.data.alphabet().size() <= 4);
  std::size_t planted = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    CHECK(b.data[i].length() == 20);
    const auto& rec = b.plants[i];
    CHECK(rec.cluster == b.truth[i]);
    if (b.patterns[static_cast<std::size_t>(rec.cluster)].empty()) {
      CHECK(rec.offset == -1);
      continue;
    }
    ++planted;
    // Tokens are stored by first occurrence; compare through the symbols.
    const auto symbols = b.data.symbols_of(i);
    const auto& pat = b.patterns[static_cast<std::size_t>(rec.cluster)];
    for (std::size_t j = 0; j < pat.size(); ++j)
      CHECK(symbols[static_cast<std::size_t>(rec.offset) + j] == alphabet_symbol(pat[j]));
  }
  CHECK(planted == 20);
  CHECK(b.data.has_labels());
}

TEST_CASE("gapped batch keeps x before y") {
  const auto b = gen_batch(spec(PatternKind::gapped, 30, 5, 40, 40, 2, 3), 9);
  for (std::size_t i = 0; i < b.data.size(); ++i) {
    const auto& rec = b.plants[i];
    if (rec.offset < 0) continue;
    CHECK(rec.offset_y >= rec.offset + 2);
    CHECK(rec.offset_y + 3 <= 40);
  }
}

TEST_CASE("pinned batch: one pattern at cluster-specific offsets, variable lengths") {
  const auto b = gen_batch(spec(PatternKind::pinned, 60, 7, 80, 120, 10), 3);
  REQUIRE(b.pinned_offsets.size() == 2);
  CHECK(b.pinned_offsets[0] != b.pinned_offsets[1]);
  CHECK(b.patterns[0] == b.patterns[1]);
  std::set<std::size_t> lengths;
  for (std::size_t i = 0; i < b.data.size(); ++i) {
    lengths.insert(b.data[i].length());
    CHECK(b.data[i].length() >= 80);
    CHECK(b.data[i].length() <= 120);
    CHECK(b.plants[i].offset == b.pinned_offsets[static_cast<std::size_t>(b.truth[i])]);
  }
  CHECK(lengths.size() > 5);
}

TEST_CASE("more than two clusters") {
  auto s = spec(PatternKind::shifted, 50, 6, 50, 50, 7, 0, 5);
  s.background_cluster = false;
  const auto b = gen_batch(s, 1);
  std::set<std::vector<Token>> pats(b.patterns.begin(), b.patterns.end());
  CHECK(pats.size() == 5);
  for (const auto& p : b.patterns) CHECK(p.size() == 7);
  for (int c = 0; c < 5; ++c) CHECK(std::count(b.truth.begin(), b.truth.end(), c) == 10);
}

TEST_CASE("generation is a function of scenario and seed") {
  const auto s = spec(PatternKind::shifted, 20, 4, 15, 25, 5);
  const auto a = gen_batch(s, 77), b = gen_batch(s, 77), c = gen_batch(s, 78);
  std::ostringstream oa, ob, oc;
  write_csv(oa, a.data);
  write_csv(ob, b.data);
  write_csv(oc, c.data);
  CHECK(oa.str() == ob.str());
  CHECK(oa.str() != oc.str());
}

TEST_CASE("invalid scenarios") {
  CHECK_THROWS_AS(spec(PatternKind::shifted, 40, 4, 10, 10, 10).validate(), InputError);
  CHECK_THROWS_AS(spec(PatternKind::shifted, 40, 30, 20, 20, 5).validate(), InputError);
  CHECK_THROWS_AS(spec(PatternKind::gapped, 40, 4, 20, 20, 5, 0).validate(), InputError);
  CHECK_THROWS_AS(spec(PatternKind::shifted, 1, 4, 20, 20, 5).validate(), InputError);
  CHECK_THROWS_AS(spec(PatternKind::shifted, 40, 4, 20, 10, 5).validate(), InputError);
  CHECK_NOTHROW(spec(PatternKind::pinned, 40, 5, 80, 120, 20).validate());
}

TEST_CASE("experiment rows are independent of the thread count") {
  const std::vector<ScenarioSpec> grid{spec(PatternKind::shifted, 16, 4, 20, 20, 6),
                                       spec(PatternKind::pinned, 16, 5, 24, 30, 5)};
  const std::vector<MethodSpec> methods{{MethodKind::ntreeclus_rf}, {MethodKind::kmer, 2},
                                        {MethodKind::levenshtein}};
  auto a = run_experiment(grid, methods, 3, 5, 1);
  auto b = run_experiment(grid, methods, 3, 5, 4);
  std::ostringstream oa, ob;
  a.write_csv(oa);
  b.write_csv(ob);
  CHECK(oa.str() == ob.str());
  CHECK(a.rows.size() == 2 * 3 * 3);
  const auto summary = a.summary();
  REQUIRE(summary.size() == 3);
  CHECK(summary[0].method == "ntreeclus-rf");
  CHECK(summary[1].method == "kmer-k2");
  CHECK(summary[0].runs == 6);
  CHECK(a.to_json().find("batch_seeds") != std::string::npos);
}

TEST_CASE("a failing method is recorded, not thrown") {
  const std::vector<ScenarioSpec> grid{spec(PatternKind::shifted, 10, 4, 12, 12, 4)};
  const auto r = run_experiment(grid, {{MethodKind::ntreeclus_rf, 30}}, 1, 1, 1);
  REQUIRE(r.rows.size() == 1);
  CHECK_FALSE(r.rows[0].ok);
  CHECK_FALSE(r.rows[0].error.empty());
  std::ostringstream out;
  r.write_csv(out);
  CHECK(out.str().find("error:") != std::string::npos);
}

TEST_CASE("k estimation rows") {
  auto s = spec(PatternKind::shifted, 30, 10, 40, 40, 10, 0, 3);
  s.background_cluster = false;
  const auto rows = run_k_estimation({s}, {InternalIndex::asw, InternalIndex::ch}, 2, 8, 4, 2);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.ok);
    CHECK(r.true_k == 3);
    CHECK(r.estimated_k >= 2);
    CHECK(r.estimated_k <= 8);
  }
  std::ostringstream out;
  write_k_estimation_csv(out, rows);
  CHECK(out.str().rfind("cell,replication,true_k,index,estimated_k,status\n", 0) == 0);
}

TEST_CASE("sensitivity curves stay pure") {
  const auto curve = sensitivity_suite(SensitivityKind::instances, 3, 1, 1);
  REQUIRE(curve.size() == 10);
  CHECK(curve.front().parameter == 20);
  CHECK(curve.back().parameter == 200);
  double mean = 0;
  for (const auto& p : curve) mean += p.metrics.purity / 10;
  CHECK(mean > 0.95);
}

TEST_CASE("presets") {
  for (const auto& name : preset_names()) {
    const auto p = make_preset(name);
    CHECK(p.name == name);
    CHECK_FALSE(p.grid.empty());
    CHECK_FALSE(p.methods.empty());
    for (const auto& s : p.grid) CHECK_NOTHROW(s.validate());
  }
  CHECK(make_preset("sim1-desk").grid.size() == 2);
  CHECK(make_preset("kest-desk").grid.size() == 24);
  CHECK(make_preset("sim1-full").grid.size() == 108);
  CHECK(table_methods().size() == 10);
  CHECK_THROWS_AS(make_preset("nope"), InputError);
}
