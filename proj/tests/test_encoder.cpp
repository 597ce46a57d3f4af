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

#include "seqclus/common.hpp"
#include "seqclus/encoder.hpp"
#include "seqclus/forest.hpp"
#include "seqclus/rng.hpp"
#include "seqclus/segmentation.hpp"

using namespace seqclus;

namespace {

SequenceDataset lines(const std::string& text) {
  LoadOptions o;
  o.format = InputFormat::lines;
  return load_sequences_string(text, o);
}

SequenceDataset random_corpus(std::uint64_t seed, std::size_t count, std::size_t lo, std::size_t hi) {
  Rng rng(seed);
  std::string text;
  for (std::size_t i = 0; i < count; ++i) {
    const auto len = static_cast<std::size_t>(rng.between(static_cast<long>(lo), static_cast<long>(hi)));
    for (std::size_t j = 0; j < len; ++j) text += static_cast<char>('a' + rng.below(5));
    text += '\n';
  }
  return lines(text);
}

void check_row_sums(const SequenceDataset& ds, const SequenceRepresentation& rep) {
  REQUIRE(rep.counts.rows() == ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    CHECK(rep.counts.row_sum(i) == rep.trees * (ds[i].length() - rep.window));
}

}  // namespace

TEST_CASE("worked example: 3 trees over 6 windows sum to 18") {
  const auto ds = lines("abcaaabcbaa\n");
  EncodeOptions opt;
  opt.window = 5;
  opt.trees = 3;
  const auto enc = encode_corpus(ds, opt);
  CHECK(enc.representation.counts.row_sum(0) == 18);
  CHECK(enc.representation.counts.cols() == enc.model.total_terminals);
}

TEST_CASE("row-sum law for every variant") {
  const auto ds = random_corpus(3, 25, 12, 30);
  for (auto v : {Variant::dt, Variant::rf, Variant::dt_pos, Variant::rf_pos}) {
    EncodeOptions opt;
    opt.variant = v;
    opt.trees = 7;
    const auto enc = encode_corpus(ds, opt);
    CHECK(enc.representation.trees == (variant_is_forest(v) ? 7u : 1u));
    CHECK(enc.representation.window == default_window(ds));
    check_row_sums(ds, enc.representation);
  }
}

TEST_CASE("occupancy rows have exactly one terminal per tree") {
  const auto ds = random_corpus(4, 10, 15, 20);
  const auto sm = segment(ds, 3, false);
  const auto fm = train_forest(sm, ForestParams::forest(5, 9));
  for (std::size_t r = 0; r < sm.rows(); ++r) {
    const auto ids = occupancy_row(fm, sm, r);
    REQUIRE(ids.size() == 5);
    std::vector<std::uint32_t> onehot(fm.total_terminals, 0);
    for (auto id : ids) ++onehot[id];
    std::uint32_t ones = 0;
    for (auto c : onehot) {
      CHECK(c <= 1);
      ones += c;
    }
    CHECK(ones == 5);
  }
}

TEST_CASE("single-class corpus puts every window of a tree in one column") {
  const auto ds = lines("aaaaaaa\naaaaa\n");
  EncodeOptions opt;
  opt.window = 2;
  opt.trees = 3;
  const auto enc = encode_corpus(ds, opt);
  const auto& c = enc.representation.counts;
  CHECK(c.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(c.at(0, j) == 5);
    CHECK(c.at(1, j) == 3);
  }
}

TEST_CASE("identical sequences get identical rows") {
  const auto ds = lines("abcabcaabb\nbbbcacabca\nabcabcaabb\n");
  EncodeOptions opt;
  opt.window = 3;
  const auto enc = encode_corpus(ds, opt);
  const auto a = enc.representation.counts.row(0);
  const auto b = enc.representation.counts.row(2);
  CHECK(std::vector<SparseEntry>(a.begin(), a.end()) == std::vector<SparseEntry>(b.begin(), b.end()));
}

TEST_CASE("encoding is independent of the thread count") {
  const auto ds = random_corpus(8, 40, 20, 35);
  EncodeOptions a;
  a.threads = 1;
  EncodeOptions b = a;
  b.threads = 5;
  CHECK(encode_corpus(ds, a).representation.counts == encode_corpus(ds, b).representation.counts);
}

TEST_CASE("encoding with a model of another width throws") {
  const auto ds = random_corpus(9, 5, 10, 12);
  const auto sm3 = segment(ds, 3, false);
  const auto sm4 = segment(ds, 4, false);
  const auto fm = train_forest(sm3, ForestParams::forest(2, 1));
  CHECK_THROWS_AS(encode(fm, sm4), InputError);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("rf_pos") == Variant::rf_pos);
  CHECK(variant_name(Variant::dt) == "dt");
  CHECK(variant_uses_position(Variant::dt_pos));
  CHECK_FALSE(variant_is_forest(Variant::dt_pos));
  CHECK_THROWS_AS(parse_variant("gbm"), InputError);
}
