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

#include <sstream>

#include "seqclus/common.hpp"
#include "seqclus/dataset.hpp"
#include "seqclus/segmentation.hpp"

using namespace seqclus;

namespace {

SequenceDataset lines(const std::string& text) {
  LoadOptions o;
  o.format = InputFormat::lines;
  return load_sequences_string(text, o);
}

std::vector<std::string> features(const SequenceDataset& ds, const SegmentedMatrix& sm, std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < sm.window; ++c)
    out.push_back(ds.alphabet().symbol(static_cast<Token>(sm.columns[c][r])));
  return out;
}

}  // namespace

TEST_CASE("worked example abcaaabcbaa with n=5") {
  const auto ds = lines("abcaaabcbaa\n");
  const auto sm = segment(ds, 5, false);
  REQUIRE(sm.rows() == 6);
  CHECK(sm.num_features() == 5);
  CHECK(features(ds, sm, 0) == std::vector<std::string>{"a", "b", "c", "a", "a"});
  CHECK(ds.alphabet().symbol(static_cast<Token>(sm.target[0])) == "a");
  CHECK(features(ds, sm, 5) == std::vector<std::string>{"a", "b", "c", "b", "a"});
  CHECK(ds.alphabet().symbol(static_cast<Token>(sm.target[5])) == "a");
}

TEST_CASE("100 sequences of length 11 with n=5 give 600 rows") {
  std::string text;
  for (int i = 0; i < 100; ++i) text += "abcaaabcbaa\n";
  const auto ds = lines(text);
  CHECK(window_count(ds, 5) == 600);
  const auto sm = segment(ds, 5, false, 4);
  CHECK(sm.rows() == 600);
  CHECK(sm.columns.size() == 5);
  CHECK(sm.seq_id.size() == 600);
}

TEST_CASE("minimal window") {
  const auto ds = lines("ab\n");
  const auto sm = segment(ds, 1, false);
  REQUIRE(sm.rows() == 1);
  CHECK(features(ds, sm, 0) == std::vector<std::string>{"a"});
  CHECK(ds.alphabet().symbol(static_cast<Token>(sm.target[0])) == "b");
}

TEST_CASE("window counts") {
  CHECK(window_count(lines("abcdef\nabcdefg\n"), 5) == 3);
  CHECK(window_count(lines("abc\nbca\ncab\nabc\n"), 2) == 4);
  CHECK_THROWS_AS(window_count(lines("abc\nabcdef\n"), 3), InputError);
  CHECK_THROWS_AS(window_count(lines("abc\n"), 0), InputError);
}

TEST_CASE("rows follow sequence then offset order and carry 1-based positions") {
  const auto ds = lines("abcd\nbcdab\n");
  const auto sm = segment(ds, 2, true);
  REQUIRE(sm.rows() == 5);
  CHECK(sm.has_position);
  CHECK(sm.num_features() == 3);
  CHECK(sm.seq_id == std::vector<std::uint32_t>{0, 0, 1, 1, 1});
  CHECK(sm.columns[2] == std::vector<std::int32_t>{1, 2, 1, 2, 3});
  for (std::size_t r = 0; r < sm.rows(); ++r) {
    const auto& tokens = ds[sm.seq_id[r]].tokens;
    const auto j = static_cast<std::size_t>(sm.columns[2][r] - 1);
    CHECK(sm.columns[0][r] == static_cast<std::int32_t>(tokens[j]));
    CHECK(sm.columns[1][r] == static_cast<std::int32_t>(tokens[j + 1]));
    CHECK(sm.target[r] == static_cast<std::int32_t>(tokens[j + 2]));
  }
}

TEST_CASE("thread count does not change the matrix") {
  std::string text;
  for (int i = 0; i < 37; ++i) text += std::string(10 + i % 7, static_cast<char>('a' + i % 5)) + "xyz\n";
  const auto ds = lines(text);
  const auto a = segment(ds, 4, true, 1);
  const auto b = segment(ds, 4, true, 8);
  CHECK(a.columns == b.columns);
  CHECK(a.target == b.target);
  CHECK(a.seq_id == b.seq_id);
}

TEST_CASE("tsv dump") {
  const auto ds = lines("abca\n");
  const auto sm = segment(ds, 2, true);
  std::ostringstream out;
  write_segments_tsv(out, sm, ds.alphabet());
  CHECK(out.str() == "f1\tf2\ty_target\tseq_id\tposition\na\tb\tc\t0\t1\nb\tc\ta\t0\t2\n");
}
