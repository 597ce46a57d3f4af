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

using namespace seqclus;

namespace {

LoadOptions opts(InputFormat f, bool id = false, bool label = false) {
  LoadOptions o;
  o.format = f;
  o.id_column = id;
  o.label_column = label;
  return o;
}

SequenceDataset of_lengths(std::initializer_list<std::size_t> lengths) {
  SequenceDataset ds;
  std::size_t i = 0;
  for (auto l : lengths) ds.add("s" + std::to_string(i++), std::vector<std::string>(l, "a"));
  return ds;
}

}  // namespace

TEST_CASE("lines input splits characters when there is no whitespace") {
  const auto ds = load_sequences_string("abcaaabcbaa\n", opts(InputFormat::lines));
  CHECK(ds.size() == 1);
  CHECK(ds.alphabet().size() == 3);
  CHECK(ds[0].length() == 11);
  CHECK(ds[0].id == "seq1");
}

TEST_CASE("lines input splits whitespace separated tokens") {
  const auto ds = load_sequences_string("login view  cart\n\npay logout\n", opts(InputFormat::lines));
  REQUIRE(ds.size() == 2);
  CHECK(ds.symbols_of(0) == std::vector<std::string>{"login", "view", "cart"});
  CHECK(ds[1].id == "seq2");
}

TEST_CASE("lines input treats multi-byte characters as one token") {
  const auto ds = load_sequences_string("\xce\xb1\xce\xb2\xce\xb1\n", opts(InputFormat::lines));
  CHECK(ds[0].length() == 3);
  CHECK(ds.alphabet().size() == 2);
}

TEST_CASE("csv without label column keeps duplicate rows") {
  const auto ds = load_sequences_string("a,b\na,b\n", opts(InputFormat::csv));
  CHECK(ds.size() == 2);
  CHECK(ds.alphabet().size() == 2);
  CHECK(ds[0].tokens == ds[1].tokens);
  CHECK_FALSE(ds.has_labels());
}

TEST_CASE("csv with id and label columns") {
  const auto ds = load_sequences_string("x1,a,b,c,pos\nx2,b,b,neg\nx3,c,a,pos\n",
                                        opts(InputFormat::csv, true, true));
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].id == "x1");
  CHECK(ds[0].length() == 3);
  CHECK(ds.labels() == std::vector<int>{0, 1, 0});
  CHECK(ds.label_names() == std::vector<std::string>{"pos", "neg"});
}

TEST_CASE("csv errors") {
  CHECK_THROWS_AS(load_sequences_string("x1,pos\n", opts(InputFormat::csv, true, true)), InputError);
  CHECK_THROWS_AS(load_sequences_string("x1,a,,b\n", opts(InputFormat::csv, true)), InputError);
  CHECK_THROWS_AS(load_sequences_string("x1,a\nx1,b\n", opts(InputFormat::csv, true)), InputError);
  CHECK_THROWS_AS(load_sequences_string("\n\n", opts(InputFormat::csv)), InputError);
}

TEST_CASE("fasta records join wrapped lines and keep the first header word") {
  const auto ds = load_sequences_string(">g1 some description\nACGT\nAC\n>g2\nTTTN\n",
                                        opts(InputFormat::fasta));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].id == "g1");
  CHECK(ds[0].length() == 6);
  CHECK(ds[1].length() == 4);
  CHECK(ds.alphabet().size() == 5);
}

TEST_CASE("fasta errors") {
  CHECK_THROWS_AS(load_sequences_string("ACGT\n>g\nAC\n", opts(InputFormat::fasta)), InputError);
  CHECK_THROWS_AS(load_sequences_string(">\nAC\n", opts(InputFormat::fasta)), InputError);
  CHECK_THROWS_AS(load_sequences_string(">g1\n>g2\nAC\n", opts(InputFormat::fasta)), InputError);
  CHECK_THROWS_AS(load_sequences_string("", opts(InputFormat::fasta)), InputError);
}

TEST_CASE("labels must be all or none") {
  SequenceDataset ds;
  ds.add("a", {"x"}, std::string("l1"));
  CHECK_THROWS_AS(ds.add("b", {"y"}), InputError);
  SequenceDataset empty;
  CHECK_THROWS_AS(empty.add("a", {}), InputError);
  CHECK_THROWS_AS(empty.add("a", {" "}), InputError);
}

TEST_CASE("default window") {
  SUBCASE("all lengths 40 gives 6") { CHECK(default_window(of_lengths({40, 40, 40})) == 6); }
  SUBCASE("mean 100 gives 10") { CHECK(default_window(of_lengths({80, 120, 100})) == 10); }
  SUBCASE("minimum length 2 clamps to 1") { CHECK(default_window(of_lengths({2, 50, 50})) == 1); }
  SUBCASE("length 1 cannot be segmented") { CHECK_THROWS_AS(default_window(of_lengths({1, 9})), InputError); }
}

TEST_CASE("length statistics") {
  const auto ds = of_lengths({3, 5, 10});
  CHECK(ds.min_length() == 3);
  CHECK(ds.max_length() == 10);
  CHECK(ds.mean_length() == doctest::Approx(6.0));
}

TEST_CASE("permuted keeps alphabet ordinals and label ids") {
  SequenceDataset ds;
  ds.add("a", {"x", "y"}, std::string("L1"));
  ds.add("b", {"z"}, std::string("L2"));
  ds.add("c", {"y", "x"}, std::string("L1"));
  const auto p = ds.permuted({2, 0, 1});
  CHECK(p[0].id == "c");
  CHECK(p[0].tokens == ds[2].tokens);
  CHECK(p.labels() == std::vector<int>{0, 0, 1});
  CHECK(p.alphabet().symbols() == ds.alphabet().symbols());
  CHECK_THROWS_AS(ds.permuted({0, 0, 1}), InputError);
}

TEST_CASE("csv writer round trips") {
  SequenceDataset ds;
  ds.add("a", {"x", "yy"}, std::string("L1"));
  ds.add("b", {"z"}, std::string("L2"));
  std::ostringstream out;
  write_csv(out, ds);
  CHECK(out.str() == "a,x,yy,L1\nb,z,L2\n");
  const auto back = load_sequences_string(out.str(), opts(InputFormat::csv, true, true));
  CHECK(back.symbols_of(0) == ds.symbols_of(0));
  CHECK(back.labels() == ds.labels());
}

TEST_CASE("format names") {
  CHECK(parse_format("fasta") == InputFormat::fasta);
  CHECK(parse_format("csv") == InputFormat::csv);
  CHECK(parse_format("lines") == InputFormat::lines);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
}
