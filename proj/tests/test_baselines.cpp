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
#include <map>

#include "oracles.hpp"
#include "seqclus/baselines.hpp"
#include "seqclus/common.hpp"
#include "seqclus/distance.hpp"
#include "seqclus/rng.hpp"

using namespace seqclus;

namespace {

SequenceDataset lines(const std::string& text) {
  LoadOptions o;
  o.format = InputFormat::lines;
  return load_sequences_string(text, o);
}

std::vector<Token> toks(const std::string& s) {
  std::vector<Token> out;
  for (char c : s) out.push_back(static_cast<Token>(c));
  return out;
}

std::vector<Token> random_tokens(Rng& rng, std::size_t max_len, std::size_t alphabet) {
  std::vector<Token> v(rng.below(max_len + 1));
  for (auto& t : v) t = static_cast<Token>(rng.below(alphabet));
  return v;
}

}  // namespace

TEST_CASE("k-mer counts of abcab with k=2") {
  const auto ds = lines("abcab\n");
  const auto p = kmer_profiles(ds, 2);
  REQUIRE(p.keys.size() == 3);
  std::map<std::string, std::uint32_t> got;
  for (std::size_t j = 0; j < p.keys.size(); ++j) got[p.key_label(j, ds.alphabet())] = p.counts.at(0, j);
  CHECK(got == std::map<std::string, std::uint32_t>{{"ab", 2}, {"bc", 1}, {"ca", 1}});
}

TEST_CASE("k=1 profiles are token histograms and sum to the lengths") {
  const auto ds = lines("aab\nbbbc\nc\n");
  const auto p = kmer_profiles(ds, 1);
  for (std::size_t i = 0; i < ds.size(); ++i) CHECK(p.counts.row_sum(i) == ds[i].length());
  CHECK(p.counts.cols() == 3);
}

TEST_CASE("k equal to the length is a one-hot of the whole sequence") {
  const auto ds = lines("abc\nabc\ncab\n");
  const auto p = kmer_profiles(ds, 3);
  CHECK(p.counts.cols() == 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(p.counts.row_sum(i) == 1);
  CHECK(p.counts.at(0, 0) == p.counts.at(1, 0));
  CHECK_THROWS_AS(kmer_profiles(ds, 4), InputError);
  CHECK_THROWS_AS(kmer_profiles(ds, 0), InputError);
}

TEST_CASE("k-mer keys are ordered by ordinal tuple and threads do not matter") {
  const auto ds = lines("cabbacab\nbcabca\n");
  const auto a = kmer_profiles(ds, 2, 1);
  const auto b = kmer_profiles(ds, 2, 4);
  CHECK(a.counts == b.counts);
  CHECK(std::is_sorted(a.keys.begin(), a.keys.end()));
}

TEST_CASE("levenshtein examples") {
  CHECK(levenshtein(toks(""), toks("abc")) == 3);
  CHECK(levenshtein(toks("abc"), toks("abc")) == 0);
  CHECK(levenshtein(toks("kitten"), toks("sitting")) == 3);
}

TEST_CASE("levenshtein matches the full table and is a metric") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_tokens(rng, 12, 4);
    const auto b = random_tokens(rng, 12, 4);
    const auto c = random_tokens(rng, 12, 4);
    const auto ab = levenshtein(a, b);
    CHECK(ab == oracle::levenshtein(a, b));
    CHECK(ab == levenshtein(b, a));
    CHECK(levenshtein(a, c) <= ab + levenshtein(b, c));
    const auto la = a.size(), lb = b.size();
    CHECK(ab >= (la > lb ? la - lb : lb - la));
    CHECK(ab <= std::max(la, lb));
    CHECK((ab == 0) == (a == b));
  }
}

TEST_CASE("jaro and jaro-winkler") {
  CHECK(jaro(toks("MARTHA"), toks("MARHTA")) == doctest::Approx(0.944444).epsilon(1e-5));
  CHECK(jaro_winkler(toks("MARTHA"), toks("MARHTA")) == doctest::Approx(0.961111).epsilon(1e-5));
  CHECK(jaro_winkler(toks("DIXON"), toks("DICKSONX")) == doctest::Approx(0.813333).epsilon(1e-5));
  CHECK(jaro_winkler(toks("abc"), toks("abc")) == 1.0);
  CHECK(jaro_winkler(toks("abc"), toks("xyz")) == 0.0);
  CHECK(jaro_winkler(toks(""), toks("")) == 1.0);
  CHECK(jaro_winkler(toks(""), toks("a")) == 0.0);
}

TEST_CASE("string distance matrices") {
  const auto same = lines("abc\nabc\n");
  CHECK(string_distance_matrix(same, Metric::levenshtein)(0, 1) == 0.0);
  CHECK(string_distance_matrix(same, Metric::jaro_winkler)(0, 1) == 0.0);
  const auto disjoint = lines("aaa\nbbb\n");
  CHECK(string_distance_matrix(disjoint, Metric::jaro_winkler)(0, 1) == 1.0);
  const auto ks = lines("kitten\nsitting\n");
  const auto dm = string_distance_matrix(ks, Metric::levenshtein, 2);
  CHECK(dm(0, 1) == 3.0);
  CHECK(dm.ids == std::vector<std::string>{"seq1", "seq2"});
  CHECK_THROWS_AS(string_distance_matrix(ks, Metric::cosine), InputError);
}
