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

#include <cmath>
#include <sstream>

#include "seqclus/common.hpp"
#include "seqclus/count_matrix.hpp"
#include "seqclus/distance.hpp"

using namespace seqclus;

namespace {

CountMatrix dense_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  CountMatrix m(rows.front().size());
  for (const auto& r : rows) {
    std::vector<SparseEntry> e;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j]) e.push_back({static_cast<std::uint32_t>(j), r[j]});
    m.push_row(e);
  }
  return m;
}

}  // namespace

TEST_CASE("cosine dissimilarity examples") {
  const std::vector<double> a{1, 0}, b{0, 1}, c{1, 1}, d{3, 3};
  CHECK(cosine_dissimilarity(a, b) == doctest::Approx(1.0));
  CHECK(cosine_dissimilarity(c, d) == doctest::Approx(0.0));
  CHECK(cosine_dissimilarity(c, a) == doctest::Approx(1 - 1 / std::sqrt(2.0)));
  const std::vector<double> zero{0, 0};
  CHECK_THROWS_AS(cosine_dissimilarity(zero, a), InputError);
}

TEST_CASE("sparse and dense cosine agree") {
  const auto m = dense_rows({{1, 0, 2, 5}, {0, 3, 1, 1}});
  const std::vector<double> a{1, 0, 2, 5}, b{0, 3, 1, 1};
  CHECK(cosine_dissimilarity(m.row(0), m.row(1)) == doctest::Approx(cosine_dissimilarity(a, b)));
  CHECK(cosine_dissimilarity(m.row(0), m.row(0)) == 0.0);
}

TEST_CASE("manhattan examples") {
  const std::vector<double> a{2, 2, 2}, b{0, 2, 5};
  CHECK(manhattan(a, b) == 5.0);
  CHECK(manhattan(a, a) == 0.0);
  const auto m = dense_rows({{1, 0, 0}, {0, 0, 1}, {2, 2, 2}, {0, 2, 5}});
  CHECK(manhattan(m.row(0), m.row(1)) == 2.0);
  CHECK(manhattan(m.row(2), m.row(3)) == 5.0);
}

TEST_CASE("distance matrices") {
  SUBCASE("identical rows give zeros") {
    const auto dm = distance_matrix(dense_rows({{1, 2}, {1, 2}}), Metric::cosine, {"a", "b"});
    CHECK(dm.order() == 2);
    CHECK(dm(0, 1) == 0.0);
    CHECK(dm(1, 1) == 0.0);
  }
  SUBCASE("orthogonal rows give ones") {
    const auto dm = distance_matrix(dense_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 7}}), Metric::cosine,
                                    {"a", "b", "c"}, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(dm(i, j) == (i == j ? 0.0 : 1.0));
  }
  SUBCASE("a zero row under cosine names the sequence") {
    try {
      distance_matrix(dense_rows({{1, 0}, {0, 0}}), Metric::cosine, {"a", "empty"});
      FAIL("expected an error");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("empty") != std::string::npos);
    }
  }
  SUBCASE("dense input") {
    const auto dm = distance_matrix({{0, 0}, {1, 1}, {3, 0}}, Metric::manhattan);
    CHECK(dm(0, 1) == 2.0);
    CHECK(dm(2, 1) == 3.0);
  }
}

TEST_CASE("square conversion validates") {
  const std::vector<std::vector<double>> sq{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
  const auto dm = DistanceMatrix::from_square(sq);
  CHECK(dm.square() == sq);
  CHECK_THROWS_AS(DistanceMatrix::from_square({{0, 1}, {2, 0}}), InputError);
  CHECK_THROWS_AS(DistanceMatrix::from_square({{1, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(DistanceMatrix::from_square({{0, -1}, {-1, 0}}), InputError);
  CHECK_THROWS_AS(DistanceMatrix::from_square({{0, 1, 2}, {1, 0}}), InputError);
}

TEST_CASE("count matrix") {
  CountMatrix m(5);
  const std::vector<SparseEntry> r0{{0, 2}, {3, 1}};
  m.push_row(r0);
  m.push_row(std::vector<SparseEntry>{});
  CHECK(m.rows() == 2);
  CHECK(m.nonzeros() == 2);
  CHECK(m.row_sum(0) == 3);
  CHECK(m.at(0, 3) == 1);
  CHECK(m.at(1, 3) == 0);
  const std::vector<SparseEntry> unsorted{{3, 1}, {1, 1}};
  CHECK_THROWS_AS(m.push_row(unsorted), InputError);
  const std::vector<SparseEntry> out_of_range{{5, 1}};
  CHECK_THROWS_AS(m.push_row(out_of_range), InputError);
  std::ostringstream sparse, dense;
  write_sparse_tsv(sparse, m, {"a", "b"});
  CHECK(sparse.str() == "seq_id\tentries\na\t0:2 3:1\nb\t\n");
  write_dense_tsv(dense, m, {"a", "b"});
  CHECK(dense.str() == "seq_id\t0\t1\t2\t3\t4\na\t2\t0\t0\t1\t0\nb\t0\t0\t0\t0\t0\n");
}

TEST_CASE("metric names") {
  CHECK(parse_metric("cosine") == Metric::cosine);
  CHECK(parse_metric("manhattan") == Metric::manhattan);
  CHECK(metric_name(Metric::jaro_winkler) == "jaro-winkler");
  CHECK_THROWS_AS(parse_metric("euclid"), InputError);
}
