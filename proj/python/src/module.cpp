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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seqclus/clustering.hpp"
#include "seqclus/common.hpp"
#include "seqclus/dataset.hpp"
#include "seqclus/encoder.hpp"
#include "seqclus/methods.hpp"
#include "seqclus/simulation.hpp"
#include "seqclus/validation.hpp"

namespace py = pybind11;
using namespace seqclus;

namespace {

using Square = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::array_t<double> to_numpy(const DistanceMatrix& dm) {
  const auto n = static_cast<py::ssize_t>(dm.order());
  py::array_t<double> out({n, n});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) v(i, j) = dm(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

DistanceMatrix from_numpy(const Square& a, const std::vector<std::string>& ids = {}) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw InputError("distance matrix must be square");
  const auto n = static_cast<std::size_t>(a.shape(0));
  auto v = a.unchecked<2>();
  std::vector<std::vector<double>> sq(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq[i][j] = v(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
  auto dm = DistanceMatrix::from_square(sq);
  dm.ids = ids;
  return dm;
}

py::array_t<std::uint32_t> dense(const CountMatrix& m) {
  py::array_t<std::uint32_t> out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < v.shape(0); ++i)
    for (py::ssize_t j = 0; j < v.shape(1); ++j) v(i, j) = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) v(static_cast<py::ssize_t>(i), e.col) = e.count;
  return out;
}

CountMatrix from_dense(const py::array_t<std::uint32_t, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw InputError("vectors must be a 2-d array");
  auto v = a.unchecked<2>();
  CountMatrix m(static_cast<std::size_t>(a.shape(1)));
  std::vector<SparseEntry> row;
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    row.clear();
    for (py::ssize_t j = 0; j < a.shape(1); ++j)
      if (v(i, j)) row.push_back({static_cast<std::uint32_t>(j), v(i, j)});
    m.push_row(row);
  }
  return m;
}

std::vector<std::string> ids_of(const SequenceDataset& ds) {
  std::vector<std::string> out;
  for (const auto& s : ds.sequences()) out.push_back(s.id);
  return out;
}

SequenceDataset from_lists(const std::vector<std::vector<std::string>>& seqs,
                           const std::optional<std::vector<std::string>>& ids,
                           const std::optional<std::vector<std::string>>& labels) {
  if (ids && ids->size() != seqs.size()) throw InputError("ids and sequences differ in length");
  if (labels && labels->size() != seqs.size()) throw InputError("labels and sequences differ in length");
  SequenceDataset ds;
  for (std::size_t i = 0; i < seqs.size(); ++i)
    ds.add(ids ? (*ids)[i] : "seq" + std::to_string(i + 1), seqs[i],
           labels ? std::optional<std::string>((*labels)[i]) : std::nullopt);
  if (ds.size() == 0) throw InputError("empty corpus");
  return ds;
}

py::array_t<double> linkage(const Dendrogram& dg) {
  py::array_t<double> out({static_cast<py::ssize_t>(dg.merges.size()), py::ssize_t{4}});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t m = 0; m < dg.merges.size(); ++m) {
    const auto& mg = dg.merges[m];
    const auto r = static_cast<py::ssize_t>(m);
    v(r, 0) = static_cast<double>(std::min(mg.left, mg.right));
    v(r, 1) = static_cast<double>(std::max(mg.left, mg.right));
    v(r, 2) = mg.height;
    v(r, 3) = static_cast<double>(mg.size);
  }
  return out;
}

py::dict report_dict(const ValidationReport& r) {
  py::dict d;
  auto put = [&](const char* k, const std::optional<double>& v) {
    if (v) d[k] = *v;
  };
  put("asw", r.asw);
  put("ch", r.ch);
  put("dunn", r.dunn);
  put("purity", r.purity);
  put("ri", r.ri);
  put("ari", r.ari);
  put("f_measure", r.f_measure);
  put("one_nn", r.one_nn);
  return d;
}

}  // namespace

PYBIND11_MODULE(_seqclus, m) {
  m.doc() = "Categorical sequence clustering with tree-based encodings.";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<SequenceDataset>(m, "Dataset")
      .def(py::init(&from_lists), py::arg("sequences"), py::arg("ids") = py::none(),
           py::arg("labels") = py::none())
      .def_static(
          "load",
          [](const std::string& path, const std::string& format, bool id_column, bool label_column) {
            LoadOptions o;
            o.format = parse_format(format);
            o.id_column = id_column;
            o.label_column = label_column;
            return load_sequences_file(path, o);
          },
          py::arg("path"), py::arg("format") = "lines", py::arg("id_column") = false,
          py::arg("label_column") = false)
      .def("__len__", &SequenceDataset::size)
      .def_property_readonly("ids", &ids_of)
      .def_property_readonly("labels", [](const SequenceDataset& ds) { return ds.labels(); })
      .def_property_readonly("label_names", [](const SequenceDataset& ds) { return ds.label_names(); })
      .def_property_readonly("alphabet", [](const SequenceDataset& ds) { return ds.alphabet().symbols(); })
      .def_property_readonly("default_window", &default_window)
      .def("symbols", &SequenceDataset::symbols_of, py::arg("i"))
      .def("to_csv", [](const SequenceDataset& ds) {
        std::ostringstream out;
        write_csv(out, ds);
        return out.str();
      });

  m.def(
      "encode",
      [](const SequenceDataset& ds, const std::string& variant, std::size_t window, std::size_t trees,
         std::uint64_t seed, unsigned threads) {
        EncodeOptions o;
        o.variant = parse_variant(variant);
        o.window = window;
        o.trees = trees;
        o.seed = seed;
        o.threads = resolve_threads(threads);
        const auto enc = encode_corpus(ds, o);
        py::dict d;
        d["counts"] = dense(enc.representation.counts);
        d["ids"] = enc.representation.seq_ids;
        d["window"] = enc.representation.window;
        d["trees"] = enc.representation.trees;
        d["model"] = enc.model.to_json();
        return d;
      },
      py::arg("dataset"), py::arg("variant") = "rf", py::arg("window") = 0, py::arg("trees") = 10,
      py::arg("seed") = 42, py::arg("threads") = 1);

  m.def(
      "distances",
      [](const SequenceDataset& ds, const std::string& method, std::size_t window, std::size_t trees,
         const std::string& metric, std::uint64_t seed, unsigned threads) {
        MethodSpec spec;
        spec.kind = parse_method(method);
        spec.window = window;
        spec.trees = trees;
        spec.metric = parse_metric(metric);
        const auto res = run_method(ds, spec, seed, resolve_threads(threads));
        py::dict d;
        d["distances"] = to_numpy(res.distances);
        d["window"] = res.window;
        if (res.vectors) d["vectors"] = dense(*res.vectors);
        return d;
      },
      py::arg("dataset"), py::arg("method") = "ntreeclus-rf", py::arg("window") = 0,
      py::arg("trees") = 10, py::arg("metric") = "cosine", py::arg("seed") = 42, py::arg("threads") = 1);

  py::class_<Dendrogram>(m, "Dendrogram")
      .def_readonly("leaves", &Dendrogram::leaves)
      .def("linkage", &linkage)
      .def("cut", [](const Dendrogram& dg, std::size_t k) { return cut(dg, k).labels; }, py::arg("k"))
      .def(
          "newick",
          [](const Dendrogram& dg, const std::optional<std::vector<std::string>>& labels) {
            return labels ? to_newick(dg, *labels) : to_newick(dg);
          },
          py::arg("labels") = py::none());

  m.def(
      "ward",
      [](const Square& d, const std::vector<std::string>& ids) {
        auto dg = ward_linkage(from_numpy(d));
        dg.labels = ids;
        return dg;
      },
      py::arg("distances"), py::arg("ids") = std::vector<std::string>{});

  m.def(
      "estimate_k",
      [](const Dendrogram& dg, const Square& d, std::size_t k_min, std::size_t k_max,
         const std::string& index,
         const std::optional<py::array_t<std::uint32_t, py::array::c_style | py::array::forcecast>>& vectors) {
        std::optional<CountMatrix> vec;
        if (vectors) vec = from_dense(*vectors);
        const auto est =
            estimate_k(dg, from_numpy(d), vec ? &*vec : nullptr, k_min, k_max, parse_index(index));
        std::vector<std::optional<double>> scores;
        for (const auto& s : est.scores) scores.push_back(s.valid ? std::optional<double>(s.score) : std::nullopt);
        return py::make_tuple(est.best_k, scores);
      },
      py::arg("dendrogram"), py::arg("distances"), py::arg("k_min"), py::arg("k_max"),
      py::arg("index") = "asw", py::arg("vectors") = py::none());

  m.def(
      "validate",
      [](const Square& d, const std::vector<int>& labels, const std::vector<int>& truth,
         const std::optional<py::array_t<std::uint32_t, py::array::c_style | py::array::forcecast>>& vectors) {
        std::optional<CountMatrix> vec;
        if (vectors) vec = from_dense(*vectors);
        return report_dict(validate(from_numpy(d), labels, vec ? &*vec : nullptr, truth));
      },
      py::arg("distances"), py::arg("labels"), py::arg("truth") = std::vector<int>{},
      py::arg("vectors") = py::none());

  m.def(
      "gen_batch",
      [](std::size_t sequences, std::size_t alphabet, std::size_t length_min, std::size_t length_max,
         const std::string& kind, std::size_t pattern_length, std::size_t pattern_length_y,
         std::size_t clusters, bool background_cluster, std::uint64_t seed) {
        ScenarioSpec s;
        s.sequences = sequences;
        s.alphabet = alphabet;
        s.length_min = length_min;
        s.length_max = length_max ? length_max : length_min;
        s.kind = parse_pattern_kind(kind);
        s.pattern_length = pattern_length;
        s.pattern_length_y = pattern_length_y;
        s.clusters = clusters;
        s.background_cluster = background_cluster;
        auto b = gen_batch(s, seed);
        return py::make_tuple(std::move(b.data), b.truth);
      },
      py::arg("sequences") = 40, py::arg("alphabet") = 4, py::arg("length_min") = 20,
      py::arg("length_max") = 0, py::arg("kind") = "shifted", py::arg("pattern_length") = 6,
      py::arg("pattern_length_y") = 0, py::arg("clusters") = 2, py::arg("background_cluster") = true,
      py::arg("seed") = 42);

  m.def(
      "simulate",
      [](const std::string& preset, std::uint64_t seed, std::size_t replications, unsigned threads) {
        const auto p = make_preset(preset);
        if (p.k_estimation) throw InputError("preset '" + preset + "' is a cluster-count study");
        const auto rep = run_experiment(p.grid, p.methods, replications ? replications : p.replications, seed,
                                        resolve_threads(threads));
        std::ostringstream out;
        rep.write_csv(out);
        return out.str();
      },
      py::arg("preset"), py::arg("seed") = 42, py::arg("replications") = 0, py::arg("threads") = 1);

  m.def("presets", &preset_names);
}
