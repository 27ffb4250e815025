#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spfk/core_data.hpp"
#include "spfk/fixtures.hpp"
#include "spfk/report.hpp"
#include "spfk/sax.hpp"
#include "spfk/selection.hpp"
#include "spfk/spf.hpp"
#include "spfk/validity.hpp"
#include "spfk/vectorize.hpp"

namespace py = pybind11;
using namespace spfk;

namespace {

using Rows = std::vector<std::vector<double>>;

Dataset make_dataset(const Rows& series, const std::optional<std::vector<int>>& labels, const std::string& name) {
    if (labels && labels->size() != series.size()) throw ConfigError("labels and series differ in length");
    Dataset ds;
    ds.name = name;
    for (std::size_t i = 0; i < series.size(); ++i) {
        ds.series.push_back({std::to_string(i), series[i], labels ? std::optional<int>((*labels)[i]) : std::nullopt});
    }
    finalize_dataset(ds);
    return ds;
}

std::vector<SaxDocument> make_docs(const std::vector<std::vector<std::string>>& words) {
    std::vector<SaxDocument> docs;
    for (std::size_t i = 0; i < words.size(); ++i) docs.push_back({std::to_string(i), words[i]});
    return docs;
}

py::tuple feature_tuple(const FeatureMatrix& fm) {
    Rows rows(fm.rows);
    for (std::size_t r = 0; r < fm.rows; ++r) rows[r].assign(fm.row(r).begin(), fm.row(r).end());
    return py::make_tuple(fm.vocabulary, rows);
}

}  // namespace

PYBIND11_MODULE(_spfk, m) {
    m.doc() = "Bindings for the spfk cluster-count selection library";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<IngestError>(m, "IngestError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    m.def("znormalize", [](const std::vector<double>& x) { return znormalize(x); }, py::arg("values"));
    m.def("breakpoints", &breakpoints, py::arg("alphabet"));
    m.def("paa", [](const std::vector<double>& x, std::size_t segments) { return paa(x, segments); },
          py::arg("values"), py::arg("segments"));
    m.def("sax_word",
          [](const std::vector<double>& window, std::size_t word_length, int alphabet) {
              return sax_word(window, SaxParams{window.size(), word_length, alphabet});
          },
          py::arg("window"), py::arg("word_length"), py::arg("alphabet"));
    m.def("sax_document",
          [](const std::vector<double>& values, std::size_t window, std::size_t word_length, int alphabet) {
              return sax_document(TimeSeries{"s", values, std::nullopt}, SaxParams{window, word_length, alphabet})
                  .words;
          },
          py::arg("values"), py::arg("window"), py::arg("word_length"), py::arg("alphabet"));

    m.def("bow_matrix", [](const std::vector<std::vector<std::string>>& docs) {
        return feature_tuple(bow_matrix(make_docs(docs)));
    }, py::arg("documents"));
    m.def("tfidf_matrix",
          [](const std::vector<std::vector<std::string>>& docs, double min_freq, double max_freq) {
              return feature_tuple(tfidf_matrix(make_docs(docs), FrequencyFilter{min_freq, max_freq}));
          },
          py::arg("documents"), py::arg("min_freq") = 0.0, py::arg("max_freq") = 1.0);

    m.def("spf_cluster",
          [](const Rows& series, std::size_t k, std::size_t window, std::size_t word_length, int alphabet,
             std::size_t trees, std::uint64_t seed, unsigned threads) {
              const auto ds = make_dataset(series, std::nullopt, "input");
              const SaxParams sax{window, word_length, alphabet};
              SpfParams params{sax, trees, 1, seed, threads};
              py::gil_scoped_release release;
              return spf_cluster(sax_documents(ds, sax), k, params).labels;
          },
          py::arg("series"), py::arg("k"), py::arg("window"), py::arg("word_length") = 5,
          py::arg("alphabet") = 4, py::arg("trees") = 100, py::arg("seed") = 0, py::arg("threads") = 1);

    m.def("silhouette",
          [](const Rows& points, const std::vector<int>& labels) {
              const auto report = silhouette(euclidean_distances(points), canonical_partition(labels));
              return py::make_tuple(report.per_point, report.mean);
          },
          py::arg("points"), py::arg("labels"));

    m.def("select_k_json",
          [](const Rows& series, const std::optional<std::vector<int>>& labels, const std::string& mode,
             const std::optional<std::vector<std::size_t>>& windows,
             const std::optional<std::vector<int>>& alphabets,
             const std::optional<std::vector<std::size_t>>& word_lengths, int k_min, int k_max,
             std::size_t trees, std::uint64_t seed, unsigned threads, const std::string& name) {
              const auto ds = make_dataset(series, labels, name);
              auto grid = SweepGrid::defaults(parse_mode(mode));
              grid.k_min = k_min;
              grid.k_max = k_max;
              if (windows) grid.window_lengths = *windows;
              if (alphabets) grid.alphabet_sizes = *alphabets;
              if (word_lengths) grid.word_lengths = *word_lengths;
              SpfParams spf;
              spf.ensemble_size = trees;
              spf.seed = seed;
              spf.threads = threads;
              py::gil_scoped_release release;
              return report_to_json(run_sweep(ds, grid, spf));
          },
          py::arg("series"), py::arg("labels") = std::nullopt, py::arg("mode") = "bow",
          py::arg("windows") = std::nullopt, py::arg("alphabets") = std::nullopt,
          py::arg("word_lengths") = std::nullopt, py::arg("k_min") = 2, py::arg("k_max") = 10,
          py::arg("trees") = 100, py::arg("seed") = 0, py::arg("threads") = 1, py::arg("name") = "input");

    m.def("load_ucr",
          [](const std::string& path) {
              const auto ds = load_ucr(path);
              Rows series;
              std::vector<std::optional<int>> labels;
              for (const auto& s : ds.series) {
                  series.push_back(s.values);
                  labels.push_back(s.label);
              }
              return py::make_tuple(ds.name, series, labels);
          },
          py::arg("path"));

    m.def("generate_synthetic",
          [](std::size_t classes, std::size_t per_class, std::size_t length, double noise, std::uint64_t seed,
             const std::string& kind) {
              SyntheticSpec spec{parse_generator(kind), classes, per_class, length, noise, seed};
              const auto ds = generate_synthetic(spec);
              Rows series;
              std::vector<int> labels;
              for (const auto& s : ds.series) {
                  series.push_back(s.values);
                  labels.push_back(*s.label);
              }
              return py::make_tuple(series, labels);
          },
          py::arg("classes") = 3, py::arg("per_class") = 20, py::arg("length") = 128, py::arg("noise") = 0.1,
          py::arg("seed") = 0, py::arg("kind") = "mixed");

    m.def("adjusted_rand_index", &adjusted_rand_index, py::arg("a"), py::arg("b"));
    m.def("verdict", [](int predicted, int truth) { return std::string(to_string(verdict(predicted, truth))); },
          py::arg("predicted_k"), py::arg("true_k"));
    m.def("fixture_csv", [](const std::string& table) { return std::string(fixture_csv_text(parse_table(table))); },
          py::arg("table"));
}
