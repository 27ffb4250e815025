#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "spfk/fixtures.hpp"
#include "spfk/report.hpp"
#include "spfk/selection.hpp"

using namespace spfk;

namespace {

// Rising ramps versus falling ramps: every window of a class yields the same
// SAX word, and the two classes share no word.
Dataset two_blobs(std::size_t per_class) {
    Dataset ds;
    ds.name = "blobs";
    for (int cls = 0; cls < 2; ++cls) {
        for (std::size_t r = 0; r < per_class; ++r) {
            TimeSeries ts{"b" + std::to_string(cls) + "_" + std::to_string(r), std::vector<double>(40), cls + 1};
            for (std::size_t t = 0; t < 40; ++t) {
                const double ramp = static_cast<double>(t) * (1.0 + 0.05 * static_cast<double>(r));
                ts.values[t] = (cls == 0 ? ramp : -ramp) + static_cast<double>(r);
            }
            ds.series.push_back(ts);
        }
    }
    finalize_dataset(ds);
    return ds;
}

SweepGrid small_grid(Mode mode) {
    SweepGrid g = SweepGrid::defaults(mode);
    g.window_lengths = {20, 30};
    g.alphabet_sizes = {4, 5};
    g.k_max = 6;
    return g;
}

SpfParams spf_params(std::uint64_t seed) {
    SpfParams p;
    p.seed = seed;
    p.ensemble_size = 40;
    return p;
}

}  // namespace

TEST_CASE("verdict rule") {
    CHECK(verdict(5, 5) == Verdict::Correct);
    CHECK(verdict(3, 4) == Verdict::Close);
    CHECK(verdict(2, 7) == Verdict::Wrong);
    for (int t = 3; t < 30; ++t) {
        CHECK(verdict(t + 1, t) == Verdict::Close);
        CHECK(verdict(t - 1, t) == Verdict::Close);
        CHECK(verdict(t + 1, t) == verdict(t - 1, t));
    }
    CHECK_THROWS_AS(verdict(1, 3), ConfigError);
    CHECK(parse_verdict(to_string(Verdict::Close)) == Verdict::Close);
}

TEST_CASE("summarize percentages") {
    const std::vector<Verdict> all(4, Verdict::Correct);
    const auto s = summarize(all);
    CHECK(s.correct == 4);
    CHECK(s.correct_pct == 100.0);
    CHECK(s.close_pct == 0.0);
    CHECK(s.wrong_pct == 0.0);

    const std::vector<Verdict> mix{Verdict::Correct, Verdict::Wrong, Verdict::Wrong};
    const auto m = summarize(mix);
    CHECK(m.wrong == 2);
    CHECK(m.correct_pct + m.close_pct + m.wrong_pct == doctest::Approx(100.0).epsilon(1e-12));
    CHECK_THROWS_AS(summarize(std::vector<Verdict>{}), ConfigError);
}

TEST_CASE("mode and protocol names round-trip") {
    for (auto m : {Mode::Raw, Mode::BoW, Mode::TfIdf}) CHECK(parse_mode(to_string(m)) == m);
    for (auto p : {Protocol::Paper, Protocol::Full}) CHECK(parse_protocol(to_string(p)) == p);
    CHECK_THROWS_AS(parse_mode("cosine"), ConfigError);
}

TEST_CASE("grid validation") {
    auto g = SweepGrid::defaults(Mode::BoW);
    CHECK_NOTHROW(g.validate());
    g.k_min = 1;
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = SweepGrid::defaults(Mode::BoW);
    g.alphabet_sizes = {27};
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = SweepGrid::defaults(Mode::TfIdf);
    g.freq_filters.clear();
    CHECK_THROWS_AS(g.validate(), ConfigError);
}

TEST_CASE("argmax tie-break prefers smaller k, then window, alphabet, word length, filter") {
    const std::vector<FrequencyFilter> filters{{0.0, 0.5}, {0.1, 0.9}};
    SweepCell a{3, SaxParams{10, 5, 4}, filters[1], 0.5, {}};
    SweepCell b = a;
    b.silhouette = 0.6;
    CHECK(better_cell(b, a, filters));
    b = a;
    b.k = 2;
    CHECK(better_cell(b, a, filters));
    b = a;
    b.sax.window = 8;
    CHECK(better_cell(b, a, filters));
    b = a;
    b.sax.alphabet = 3;
    CHECK(better_cell(b, a, filters));
    b = a;
    b.sax.word_length = 4;
    CHECK(better_cell(b, a, filters));
    b = a;
    b.filter = filters[0];
    CHECK(better_cell(b, a, filters));
    CHECK_FALSE(better_cell(a, a, filters));
}

TEST_CASE("two disjoint blobs select k = 2") {
    const auto ds = two_blobs(6);
    SweepGrid g = SweepGrid::defaults(Mode::BoW);
    g.window_lengths = {4, 8};
    g.alphabet_sizes = {3, 4};
    g.word_lengths = {4};
    g.k_max = 5;
    const auto rep = run_sweep(ds, g, spf_params(1));
    CHECK(rep.predicted_k == 2);
    CHECK(rep.best_cell().silhouette == doctest::Approx(1.0));
    CHECK(rep.verdict == Verdict::Correct);
    CHECK(rep.true_k == 2);
}

TEST_CASE("single-cell grid selects that cell") {
    SyntheticSpec spec;
    spec.seed = 5;
    const auto ds = generate_synthetic(spec);
    SweepGrid g = SweepGrid::defaults(Mode::BoW);
    g.window_lengths = {30};
    g.alphabet_sizes = {5};
    g.k_min = g.k_max = 4;
    const auto rep = run_sweep(ds, g, spf_params(2));
    REQUIRE(rep.cells.size() == 1);
    CHECK(rep.best == 0);
    CHECK(rep.predicted_k == 4);
}

TEST_CASE("cells are enumerated window-major with k innermost") {
    SyntheticSpec spec;
    spec.seed = 1;
    const auto ds = generate_synthetic(spec);
    const auto g = small_grid(Mode::BoW);
    const auto rep = run_sweep(ds, g, spf_params(3));
    REQUIRE(rep.cells.size() == 2 * 2 * 5);
    std::size_t i = 0;
    for (auto w : g.window_lengths) {
        for (auto a : g.alphabet_sizes) {
            for (int k = g.k_min; k <= g.k_max; ++k, ++i) {
                CHECK(rep.cells[i].sax.window == w);
                CHECK(rep.cells[i].sax.alphabet == a);
                CHECK(rep.cells[i].k == k);
                CHECK(rep.cells[i].partition.k == k);
            }
        }
    }
    for (const auto& c : rep.cells) CHECK_FALSE(better_cell(c, rep.best_cell(), g.freq_filters));
}

TEST_CASE("sweep is deterministic across runs and thread counts") {
    SyntheticSpec spec;
    spec.seed = 8;
    const auto ds = generate_synthetic(spec);
    for (auto mode : {Mode::Raw, Mode::BoW, Mode::TfIdf}) {
        const auto g = small_grid(mode);
        auto p = spf_params(4);
        const auto reference = report_to_json(run_sweep(ds, g, p));
        CHECK(report_to_json(run_sweep(ds, g, p)) == reference);
        p.threads = 3;
        CHECK(report_to_json(run_sweep(ds, g, p)) == reference);
    }
}

TEST_CASE("raw mode ignores positive rescaling of the series") {
    SyntheticSpec spec;
    spec.seed = 10;
    const auto ds = generate_synthetic(spec);
    auto scaled = ds;
    for (auto& s : scaled.series) for (auto& v : s.values) v = 7.5 * v - 3.0;
    const auto g = small_grid(Mode::Raw);
    const auto a = run_sweep(ds, g, spf_params(5));
    const auto b = run_sweep(scaled, g, spf_params(5));
    CHECK(a.predicted_k == b.predicted_k);
    CHECK(a.best == b.best);
}

TEST_CASE("adding a dominated grid cell does not change the prediction") {
    int dominated = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        SyntheticSpec spec;
        spec.seed = seed;
        const auto ds = generate_synthetic(spec);
        auto g = small_grid(Mode::BoW);
        const auto base = run_sweep(ds, g, spf_params(seed));
        g.window_lengths.push_back(5);
        const auto grown = run_sweep(ds, g, spf_params(seed));
        double extra_best = -2.0;
        for (const auto& c : grown.cells) {
            if (c.sax.window == 5) extra_best = std::max(extra_best, c.silhouette);
        }
        if (extra_best < base.best_cell().silhouette) {
            ++dominated;
            CHECK(grown.predicted_k == base.predicted_k);
            CHECK(grown.best_cell().silhouette == base.best_cell().silhouette);
        }
    }
    CHECK(dominated > 0);
}

TEST_CASE("windows longer than the shortest series are skipped with a reason") {
    SyntheticSpec spec;
    spec.length = 40;
    const auto ds = generate_synthetic(spec);
    auto g = small_grid(Mode::BoW);
    g.window_lengths = {20, 50};
    const auto rep = run_sweep(ds, g, spf_params(6));
    for (const auto& c : rep.cells) CHECK(c.sax.window == 20);
    REQUIRE(rep.skipped.size() == 2);
    CHECK(rep.skipped[0].sax.window == 50);
    CHECK(rep.skipped[0].reason.find("window exceeds") != std::string::npos);

    g.window_lengths = {50};
    CHECK_THROWS_AS(run_sweep(ds, g, spf_params(6)), ConfigError);
}

TEST_CASE("word length is clamped to the window") {
    SyntheticSpec spec;
    spec.seed = 3;
    const auto ds = generate_synthetic(spec);
    auto g = small_grid(Mode::BoW);
    g.window_lengths = {3};
    g.alphabet_sizes = {3};
    g.k_max = 3;
    const auto rep = run_sweep(ds, g, spf_params(7));
    for (const auto& c : rep.cells) CHECK(c.sax.word_length == 3);
}

TEST_CASE("precondition errors") {
    SyntheticSpec spec;
    spec.per_class = 2;
    const auto ds = generate_synthetic(spec);
    auto g = small_grid(Mode::BoW);
    g.k_max = 7;
    CHECK_THROWS_AS(run_sweep(ds, g, spf_params(1)), ConfigError);

    Dataset ragged;
    ragged.name = "ragged";
    ragged.series.push_back({"a", std::vector<double>(40, 1.0), 1});
    ragged.series.push_back({"b", std::vector<double>(45, 2.0), 2});
    ragged.series.push_back({"c", std::vector<double>(42, 3.0), 1});
    for (auto& s : ragged.series) for (std::size_t t = 0; t < s.values.size(); ++t) s.values[t] += std::sin(0.3 * t);
    finalize_dataset(ragged);
    g = small_grid(Mode::Raw);
    g.k_max = 3;
    CHECK_THROWS_WITH_AS(run_sweep(ragged, g, spf_params(1)), "raw mode requires equal lengths", IngestError);
    g.mode = Mode::BoW;
    CHECK_NOTHROW(run_sweep(ragged, g, spf_params(1)));
}

TEST_CASE("TF-IDF default protocol reuses the BoW-optimal SAX parameters") {
    SyntheticSpec spec;
    spec.seed = 12;
    const auto ds = generate_synthetic(spec);
    const auto bow = run_sweep(ds, small_grid(Mode::BoW), spf_params(9));
    const auto tfidf = run_sweep(ds, small_grid(Mode::TfIdf), spf_params(9));
    REQUIRE_FALSE(tfidf.cells.empty());
    for (const auto& c : tfidf.cells) {
        CHECK(c.sax == bow.best_cell().sax);
        CHECK(c.filter.has_value());
    }
    auto full = small_grid(Mode::TfIdf);
    full.protocol = Protocol::Full;
    const auto swept = run_sweep(ds, full, spf_params(9));
    CHECK(swept.cells.size() + swept.skipped.size() * 5 == 2 * 2 * 4 * 5);
}
