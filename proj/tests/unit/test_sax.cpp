#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spfk/rng.hpp"
#include "spfk/sax.hpp"

using namespace spfk;

TEST_CASE("breakpoints: small alphabets") {
    CHECK(breakpoints(2) == std::vector<double>{0.0});
    const auto b4 = breakpoints(4);
    REQUIRE(b4.size() == 3);
    CHECK(b4[0] == doctest::Approx(-0.6745).epsilon(1e-4));
    CHECK(b4[1] == 0.0);
    CHECK(b4[2] == doctest::Approx(0.6745).epsilon(1e-4));
    const auto b3 = breakpoints(3);
    CHECK(b3[0] == doctest::Approx(-0.4307).epsilon(1e-4));
    CHECK(b3[1] == doctest::Approx(0.4307).epsilon(1e-4));
    CHECK_THROWS_AS(breakpoints(1), ConfigError);
    CHECK_THROWS_AS(breakpoints(27), ConfigError);
}

TEST_CASE("breakpoints: strictly increasing, antisymmetric, match the bisection oracle") {
    for (int a = 2; a <= 26; ++a) {
        const auto b = breakpoints(a);
        REQUIRE(b.size() == static_cast<std::size_t>(a - 1));
        for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] < b[i + 1]);
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b[i] == -b[b.size() - 1 - i]);
            CHECK(std::abs(b[i] - oracle::normal_quantile(static_cast<double>(i + 1) / a)) < 1e-12);
        }
    }
}

TEST_CASE("breakpoints split standard normal samples into equiprobable regions") {
    std::mt19937_64 gen(12345);
    std::normal_distribution<double> normal;
    std::vector<double> samples(1'000'000);
    for (auto& s : samples) s = normal(gen);
    for (int a : {2, 3, 4, 5, 8, 10, 20, 26}) {
        const auto cuts = breakpoints(a);
        std::vector<std::size_t> hist(static_cast<std::size_t>(a), 0);
        for (double s : samples) ++hist[static_cast<std::size_t>(symbol_index(cuts, s))];
        for (auto h : hist) {
            CHECK(std::abs(static_cast<double>(h) / samples.size() - 1.0 / a) < 0.01);
        }
    }
}

TEST_CASE("paa examples") {
    CHECK(paa(std::vector<double>{1, 1, 3, 3}, 2) == std::vector<double>{1, 3});
    CHECK(paa(std::vector<double>{4.5, -2}, 2) == std::vector<double>{4.5, -2});
    const auto frac = paa(std::vector<double>{0, 3, 6}, 2);
    CHECK(frac[0] == doctest::Approx(1.0));
    CHECK(frac[1] == doctest::Approx(5.0));
    CHECK_THROWS_AS(paa(std::vector<double>{1, 2}, 3), ConfigError);
}

TEST_CASE("paa agrees with the upsampling oracle and preserves the mean") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto l = 1 + rng.below(60);
        const auto w = 1 + rng.below(l);
        std::vector<double> x(l);
        for (auto& v : x) v = rng.uniform() * 10 - 5;
        const auto got = paa(x, w);
        const auto want = oracle::paa(x, w);
        double mean_in = 0.0, mean_out = 0.0;
        for (std::size_t j = 0; j < w; ++j) {
            CHECK(std::abs(got[j] - want[j]) < 1e-9);
            mean_out += got[j];
        }
        for (double v : x) mean_in += v;
        CHECK(std::abs(mean_in / l - mean_out / w) < 1e-9);
    }
}

TEST_CASE("sax_word examples") {
    // High first half, low second half: segment means +1 and -1.
    const std::vector<double> high_low{2, 2.2, 1.8, 2, -2, -1.9, -2.1, -2};
    CHECK(sax_word(high_low, SaxParams{8, 2, 4}) == "da");
    CHECK(sax_word(std::vector<double>{3, 3, 3, 3}, SaxParams{4, 2, 4}) == "bb");
    CHECK(sax_word(std::vector<double>{3, 3, 3, 3}, SaxParams{4, 2, 3}) == "bb");
    CHECK(sax_word(std::vector<double>{3, 3, 3, 3}, SaxParams{4, 2, 2}) == "aa");
    CHECK(sax_word(std::vector<double>{0, 1, 2, 3}, SaxParams{4, 2, 2}) == "ab");
    CHECK_THROWS_AS(sax_word(std::vector<double>{0, 1, 2}, SaxParams{4, 2, 2}), ConfigError);
    CHECK_THROWS_AS(sax_word(std::vector<double>{0, 1, 2}, SaxParams{3, 4, 2}), ConfigError);
}

TEST_CASE("a segment mean equal to a breakpoint takes the lower letter") {
    const std::vector<double> cuts{-1.0, 0.0, 1.0};
    CHECK(symbol_index(cuts, 0.0) == 1);
    CHECK(symbol_index(cuts, 1e-300) == 1);
    CHECK(symbol_index(cuts, 1e-15) == 1);
    CHECK(symbol_index(cuts, 1e-9) == 2);
    CHECK(symbol_index(cuts, -1.0) == 0);
    CHECK(symbol_index(cuts, 5.0) == 3);
}

TEST_CASE("sax_word matches the brute-force oracle") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto l = 2 + rng.below(40);
        const auto w = 1 + rng.below(std::min<std::uint64_t>(l, 8));
        const int a = 2 + static_cast<int>(rng.below(25));
        std::vector<double> x(l);
        for (auto& v : x) v = rng.uniform() * 4 - 2;
        CHECK(sax_word(x, SaxParams{l, w, a}) == oracle::sax_word(x, w, a));
    }
}

TEST_CASE("sax_word is invariant to positive affine maps") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto l = 4 + rng.below(40);
        const auto w = 1 + rng.below(std::min<std::uint64_t>(l, 6));
        const int a = 2 + static_cast<int>(rng.below(19));
        std::vector<double> x(l), y(l);
        const double scale = 0.01 + rng.uniform() * 100;
        const double shift = rng.uniform() * 200 - 100;
        for (std::size_t i = 0; i < l; ++i) {
            x[i] = rng.uniform();
            y[i] = scale * x[i] + shift;
        }
        CHECK(sax_word(x, SaxParams{l, w, a}) == sax_word(y, SaxParams{l, w, a}));
    }
}

TEST_CASE("sax_document") {
    const TimeSeries ts{"s", {0, 1, 2, 3, 10}, 1};
    const auto doc = sax_document(ts, SaxParams{4, 2, 2});
    REQUIRE(doc.words.size() == 2);
    CHECK(doc.words[0] == "ab");
    CHECK(doc.words[1] == oracle::sax_word({1, 2, 3, 10}, 2, 2));
    CHECK(doc.source_id == "s");

    const TimeSeries whole{"w", {1, 5, 2, 8}, 1};
    CHECK(sax_document(whole, SaxParams{4, 2, 4}).words.size() == 1);

    const TimeSeries flat{"f", std::vector<double>(30, 2.5), 1};
    const auto flat_doc = sax_document(flat, SaxParams{6, 3, 5});
    for (const auto& w : flat_doc.words) CHECK(w == "ccc");

    const TimeSeries shorty{"short-one", {1, 2, 3}, 1};
    CHECK_THROWS_WITH_AS(sax_document(shorty, SaxParams{4, 2, 3}),
                         "window exceeds series length for series 'short-one'", ConfigError);
}

TEST_CASE("sax_document length law and per-window agreement with the oracle") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = 3 + rng.below(80);
        const auto l = 2 + rng.below(m - 1);
        const auto w = 1 + rng.below(std::min<std::uint64_t>(l, 6));
        const int a = 2 + static_cast<int>(rng.below(10));
        TimeSeries ts{"r", std::vector<double>(m), std::nullopt};
        double level = 0;
        for (auto& v : ts.values) v = (level += rng.uniform() - 0.5);
        const auto doc = sax_document(ts, SaxParams{l, w, a});
        REQUIRE(doc.words.size() == m - l + 1);
        for (std::size_t s = 0; s + l <= m; ++s) {
            const std::vector<double> window(ts.values.begin() + s, ts.values.begin() + s + l);
            CHECK(doc.words[s] == oracle::sax_word(window, w, a));
        }
    }
}
