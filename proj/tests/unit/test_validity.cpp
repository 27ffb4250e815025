#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "spfk/fixtures.hpp"
#include "spfk/rng.hpp"
#include "spfk/validity.hpp"

using namespace spfk;

namespace {

std::vector<std::vector<double>> random_points(SplitMix64& rng, std::size_t n, std::size_t dims) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(dims));
    for (auto& p : pts) for (auto& v : p) v = rng.uniform() * 10.0 - 5.0;
    return pts;
}

// Labels in [0, k) with every cluster non-empty.
std::vector<int> random_labels(SplitMix64& rng, std::size_t n, int k) {
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i < static_cast<std::size_t>(k) ? static_cast<int>(i) : static_cast<int>(rng.below(k));
    }
    return labels;
}

}  // namespace

TEST_CASE("euclidean distances: examples") {
    const std::vector<std::vector<double>> pts{{0, 0}, {3, 4}, {3, 4}};
    const auto dm = euclidean_distances(pts);
    CHECK(dm(0, 1) == 5.0);
    CHECK(dm(1, 0) == 5.0);
    CHECK(dm(1, 2) == 0.0);
    CHECK(dm(0, 0) == 0.0);
    const std::vector<std::vector<double>> ragged{{0, 0}, {1}};
    CHECK_THROWS_WITH_AS(euclidean_distances(ragged), doctest::Contains("dimension mismatch"), ConfigError);
}

TEST_CASE("euclidean distances: random 5x4 against the double-loop oracle, all thread counts") {
    SplitMix64 rng(41);
    const auto pts = random_points(rng, 5, 4);
    for (unsigned threads : {1u, 2u, 4u}) {
        const auto dm = euclidean_distances(pts, threads);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) CHECK(std::abs(dm(i, j) - oracle::euclid(pts[i], pts[j])) < 1e-12);
        }
    }
}

TEST_CASE("sparse feature distances are bit-identical to the dense sum") {
    SyntheticSpec spec;
    spec.seed = 6;
    const auto docs = sax_documents(generate_synthetic(spec), SaxParams{20, 5, 6});
    for (const auto& fm : {bow_matrix(docs), tfidf_matrix(docs, FrequencyFilter{0.01, 0.99})}) {
        std::vector<std::vector<double>> dense;
        for (std::size_t r = 0; r < fm.rows; ++r) dense.emplace_back(fm.row(r).begin(), fm.row(r).end());
        const auto a = euclidean_distances(fm);
        const auto b = euclidean_distances(dense);
        for (std::size_t i = 0; i < fm.rows; ++i) {
            for (std::size_t j = 0; j < fm.rows; ++j) CHECK(a(i, j) == b(i, j));
        }
    }
}

TEST_CASE("silhouette: two tight pairs on a line") {
    const std::vector<std::vector<double>> pts{{0}, {1}, {10}, {11}};
    const auto rep = silhouette(euclidean_distances(pts), Partition{2, {0, 0, 1, 1}});
    CHECK(std::abs(rep.per_point[0] - 9.5 / 10.5) < 1e-12);
    CHECK(rep.per_point[0] == doctest::Approx(0.9048).epsilon(1e-4));
    CHECK(rep.per_point[3] == doctest::Approx(9.5 / 10.5));
}

TEST_CASE("silhouette: identical points and singletons score zero") {
    const std::vector<std::vector<double>> same(4, std::vector<double>{2.0, -1.0});
    const auto rep = silhouette(euclidean_distances(same), Partition{2, {0, 1, 0, 1}});
    for (double s : rep.per_point) CHECK(s == 0.0);
    CHECK(rep.mean == 0.0);

    const std::vector<std::vector<double>> pts{{0}, {1}, {7}};
    const auto single = silhouette(euclidean_distances(pts), Partition{2, {0, 0, 1}});
    CHECK(single.per_point[2] == 0.0);
}

TEST_CASE("silhouette rejects a single cluster") {
    const std::vector<std::vector<double>> pts{{0}, {1}};
    CHECK_THROWS_WITH_AS(silhouette(euclidean_distances(pts), Partition{1, {0, 0}}), doctest::Contains("silhouette undefined"),
                         ConfigError);
}

TEST_CASE("silhouette: 12 points in 3 clusters against the brute-force oracle") {
    SplitMix64 rng(12);
    const auto pts = random_points(rng, 12, 3);
    const auto labels = random_labels(rng, 12, 3);
    const auto rep = silhouette(euclidean_distances(pts), Partition{3, labels});
    const auto want = oracle::silhouette(pts, labels);
    double mean = 0.0;
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(std::abs(rep.per_point[i] - want[i]) < 1e-9);
        mean += want[i];
    }
    CHECK(std::abs(rep.mean - mean / 12) < 1e-9);
}

TEST_CASE("silhouette: values stay in [-1, 1] and are invariant to distance scaling") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(25);
        const int k = 2 + static_cast<int>(rng.below(std::min<std::uint64_t>(4, n - 1)));
        const auto pts = random_points(rng, n, 1 + rng.below(6));
        const Partition p{k, random_labels(rng, n, k)};
        const auto dm = euclidean_distances(pts);
        const auto base = silhouette(dm, p);
        const double c = 0.001 + rng.uniform() * 1000.0;
        const auto scaled = silhouette(dm.scaled(c), p);
        CHECK(base.mean >= -1.0);
        CHECK(base.mean <= 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(base.per_point[i] >= -1.0);
            CHECK(base.per_point[i] <= 1.0);
            CHECK(std::abs(base.per_point[i] - scaled.per_point[i]) < 1e-12);
        }
    }
}

TEST_CASE("silhouette: well-separated clusters approach 1") {
    // Unit-diameter blobs whose centres are 100 apart.
    SplitMix64 rng(3);
    std::vector<std::vector<double>> pts;
    std::vector<int> labels;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 10; ++i) {
            pts.push_back({100.0 * c + rng.uniform() - 0.5, rng.uniform() - 0.5});
            labels.push_back(c);
        }
    }
    CHECK(silhouette(euclidean_distances(pts), Partition{3, labels}).mean > 0.97);
}

TEST_CASE("silhouette does not depend on cluster label names") {
    SplitMix64 rng(8);
    const auto pts = random_points(rng, 15, 2);
    const auto labels = random_labels(rng, 15, 3);
    std::vector<int> renamed(labels.size());
    const int perm[] = {2, 0, 1};
    for (std::size_t i = 0; i < labels.size(); ++i) renamed[i] = perm[labels[i]];
    const auto dm = euclidean_distances(pts);
    const auto a = silhouette(dm, Partition{3, labels});
    const auto b = silhouette(dm, Partition{3, renamed});
    CHECK(a.per_point == b.per_point);
    CHECK(a.mean == b.mean);
}
