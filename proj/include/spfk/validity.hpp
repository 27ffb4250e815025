#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spfk/spf.hpp"
#include "spfk/vectorize.hpp"

namespace spfk {

/// Symmetric n x n matrix with a zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) noexcept {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }
    std::span<const double> row(std::size_t i) const noexcept {
        return std::span<const double>(d_).subspan(i * n_, n_);
    }
    DistanceMatrix scaled(double factor) const;

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// L2 distances between equal-length vectors. Throws ConfigError on a
/// dimension mismatch.
DistanceMatrix euclidean_distances(std::span<const std::vector<double>> rows, unsigned threads = 1);
/// Same metric over feature rows; zero cells are skipped, which leaves the
/// result bit-identical to the dense sum.
DistanceMatrix euclidean_distances(const FeatureMatrix& fm, unsigned threads = 1);

struct SilhouetteReport {
    std::vector<double> per_point;
    double mean = 0.0;
};

/// s(i) = (b - a) / max(a, b); s = 0 for members of singleton clusters and
/// wherever max(a, b) = 0. Throws ConfigError when k < 2.
SilhouetteReport silhouette(const DistanceMatrix& dm, const Partition& partition);

}  // namespace spfk
