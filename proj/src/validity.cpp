#include "spfk/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spfk/parallel.hpp"

namespace spfk {

DistanceMatrix DistanceMatrix::scaled(double factor) const {
    DistanceMatrix out(n_);
    for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] * factor;
    return out;
}

DistanceMatrix euclidean_distances(std::span<const std::vector<double>> rows, unsigned threads) {
    const std::size_t n = rows.size();
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw ConfigError("dimension mismatch between vectors");
    }
    DistanceMatrix dm(n);
    parallel_for(n, threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t c = 0; c < rows[i].size(); ++c) {
                const double diff = rows[i][c] - rows[j][c];
                sum += diff * diff;
            }
            dm.set(i, j, std::sqrt(sum));
        }
    });
    return dm;
}

DistanceMatrix euclidean_distances(const FeatureMatrix& fm, unsigned threads) {
    const std::size_t n = fm.rows;
    std::vector<std::vector<std::size_t>> nonzero(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = fm.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] != 0.0) nonzero[r].push_back(c);
        }
    }
    DistanceMatrix dm(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const auto a = fm.row(i);
        const auto& ia = nonzero[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto b = fm.row(j);
            const auto& ib = nonzero[j];
            double sum = 0.0;
            std::size_t p = 0, q = 0;
            while (p < ia.size() || q < ib.size()) {
                const std::size_t ca = p < ia.size() ? ia[p] : fm.columns();
                const std::size_t cb = q < ib.size() ? ib[q] : fm.columns();
                const std::size_t c = std::min(ca, cb);
                const double diff = a[c] - b[c];
                sum += diff * diff;
                if (ca == c) ++p;
                if (cb == c) ++q;
            }
            dm.set(i, j, std::sqrt(sum));
        }
    });
    return dm;
}

SilhouetteReport silhouette(const DistanceMatrix& dm, const Partition& partition) {
    if (partition.k < 2) throw ConfigError("silhouette undefined for fewer than 2 clusters");
    const std::size_t n = dm.size();
    if (partition.labels.size() != n) throw ConfigError("partition size differs from distance matrix");
    const auto k = static_cast<std::size_t>(partition.k);
    std::vector<std::size_t> sizes(k, 0);
    for (int label : partition.labels) {
        if (label < 0 || static_cast<std::size_t>(label) >= k) throw ConfigError("cluster label out of range");
        ++sizes[static_cast<std::size_t>(label)];
    }

    SilhouetteReport report;
    report.per_point.resize(n, 0.0);
    std::vector<double> totals(k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto own = static_cast<std::size_t>(partition.labels[i]);
        if (sizes[own] == 1) continue;
        std::fill(totals.begin(), totals.end(), 0.0);
        const auto row = dm.row(i);
        for (std::size_t j = 0; j < n; ++j) totals[static_cast<std::size_t>(partition.labels[j])] += row[j];
        const double a = totals[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c != own && sizes[c] > 0) b = std::min(b, totals[c] / static_cast<double>(sizes[c]));
        }
        const double scale = std::max(a, b);
        if (scale > 0.0 && std::isfinite(b)) report.per_point[i] = (b - a) / scale;
    }
    double sum = 0.0;
    for (double s : report.per_point) sum += s;
    report.mean = sum / static_cast<double>(n);
    return report;
}

}  // namespace spfk
