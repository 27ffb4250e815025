#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library's numeric code paths.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace oracle {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Bisection on the CDF; accurate to ~1e-15 on the bracket [-10, 10].
inline double normal_quantile(double p) {
    double lo = -10.0, hi = 10.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> znorm(const std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(x.size()));
    std::vector<double> out(x.size(), 0.0);
    if (sd > 1e-8) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mean) / sd;
    }
    return out;
}

// Fractional PAA by upsampling: repeat every point `segments` times, then
// average consecutive blocks of the original length.
inline std::vector<double> paa(const std::vector<double>& x, std::size_t segments) {
    std::vector<double> up;
    for (double v : x) up.insert(up.end(), segments, v);
    std::vector<double> out(segments);
    for (std::size_t j = 0; j < segments; ++j) {
        double s = 0.0;
        for (std::size_t i = j * x.size(); i < (j + 1) * x.size(); ++i) s += up[i];
        out[j] = s / static_cast<double>(x.size());
    }
    return out;
}

inline std::string sax_word(const std::vector<double>& window, std::size_t segments, int alphabet) {
    std::vector<double> cuts;
    for (int i = 1; i < alphabet; ++i) cuts.push_back(normal_quantile(static_cast<double>(i) / alphabet));
    const auto means = paa(znorm(window), segments);
    std::string word;
    for (double m : means) {
        int idx = 0;
        while (idx < static_cast<int>(cuts.size()) && cuts[static_cast<std::size_t>(idx)] < m - 1e-12) ++idx;
        word += static_cast<char>('a' + idx);
    }
    return word;
}

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Direct transcription of the silhouette definition over raw points.
inline std::vector<double> silhouette(const std::vector<std::vector<double>>& points, const std::vector<int>& labels) {
    const std::size_t n = points.size();
    std::vector<double> s(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::map<int, std::pair<double, int>> by_cluster;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            auto& e = by_cluster[labels[j]];
            e.first += euclid(points[i], points[j]);
            e.second += 1;
        }
        if (by_cluster.find(labels[i]) == by_cluster.end()) continue;  // singleton
        const double a = by_cluster[labels[i]].first / by_cluster[labels[i]].second;
        double b = std::numeric_limits<double>::infinity();
        for (const auto& [c, e] : by_cluster) {
            if (c != labels[i]) b = std::min(b, e.first / e.second);
        }
        const double m = std::max(a, b);
        s[i] = (m > 0.0 && std::isfinite(b)) ? (b - a) / m : 0.0;
    }
    return s;
}

}  // namespace oracle
