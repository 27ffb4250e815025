#include "spfk/sax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spfk {

void SaxParams::validate() const {
    if (window == 0) throw ConfigError("SAX window length must be positive");
    if (word_length == 0) throw ConfigError("SAX word length must be positive");
    if (word_length > window) throw ConfigError("SAX word length exceeds window length");
    if (alphabet < kMinAlphabet || alphabet > kMaxAlphabet) {
        throw ConfigError("SAX alphabet size must lie in [2, 26], got " + std::to_string(alphabet));
    }
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        throw ConfigError("quantile probability outside [0, 1]");
    }
    if (p == 0.5) return 0.0;

    // Acklam's rational approximation followed by one Halley step against erfc.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double low = 0.02425;

    double x;
    if (p < low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

std::vector<double> breakpoints(int alphabet) {
    if (alphabet < kMinAlphabet || alphabet > kMaxAlphabet) {
        throw ConfigError("alphabet size must lie in [2, 26], got " + std::to_string(alphabet));
    }
    std::vector<double> cuts(static_cast<std::size_t>(alphabet - 1));
    // Fill the lower half and mirror it so the cuts are exactly antisymmetric.
    for (int i = 1; i < alphabet; ++i) {
        const int mirror = alphabet - i;
        if (2 * i == alphabet) {
            cuts[i - 1] = 0.0;
        } else if (2 * i < alphabet) {
            cuts[i - 1] = normal_quantile(static_cast<double>(i) / alphabet);
        } else {
            cuts[i - 1] = -cuts[mirror - 1];
        }
    }
    return cuts;
}

void paa_into(std::span<const double> values, std::span<double> out) {
    const std::size_t len = values.size();
    const std::size_t segments = out.size();
    if (len % segments == 0) {
        const std::size_t width = len / segments;
        for (std::size_t j = 0; j < segments; ++j) {
            double sum = 0.0;
            for (std::size_t i = j * width; i < (j + 1) * width; ++i) sum += values[i];
            out[j] = sum / static_cast<double>(width);
        }
        return;
    }
    // Scale both axes by `segments`: point i spans [i*segments, (i+1)*segments),
    // segment j spans [j*len, (j+1)*len). Overlaps are then integers.
    for (std::size_t j = 0; j < segments; ++j) {
        const std::size_t seg_lo = j * len;
        const std::size_t seg_hi = seg_lo + len;
        double sum = 0.0;
        for (std::size_t i = seg_lo / segments; i < len && i * segments < seg_hi; ++i) {
            const std::size_t lo = std::max(i * segments, seg_lo);
            const std::size_t hi = std::min((i + 1) * segments, seg_hi);
            if (hi > lo) sum += static_cast<double>(hi - lo) * values[i];
        }
        out[j] = sum / static_cast<double>(len);
    }
}

std::vector<double> paa(std::span<const double> values, std::size_t segments) {
    if (segments == 0) throw ConfigError("PAA needs at least one segment");
    if (segments > values.size()) throw ConfigError("PAA segment count exceeds input length");
    std::vector<double> out(segments);
    paa_into(values, out);
    return out;
}

int symbol_index(std::span<const double> cuts, double v) {
    return static_cast<int>(std::lower_bound(cuts.begin(), cuts.end(), v - kCutTolerance) - cuts.begin());
}

SaxWord sax_word(std::span<const double> window, const SaxParams& params) {
    params.validate();
    if (window.size() != params.window) throw ConfigError("subsequence length differs from SAX window");
    const auto z = znormalize(window);
    const auto means = paa(z, params.word_length);
    const auto cuts = breakpoints(params.alphabet);
    SaxWord word(params.word_length, 'a');
    for (std::size_t j = 0; j < means.size(); ++j) {
        word[j] = static_cast<char>('a' + symbol_index(cuts, means[j]));
    }
    return word;
}

PaaFrames paa_frames(const TimeSeries& series, std::size_t window, std::size_t word_length) {
    if (window == 0 || word_length == 0 || word_length > window) {
        throw ConfigError("invalid SAX window/word length");
    }
    if (window > series.length()) {
        throw ConfigError("window exceeds series length for series '" + series.id + "'");
    }
    PaaFrames frames;
    frames.source_id = series.id;
    frames.word_length = word_length;
    const std::size_t positions = series.length() - window + 1;
    frames.means.resize(positions * word_length);
    std::vector<double> z(window);
    const std::span<const double> all(series.values);
    for (std::size_t start = 0; start < positions; ++start) {
        znormalize_into(all.subspan(start, window), z);
        paa_into(z, std::span<double>(frames.means).subspan(start * word_length, word_length));
    }
    return frames;
}

SaxDocument quantize(const PaaFrames& frames, int alphabet) {
    const auto cuts = breakpoints(alphabet);
    SaxDocument doc;
    doc.source_id = frames.source_id;
    const std::size_t w = frames.word_length;
    doc.words.reserve(frames.positions());
    for (std::size_t p = 0; p < frames.positions(); ++p) {
        SaxWord word(w, 'a');
        for (std::size_t j = 0; j < w; ++j) {
            word[j] = static_cast<char>('a' + symbol_index(cuts, frames.means[p * w + j]));
        }
        doc.words.push_back(std::move(word));
    }
    return doc;
}

SaxDocument sax_document(const TimeSeries& series, const SaxParams& params) {
    params.validate();
    return quantize(paa_frames(series, params.window, params.word_length), params.alphabet);
}

std::vector<SaxDocument> sax_documents(const Dataset& ds, const SaxParams& params) {
    std::vector<SaxDocument> docs;
    docs.reserve(ds.size());
    for (const auto& s : ds.series) docs.push_back(sax_document(s, params));
    return docs;
}

}  // namespace spfk
