#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spfk/corpus.hpp"

namespace spfk {

enum class FeatureKind { BoW, TfIdf };

/// Dense per-series feature rows over a (possibly filtered) vocabulary.
struct FeatureMatrix {
    FeatureKind kind = FeatureKind::BoW;
    std::vector<SaxWord> vocabulary;
    std::size_t rows = 0;
    std::vector<double> values;  // row-major, rows x vocabulary.size()

    std::size_t columns() const noexcept { return vocabulary.size(); }
    double operator()(std::size_t r, std::size_t c) const noexcept { return values[r * columns() + c]; }
    std::span<const double> row(std::size_t r) const noexcept {
        return std::span<const double>(values).subspan(r * columns(), columns());
    }
};

/// Document-frequency window: a word is kept when df / n lies in
/// [min_freq, max_freq], both ends inclusive.
struct FrequencyFilter {
    double min_freq = 0.0;
    double max_freq = 1.0;

    void validate() const;
    bool keeps(std::size_t doc_frequency, std::size_t documents) const noexcept;
    friend bool operator==(const FrequencyFilter&, const FrequencyFilter&) = default;
};

FeatureMatrix bow_matrix(const Corpus& corpus);
FeatureMatrix bow_matrix(std::span<const SaxDocument> docs);

/// TF(w, d) = count(w, d) / |d|, IDF(w) = ln(n / df(w)); no smoothing or
/// row normalization. Throws ConfigError when the filter keeps no word.
FeatureMatrix tfidf_matrix(const Corpus& corpus, const FrequencyFilter& filter);
FeatureMatrix tfidf_matrix(std::span<const SaxDocument> docs, const FrequencyFilter& filter);

/// Debug dump: header row of vocabulary words, then `id,values...` per row.
std::string feature_csv(const FeatureMatrix& fm, std::span<const std::string> ids);

}  // namespace spfk
