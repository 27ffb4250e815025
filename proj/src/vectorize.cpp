#include "spfk/vectorize.hpp"

#include <charconv>
#include <cmath>

namespace spfk {

void FrequencyFilter::validate() const {
    if (!(min_freq >= 0.0 && min_freq <= 1.0)) throw ConfigError("min_freq must lie in [0, 1]");
    if (!(max_freq > 0.0 && max_freq <= 1.0)) throw ConfigError("max_freq must lie in (0, 1]");
    if (!(min_freq < max_freq)) throw ConfigError("min_freq must be below max_freq");
}

bool FrequencyFilter::keeps(std::size_t doc_frequency, std::size_t documents) const noexcept {
    const double fraction = static_cast<double>(doc_frequency) / static_cast<double>(documents);
    return fraction >= min_freq && fraction <= max_freq;
}

FeatureMatrix bow_matrix(const Corpus& corpus) {
    FeatureMatrix fm;
    fm.kind = FeatureKind::BoW;
    fm.vocabulary = corpus.vocabulary.words;
    fm.rows = corpus.documents();
    fm.values.assign(fm.rows * fm.columns(), 0.0);
    for (std::size_t r = 0; r < fm.rows; ++r) {
        for (const auto& tc : corpus.rows[r]) fm.values[r * fm.columns() + tc.term] = tc.count;
    }
    return fm;
}

FeatureMatrix bow_matrix(std::span<const SaxDocument> docs) { return bow_matrix(build_corpus(docs)); }

FeatureMatrix tfidf_matrix(const Corpus& corpus, const FrequencyFilter& filter) {
    filter.validate();
    const std::size_t n = corpus.documents();
    if (n < 2) throw ConfigError("TF-IDF needs at least 2 documents");
    const auto& vocab = corpus.vocabulary;

    std::vector<std::size_t> column_of(vocab.size(), vocab.size());
    FeatureMatrix fm;
    fm.kind = FeatureKind::TfIdf;
    std::vector<double> idf;
    for (std::size_t w = 0; w < vocab.size(); ++w) {
        if (!filter.keeps(vocab.doc_frequency[w], n)) continue;
        column_of[w] = fm.vocabulary.size();
        fm.vocabulary.push_back(vocab.words[w]);
        idf.push_back(std::log(static_cast<double>(n) / static_cast<double>(vocab.doc_frequency[w])));
    }
    if (fm.vocabulary.empty()) throw ConfigError("frequency filter removed every word");

    fm.rows = n;
    fm.values.assign(n * fm.columns(), 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const auto length = static_cast<double>(corpus.doc_lengths[r]);
        for (const auto& tc : corpus.rows[r]) {
            const std::size_t c = column_of[tc.term];
            if (c == vocab.size()) continue;
            fm.values[r * fm.columns() + c] = (static_cast<double>(tc.count) / length) * idf[c];
        }
    }
    return fm;
}

FeatureMatrix tfidf_matrix(std::span<const SaxDocument> docs, const FrequencyFilter& filter) {
    return tfidf_matrix(build_corpus(docs), filter);
}

std::string feature_csv(const FeatureMatrix& fm, std::span<const std::string> ids) {
    std::string out = "id";
    for (const auto& w : fm.vocabulary) (out += ',') += w;
    out += '\n';
    char buf[64];
    for (std::size_t r = 0; r < fm.rows; ++r) {
        out += r < ids.size() ? ids[r] : std::to_string(r);
        for (double v : fm.row(r)) {
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            out += ',';
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

}  // namespace spfk
