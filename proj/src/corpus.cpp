#include "spfk/corpus.hpp"

#include <algorithm>

namespace spfk {

std::size_t Vocabulary::find(const SaxWord& word) const {
    const auto it = std::lower_bound(words.begin(), words.end(), word);
    if (it == words.end() || *it != word) return words.size();
    return static_cast<std::size_t>(it - words.begin());
}

Corpus build_corpus(std::span<const SaxDocument> docs) {
    if (docs.empty()) throw ConfigError("no documents");
    Corpus corpus;
    auto& vocab = corpus.vocabulary.words;
    for (const auto& doc : docs) vocab.insert(vocab.end(), doc.words.begin(), doc.words.end());
    if (vocab.empty()) throw ConfigError("all documents are empty");
    std::sort(vocab.begin(), vocab.end());
    vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());

    corpus.vocabulary.doc_frequency.assign(vocab.size(), 0);
    corpus.rows.reserve(docs.size());
    corpus.doc_lengths.reserve(docs.size());
    std::vector<std::uint32_t> ids;
    for (const auto& doc : docs) {
        ids.clear();
        for (const auto& w : doc.words) {
            ids.push_back(static_cast<std::uint32_t>(
                std::lower_bound(vocab.begin(), vocab.end(), w) - vocab.begin()));
        }
        std::sort(ids.begin(), ids.end());
        std::vector<TermCount> row;
        for (std::size_t i = 0; i < ids.size();) {
            std::size_t j = i;
            while (j < ids.size() && ids[j] == ids[i]) ++j;
            row.push_back({ids[i], static_cast<std::uint32_t>(j - i)});
            ++corpus.vocabulary.doc_frequency[ids[i]];
            i = j;
        }
        corpus.rows.push_back(std::move(row));
        corpus.doc_lengths.push_back(doc.words.size());
    }
    return corpus;
}

}  // namespace spfk
