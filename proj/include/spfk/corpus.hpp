#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spfk/sax.hpp"

namespace spfk {

struct Vocabulary {
    std::vector<SaxWord> words;               // sorted, unique
    std::vector<std::uint32_t> doc_frequency;  // documents containing each word

    std::size_t size() const noexcept { return words.size(); }
    /// Position of `word`, or size() when absent.
    std::size_t find(const SaxWord& word) const;
};

struct TermCount {
    std::uint32_t term;
    std::uint32_t count;
};

/// Documents re-expressed over a shared sorted vocabulary: one sparse
/// (term, count) row per document, terms ascending.
struct Corpus {
    Vocabulary vocabulary;
    std::vector<std::vector<TermCount>> rows;
    std::vector<std::size_t> doc_lengths;

    std::size_t documents() const noexcept { return rows.size(); }
};

/// Throws ConfigError when there are no documents or every document is empty.
Corpus build_corpus(std::span<const SaxDocument> docs);

}  // namespace spfk
