#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spfk/core_data.hpp"

namespace spfk {

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 26;

struct SaxParams {
    std::size_t window = 0;       // subsequence length l
    std::size_t word_length = 0;  // PAA segments per word
    int alphabet = 0;             // letters 'a'.. ('a' + alphabet - 1)

    /// Throws ConfigError unless 1 <= word_length <= window and the alphabet is in [2, 26].
    void validate() const;
    friend bool operator==(const SaxParams&, const SaxParams&) = default;
};

using SaxWord = std::string;

struct SaxDocument {
    std::string source_id;
    std::vector<SaxWord> words;
};

/// Equiprobable cut points of the standard normal: Phi^-1(i / alphabet), i = 1..alphabet-1.
std::vector<double> breakpoints(int alphabet);

/// Inverse of the standard normal CDF on (0, 1).
double normal_quantile(double p);

/// Piecewise aggregate approximation. When the segment count does not divide
/// the input length each point's unit mass is split across the segments it
/// overlaps.
std::vector<double> paa(std::span<const double> values, std::size_t segments);
void paa_into(std::span<const double> values, std::span<double> out);

/// Values this close to a cut point count as equal to it.
inline constexpr double kCutTolerance = 1e-12;

/// Index of the region containing `v`: count of cut points below it by more
/// than kCutTolerance. A value equal to a cut point falls in the lower region.
int symbol_index(std::span<const double> cuts, double v);

SaxWord sax_word(std::span<const double> window, const SaxParams& params);
inline SaxWord sax_word(const Subsequence& sub, const SaxParams& params) {
    return sax_word(sub.values, params);
}

/// One word per sliding-window position, no numerosity reduction.
SaxDocument sax_document(const TimeSeries& series, const SaxParams& params);

/// Segment means of every z-normalized window of a series, row-major
/// (positions x word_length). Independent of the alphabet, so a sweep can
/// quantize one frame set under several alphabet sizes.
struct PaaFrames {
    std::string source_id;
    std::size_t word_length = 0;
    std::vector<double> means;

    std::size_t positions() const noexcept { return word_length ? means.size() / word_length : 0; }
};

PaaFrames paa_frames(const TimeSeries& series, std::size_t window, std::size_t word_length);
SaxDocument quantize(const PaaFrames& frames, int alphabet);

std::vector<SaxDocument> sax_documents(const Dataset& ds, const SaxParams& params);

}  // namespace spfk
