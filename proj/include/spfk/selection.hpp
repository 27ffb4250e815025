#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spfk/core_data.hpp"
#include "spfk/spf.hpp"
#include "spfk/vectorize.hpp"

namespace spfk {

/// Feature space the silhouette is measured in. SPF always clusters SAX
/// documents; Raw scores those partitions on z-normalized raw series.
enum class Mode { Raw, BoW, TfIdf };

/// Paper: TF-IDF reuses the SAX parameters that won the BoW sweep and only
/// sweeps frequency filters. Full: TF-IDF sweeps the whole grid.
enum class Protocol { Paper, Full };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);
std::string_view to_string(Protocol protocol);
Protocol parse_protocol(std::string_view text);

struct SweepGrid {
    Mode mode = Mode::BoW;
    Protocol protocol = Protocol::Paper;
    int k_min = 2;
    int k_max = 10;
    std::vector<std::size_t> window_lengths;
    std::vector<int> alphabet_sizes;
    std::vector<std::size_t> word_lengths{5};
    std::vector<FrequencyFilter> freq_filters;

    /// Windows {3,5,8,10,12,20,30,40,50,100,200,350}, alphabets
    /// {3,4,5,6,8,9,10,20}, word length 5, and four TF-IDF filters.
    static SweepGrid defaults(Mode mode);
    void validate() const;
};

struct SweepCell {
    int k = 0;
    SaxParams sax;  // word_length is the effective value, min(requested, window)
    std::optional<FrequencyFilter> filter;
    double silhouette = 0.0;
    Partition partition;
};

struct SkippedCell {
    SaxParams sax;
    std::optional<FrequencyFilter> filter;
    std::string reason;
};

enum class Verdict { Correct, Close, Wrong };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// Correct when equal, Close when off by exactly one, Wrong otherwise.
/// Both arguments must be at least 2.
Verdict verdict(int predicted_k, int true_k);

struct SelectionReport {
    std::string dataset;
    Mode mode = Mode::BoW;
    SweepGrid grid;
    std::size_t ensemble_size = 0;
    std::size_t patterns_per_split = 1;
    std::uint64_t seed = 0;
    std::size_t series = 0;
    std::optional<int> true_k;
    std::vector<SweepCell> cells;
    std::vector<SkippedCell> skipped;
    std::size_t best = 0;  // index into cells
    int predicted_k = 0;
    std::optional<Verdict> verdict;

    const SweepCell& best_cell() const { return cells.at(best); }
};

/// True when `a` should win the argmax over `b`: higher silhouette, then
/// smaller k, window, alphabet, word length, and earlier filter.
bool better_cell(const SweepCell& a, const SweepCell& b, std::span<const FrequencyFilter> filters);

/// Clusters the dataset with SPF at every k of every legal grid cell and
/// picks the partition with the largest mean silhouette. Windows longer than
/// the shortest series are skipped with a recorded reason, as are TF-IDF
/// filters that empty the vocabulary. `spf.sax` is ignored; `spf.threads`
/// parallelizes grid cells without changing the report.
SelectionReport run_sweep(const Dataset& ds, const SweepGrid& grid, const SpfParams& spf);

struct VerdictSummary {
    std::size_t correct = 0;
    std::size_t close = 0;
    std::size_t wrong = 0;
    double correct_pct = 0.0;
    double close_pct = 0.0;
    double wrong_pct = 0.0;
};

VerdictSummary summarize(std::span<const Verdict> verdicts);

}  // namespace spfk
