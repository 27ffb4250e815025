#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spfk/selection.hpp"

namespace spfk {

/// Per-dataset outcome of the raw, BoW and TF-IDF pipelines.
struct BenchmarkRow {
    std::string dataset;
    std::optional<int> actual_k;
    std::optional<int> predicted[3];  // indexed by Mode; empty when the pipeline could not run
    std::optional<Verdict> verdicts[3];
    std::string notes;
};

/// Runs all three modes on one dataset. `base` supplies everything but the
/// mode. A mode the dataset cannot support (raw on varying lengths) is
/// recorded in `notes` and left empty.
BenchmarkRow run_benchmark_row(const Dataset& ds, const SweepGrid& base, const SpfParams& spf);

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

/// Correct verdicts of one mode across rows.
std::size_t correct_count(const std::vector<BenchmarkRow>& rows, Mode mode);

}  // namespace spfk
