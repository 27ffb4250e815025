#pragma once

#include <string>
#include <vector>

#include "spfk/benchmark.hpp"
#include "spfk/selection.hpp"

namespace spfk {

/// One polyline of mean silhouette against k per parameter combination,
/// with the selected cell marked by a circle (class "best").
std::string silhouette_svg(const SelectionReport& report);

/// Grouped bars: Correct / Close / Wrong counts for each pipeline.
std::string comparison_svg(const std::vector<BenchmarkRow>& rows);

}  // namespace spfk
