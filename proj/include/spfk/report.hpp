#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spfk/selection.hpp"

namespace spfk {

/// Canonical report form. Keys are emitted in a fixed order, so equal
/// reports serialize to identical bytes.
std::string report_to_json(const SelectionReport& report);
SelectionReport report_from_json(std::string_view text);

/// Projection onto the result-table column layout of the report's mode:
///   raw:   Dataset,Actual Cluster,Predicted,Remarks
///   bow:   Dataset,SAX Window Size,SAX Alphabet Size,Actual Clusters,Predicted Clusters,Remarks
///   tfidf: as bow with Min Freq,Max Freq after the alphabet column
std::string report_csv_header(Mode mode);
std::string report_csv_row(const SelectionReport& report);

/// Writes via a sibling temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace spfk
