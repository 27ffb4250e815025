#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spfk/core_data.hpp"

namespace spfk {

enum class Split { Train, Test, Merge };

Split parse_split(std::string_view text);

/// Candidate files for a dataset reference. A reference that names an
/// existing file is used as is; otherwise it is treated as a UCR dataset
/// name looked up as <root>/<Name>/<Name>_<SPLIT>.{tsv,txt,csv} and
/// <root>/<Name>_<SPLIT>.{tsv,txt,csv}. `root` defaults to $SPFK_DATA_DIR.
std::vector<std::filesystem::path> resolve_dataset(std::string_view reference, Split split,
                                                   std::optional<std::filesystem::path> root = std::nullopt);

/// Resolves and loads; Merge concatenates train then test. Throws
/// IngestError when no file is found.
Dataset load_dataset(std::string_view reference, Split split,
                     std::optional<std::filesystem::path> root = std::nullopt);

std::optional<std::filesystem::path> data_root_from_env();

}  // namespace spfk
