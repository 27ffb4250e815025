#include "spfk/datasets.hpp"

#include <cstdlib>

namespace spfk {

namespace fs = std::filesystem;

Split parse_split(std::string_view text) {
    if (text == "train") return Split::Train;
    if (text == "test") return Split::Test;
    if (text == "merge") return Split::Merge;
    throw ConfigError("unknown split '" + std::string(text) + "' (expected train, test or merge)");
}

std::optional<fs::path> data_root_from_env() {
    if (const char* dir = std::getenv("SPFK_DATA_DIR"); dir && *dir) return fs::path(dir);
    return std::nullopt;
}

namespace {

std::optional<fs::path> find_split_file(const std::string& name, const char* suffix,
                                        const std::vector<fs::path>& roots) {
    for (const auto& root : roots) {
        for (const char* ext : {".tsv", ".txt", ".csv", ""}) {
            const std::string file = name + suffix + ext;
            for (const auto& candidate : {root / name / file, root / file}) {
                if (fs::is_regular_file(candidate)) return candidate;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<fs::path> resolve_dataset(std::string_view reference, Split split, std::optional<fs::path> root) {
    const fs::path direct(reference);
    if (fs::is_regular_file(direct)) return {direct};

    std::vector<fs::path> roots;
    if (!root) root = data_root_from_env();
    if (root) roots.push_back(*root);
    roots.emplace_back(".");

    const std::string name(reference);
    std::vector<fs::path> out;
    if (split != Split::Test) {
        if (auto p = find_split_file(name, "_TRAIN", roots)) out.push_back(*p);
    }
    if (split != Split::Train) {
        if (auto p = find_split_file(name, "_TEST", roots)) out.push_back(*p);
    }
    const std::size_t expected = split == Split::Merge ? 2 : 1;
    if (out.size() != expected) return {};
    return out;
}

Dataset load_dataset(std::string_view reference, Split split, std::optional<fs::path> root) {
    const auto paths = resolve_dataset(reference, split, root);
    if (paths.empty()) throw IngestError("dataset '" + std::string(reference) + "' not found");
    Dataset ds = load_ucr(paths.front());
    for (std::size_t i = 1; i < paths.size(); ++i) {
        Dataset extra = load_ucr(paths[i]);
        for (auto& s : extra.series) {
            s.id = std::to_string(ds.series.size());
            ds.series.push_back(std::move(s));
        }
    }
    finalize_dataset(ds);
    return ds;
}

}  // namespace spfk
