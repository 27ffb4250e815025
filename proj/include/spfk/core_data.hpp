#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spfk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input data (CLI exit status 1).
class IngestError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters or configuration (CLI exit status 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

inline constexpr double kFlatEpsilon = 1e-8;

struct TimeSeries {
    std::string id;
    std::vector<double> values;
    std::optional<int> label;

    std::size_t length() const noexcept { return values.size(); }
};

struct Dataset {
    std::string name;
    std::vector<TimeSeries> series;
    std::optional<int> true_k;

    std::size_t size() const noexcept { return series.size(); }
    std::size_t min_length() const noexcept;
    std::size_t max_length() const noexcept;
    bool equal_lengths() const noexcept { return min_length() == max_length(); }
};

/// Non-owning view of a contiguous window of one series.
struct Subsequence {
    std::string_view source_id;
    std::size_t start = 0;
    std::span<const double> values;
};

/// Recomputes true_k from the labels and validates the dataset invariants.
/// Throws IngestError when n < 2 or the label set is inconsistent.
void finalize_dataset(Dataset& ds);

/// Parses UCR text ("label<delim>v1<delim>v2..."). When `delimiter` is 0 the
/// delimiter is detected per file: tab first, then comma.
Dataset parse_ucr(std::string_view text, std::string name, char delimiter = 0);
Dataset load_ucr(const std::filesystem::path& path, char delimiter = 0);

/// Writes a dataset back in UCR text form using full round-trip precision.
std::string format_ucr(const Dataset& ds, char delimiter = '\t');

/// Zero mean, unit population standard deviation. Windows whose standard
/// deviation does not exceed `epsilon` map to all zeros.
std::vector<double> znormalize(std::span<const double> values, double epsilon = kFlatEpsilon);
void znormalize_into(std::span<const double> values, std::span<double> out,
                     double epsilon = kFlatEpsilon);

std::vector<Subsequence> subsequences(const TimeSeries& series, std::size_t window);

}  // namespace spfk
