#include "spfk/core_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace spfk {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

char detect_delimiter(std::string_view text) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    if (line.find('\t') != std::string_view::npos) return '\t';
    if (line.find(',') != std::string_view::npos) return ',';
    return ' ';
}

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    if (delimiter == ' ') {
        std::size_t pos = 0;
        while (pos < line.size()) {
            const auto begin = line.find_first_not_of(" \t", pos);
            if (begin == std::string_view::npos) break;
            auto end = line.find_first_of(" \t", begin);
            if (end == std::string_view::npos) end = line.size();
            fields.push_back(line.substr(begin, end - begin));
            pos = end;
        }
        return fields;
    }
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(delimiter, pos);
        fields.push_back(trim(line.substr(pos, next == std::string_view::npos ? line.npos : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    while (!fields.empty() && fields.back().empty()) fields.pop_back();
    return fields;
}

double parse_number(std::string_view token, std::size_t row) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw IngestError("row " + std::to_string(row) + ": non-numeric token '" +
                          std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw IngestError("row " + std::to_string(row) + ": non-finite value '" +
                          std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::size_t Dataset::min_length() const noexcept {
    std::size_t best = series.empty() ? 0 : series.front().length();
    for (const auto& s : series) best = std::min(best, s.length());
    return best;
}

std::size_t Dataset::max_length() const noexcept {
    std::size_t best = 0;
    for (const auto& s : series) best = std::max(best, s.length());
    return best;
}

void finalize_dataset(Dataset& ds) {
    if (ds.series.empty()) throw IngestError("no series");
    if (ds.series.size() < 2) throw IngestError("dataset needs at least 2 series");
    std::set<int> labels;
    bool all_labeled = true;
    for (const auto& s : ds.series) {
        if (s.values.size() < 2) throw IngestError("series '" + s.id + "' has fewer than 2 values");
        if (s.label) labels.insert(*s.label);
        else all_labeled = false;
    }
    ds.true_k.reset();
    // A single label value carries no clustering ground truth.
    if (all_labeled && labels.size() >= 2) ds.true_k = static_cast<int>(labels.size());
}

Dataset parse_ucr(std::string_view text, std::string name, char delimiter) {
    if (delimiter == 0) delimiter = detect_delimiter(text);
    Dataset ds;
    ds.name = std::move(name);
    std::size_t row = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty()) continue;

        const auto fields = split_fields(line, delimiter);
        if (fields.size() < 3) {
            throw IngestError("row " + std::to_string(row) + ": fewer than 2 values");
        }
        const double raw_label = parse_number(fields.front(), row);
        const double rounded = std::round(raw_label);
        if (std::abs(raw_label - rounded) > 1e-9) {
            throw IngestError("row " + std::to_string(row) + ": label is not an integer");
        }

        TimeSeries ts;
        ts.id = std::to_string(row);
        ts.label = static_cast<int>(rounded);
        ts.values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i].empty()) {
                throw IngestError("row " + std::to_string(row) + ": empty field");
            }
            ts.values.push_back(parse_number(fields[i], row));
        }
        ds.series.push_back(std::move(ts));
        ++row;
    }
    finalize_dataset(ds);
    return ds;
}

Dataset load_ucr(const std::filesystem::path& path, char delimiter) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto name = path.stem().string();
    for (const char* suffix : {"_TRAIN", "_TEST"}) {
        const std::string_view sv(suffix);
        if (name.size() > sv.size() && name.ends_with(sv)) {
            name.resize(name.size() - sv.size());
            break;
        }
    }
    return parse_ucr(buffer.str(), std::move(name), delimiter);
}

std::string format_ucr(const Dataset& ds, char delimiter) {
    std::string out;
    char buf[64];
    for (const auto& s : ds.series) {
        out += std::to_string(s.label.value_or(0));
        for (double v : s.values) {
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
            out += delimiter;
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

void znormalize_into(std::span<const double> values, std::span<double> out, double epsilon) {
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double residual = 0.0;
    for (double v : values) residual += v - mean;
    mean += residual / n;
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / n);
    if (!(sd > epsilon)) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - mean) / sd;
}

std::vector<double> znormalize(std::span<const double> values, double epsilon) {
    std::vector<double> out(values.size());
    if (!values.empty()) znormalize_into(values, out, epsilon);
    return out;
}

std::vector<Subsequence> subsequences(const TimeSeries& series, std::size_t window) {
    const std::size_t m = series.length();
    if (window == 0) throw ConfigError("window length must be positive");
    if (window > m) throw ConfigError("window exceeds series length");
    std::vector<Subsequence> out;
    out.reserve(m - window + 1);
    const std::span<const double> all(series.values);
    for (std::size_t start = 0; start + window <= m; ++start) {
        out.push_back({series.id, start, all.subspan(start, window)});
    }
    return out;
}

}  // namespace spfk
