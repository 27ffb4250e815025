#include "spfk/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spfk {

using ojson = nlohmann::ordered_json;

namespace {

ojson cell_json(const SweepCell& c, Mode mode) {
    ojson j;
    j["k"] = c.k;
    j["window"] = c.sax.window;
    j["alphabet"] = c.sax.alphabet;
    j["word_length"] = c.sax.word_length;
    if (mode == Mode::TfIdf && c.filter) {
        j["min_freq"] = c.filter->min_freq;
        j["max_freq"] = c.filter->max_freq;
    }
    j["silhouette"] = c.silhouette;
    j["labels"] = c.partition.labels;
    return j;
}

SweepCell cell_from_json(const ojson& j) {
    SweepCell c;
    c.k = j.at("k").get<int>();
    c.sax.window = j.at("window").get<std::size_t>();
    c.sax.alphabet = j.at("alphabet").get<int>();
    c.sax.word_length = j.at("word_length").get<std::size_t>();
    if (j.contains("min_freq")) {
        c.filter = FrequencyFilter{j.at("min_freq").get<double>(), j.at("max_freq").get<double>()};
    }
    c.silhouette = j.at("silhouette").get<double>();
    c.partition.labels = j.at("labels").get<std::vector<int>>();
    c.partition.k = c.k;
    return c;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

std::string report_to_json(const SelectionReport& r) {
    ojson j;
    j["dataset"] = r.dataset;
    j["mode"] = std::string(to_string(r.mode));
    j["protocol"] = std::string(to_string(r.grid.protocol));
    ojson grid;
    grid["k_min"] = r.grid.k_min;
    grid["k_max"] = r.grid.k_max;
    grid["windows"] = r.grid.window_lengths;
    grid["alphabets"] = r.grid.alphabet_sizes;
    grid["word_lengths"] = r.grid.word_lengths;
    ojson filters = ojson::array();
    if (r.mode == Mode::TfIdf) {
        for (const auto& f : r.grid.freq_filters) filters.push_back({f.min_freq, f.max_freq});
    }
    grid["freq_filters"] = filters;
    j["grid"] = grid;
    j["spf"] = {{"trees", r.ensemble_size}, {"patterns_per_split", r.patterns_per_split}, {"seed", r.seed}};
    j["series"] = r.series;
    j["true_k"] = r.true_k ? ojson(*r.true_k) : ojson(nullptr);

    ojson cells = ojson::array();
    for (const auto& c : r.cells) cells.push_back(cell_json(c, r.mode));
    j["cells"] = std::move(cells);
    ojson skipped = ojson::array();
    for (const auto& s : r.skipped) {
        ojson e;
        e["window"] = s.sax.window;
        e["alphabet"] = s.sax.alphabet;
        e["word_length"] = s.sax.word_length;
        if (s.filter) {
            e["min_freq"] = s.filter->min_freq;
            e["max_freq"] = s.filter->max_freq;
        }
        e["reason"] = s.reason;
        skipped.push_back(std::move(e));
    }
    j["skipped"] = std::move(skipped);
    ojson best = cell_json(r.best_cell(), r.mode);
    best["index"] = r.best;
    j["best"] = std::move(best);
    j["predicted_k"] = r.predicted_k;
    j["verdict"] = r.verdict ? ojson(std::string(to_string(*r.verdict))) : ojson(nullptr);
    return j.dump(1) + "\n";
}

SelectionReport report_from_json(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
        SelectionReport r;
        r.dataset = j.at("dataset").get<std::string>();
        r.mode = parse_mode(j.at("mode").get<std::string>());
        const auto& g = j.at("grid");
        r.grid.mode = r.mode;
        r.grid.protocol = parse_protocol(j.at("protocol").get<std::string>());
        r.grid.k_min = g.at("k_min").get<int>();
        r.grid.k_max = g.at("k_max").get<int>();
        r.grid.window_lengths = g.at("windows").get<std::vector<std::size_t>>();
        r.grid.alphabet_sizes = g.at("alphabets").get<std::vector<int>>();
        r.grid.word_lengths = g.at("word_lengths").get<std::vector<std::size_t>>();
        r.grid.freq_filters.clear();
        for (const auto& f : g.at("freq_filters")) {
            r.grid.freq_filters.push_back({f.at(0).get<double>(), f.at(1).get<double>()});
        }
        const auto& spf = j.at("spf");
        r.ensemble_size = spf.at("trees").get<std::size_t>();
        r.patterns_per_split = spf.at("patterns_per_split").get<std::size_t>();
        r.seed = spf.at("seed").get<std::uint64_t>();
        r.series = j.at("series").get<std::size_t>();
        if (!j.at("true_k").is_null()) r.true_k = j.at("true_k").get<int>();
        for (const auto& c : j.at("cells")) r.cells.push_back(cell_from_json(c));
        for (const auto& s : j.at("skipped")) {
            SkippedCell sc;
            sc.sax.window = s.at("window").get<std::size_t>();
            sc.sax.alphabet = s.at("alphabet").get<int>();
            sc.sax.word_length = s.at("word_length").get<std::size_t>();
            if (s.contains("min_freq")) {
                sc.filter = FrequencyFilter{s.at("min_freq").get<double>(), s.at("max_freq").get<double>()};
            }
            sc.reason = s.at("reason").get<std::string>();
            r.skipped.push_back(std::move(sc));
        }
        r.best = j.at("best").at("index").get<std::size_t>();
        if (r.best >= r.cells.size()) throw ConfigError("best index out of range");
        r.predicted_k = j.at("predicted_k").get<int>();
        if (!j.at("verdict").is_null()) r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
}

std::string report_csv_header(Mode mode) {
    switch (mode) {
        case Mode::Raw: return "Dataset,Actual Cluster,Predicted,Remarks\n";
        case Mode::BoW:
            return "Dataset,SAX Window Size,SAX Alphabet Size,Actual Clusters,Predicted Clusters,Remarks\n";
        case Mode::TfIdf:
            return "Dataset,SAX Window Size,SAX Alphabet Size,Min Freq,Max Freq,Actual Clusters,"
                   "Predicted Clusters,Remarks\n";
    }
    return {};
}

std::string report_csv_row(const SelectionReport& r) {
    const auto& best = r.best_cell();
    std::string row = r.dataset;
    if (r.mode != Mode::Raw) {
        row += ',' + std::to_string(best.sax.window) + ',' + std::to_string(best.sax.alphabet);
    }
    if (r.mode == Mode::TfIdf) {
        row += ',' + (best.filter ? format_double(best.filter->min_freq) : std::string());
        row += ',' + (best.filter ? format_double(best.filter->max_freq) : std::string());
    }
    row += ',' + (r.true_k ? std::to_string(*r.true_k) : std::string("n/a"));
    row += ',' + std::to_string(r.predicted_k);
    row += ',' + (r.verdict ? std::string(to_string(*r.verdict)) : std::string("n/a"));
    row += '\n';
    return row;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace spfk
