// spfk: estimate the number of clusters in UCR time-series datasets.
//
//   spfk select --data GunPoint --mode bow --seed 7 --out reports/
//   spfk benchmark --fixture IV --datasets Beef,GunPoint,Wine --out bench/
//   spfk plot-silhouette reports/GunPoint.bow.report.json
//   spfk fixtures --table IV
//   spfk synth --classes 3 --per-class 20 --out synth.tsv
//   spfk fetch --datasets Beef,GunPoint

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "spfk/benchmark.hpp"
#include "spfk/datasets.hpp"
#include "spfk/fixtures.hpp"
#include "spfk/plot.hpp"
#include "spfk/report.hpp"
#include "spfk/selection.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitIngest = 1;
constexpr int kExitConfig = 2;
constexpr const char* kArchiveUrl = "https://www.cs.ucr.edu/~eamonn/time_series_data_2018/";

struct GridOptions {
    std::string mode = "bow";
    std::string protocol = "paper";
    int k_min = 2;
    int k_max = 10;
    std::vector<std::size_t> windows;
    std::vector<int> alphabets;
    std::vector<std::size_t> word_lengths;
    std::vector<double> min_freq;
    std::vector<double> max_freq;
    std::size_t trees = 100;
    std::size_t patterns_per_split = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string split = "train";
    std::string out = ".";
};

void add_grid_options(CLI::App* cmd, GridOptions& o, bool with_mode) {
    if (with_mode) {
        cmd->add_option("--mode", o.mode, "Silhouette feature space: raw, bow or tfidf")
            ->check(CLI::IsMember({"raw", "bow", "tfidf"}));
    }
    cmd->add_option("--protocol", o.protocol,
                    "tfidf only: 'paper' reuses the BoW-optimal SAX parameters, 'full' sweeps all")
        ->check(CLI::IsMember({"paper", "full"}));
    cmd->add_option("--k-min", o.k_min, "Smallest candidate k");
    cmd->add_option("--k-max", o.k_max, "Largest candidate k");
    cmd->add_option("--windows", o.windows, "SAX window lengths")->delimiter(',');
    cmd->add_option("--alphabets", o.alphabets, "SAX alphabet sizes")->delimiter(',');
    cmd->add_option("--word-length", o.word_lengths, "SAX word lengths (PAA segments)")->delimiter(',');
    cmd->add_option("--min-freq", o.min_freq, "TF-IDF minimum document frequencies")->delimiter(',');
    cmd->add_option("--max-freq", o.max_freq, "TF-IDF maximum document frequencies")->delimiter(',');
    cmd->add_option("--trees", o.trees, "SPF ensemble size");
    cmd->add_option("--patterns-per-split", o.patterns_per_split, "Patterns drawn per split (experimental)");
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_option("--threads", o.threads, "Worker threads, 0 = all cores (does not change results)");
    cmd->add_option("--split", o.split, "UCR split: train, test or merge")
        ->check(CLI::IsMember({"train", "test", "merge"}));
    cmd->add_option("--out", o.out, "Output directory");
}

spfk::SweepGrid make_grid(const GridOptions& o, spfk::Mode mode) {
    auto grid = spfk::SweepGrid::defaults(mode);
    grid.protocol = spfk::parse_protocol(o.protocol);
    grid.k_min = o.k_min;
    grid.k_max = o.k_max;
    if (!o.windows.empty()) grid.window_lengths = o.windows;
    if (!o.alphabets.empty()) grid.alphabet_sizes = o.alphabets;
    if (!o.word_lengths.empty()) grid.word_lengths = o.word_lengths;
    if (!o.min_freq.empty() || !o.max_freq.empty()) {
        if (o.min_freq.size() != o.max_freq.size()) {
            throw spfk::ConfigError("--min-freq and --max-freq need the same number of values");
        }
        grid.freq_filters.clear();
        for (std::size_t i = 0; i < o.min_freq.size(); ++i) grid.freq_filters.push_back({o.min_freq[i], o.max_freq[i]});
    }
    grid.validate();
    return grid;
}

spfk::SpfParams make_spf(const GridOptions& o) {
    spfk::SpfParams p;
    p.ensemble_size = o.trees;
    p.patterns_per_split = o.patterns_per_split;
    p.seed = o.seed;
    p.threads = o.threads;
    if (p.ensemble_size == 0) throw spfk::ConfigError("--trees must be at least 1");
    if (p.patterns_per_split == 0) throw spfk::ConfigError("--patterns-per-split must be at least 1");
    return p;
}

void ensure_out_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) throw spfk::ConfigError("output directory '" + dir.string() + "' is not usable");
}

int run_select(const std::vector<std::string>& data, const GridOptions& o, const std::vector<std::string>& formats) {
    const auto mode = spfk::parse_mode(o.mode);
    const auto grid = make_grid(o, mode);
    const auto spf = make_spf(o);
    const auto split = spfk::parse_split(o.split);
    const fs::path out(o.out);
    ensure_out_dir(out);

    for (const auto& reference : data) {
        const auto ds = spfk::load_dataset(reference, split);
        const auto report = spfk::run_sweep(ds, grid, spf);
        std::string last;
        for (const auto& s : report.skipped) {
            std::string line = "warning: " + ds.name + ": skipped window=" + std::to_string(s.sax.window);
            if (s.filter) {
                line += " alphabet=" + std::to_string(s.sax.alphabet) + " freq=[" + std::to_string(s.filter->min_freq) +
                        "," + std::to_string(s.filter->max_freq) + "]";
            }
            line += ": " + s.reason;
            if (line != last) std::cerr << line << "\n";
            last = std::move(line);
        }
        const std::string stem = ds.name + "." + std::string(spfk::to_string(mode));
        for (const auto& f : formats) {
            if (f == "json") {
                spfk::write_file_atomic(out / (stem + ".report.json"), spfk::report_to_json(report));
            } else if (f == "csv") {
                spfk::write_file_atomic(out / (stem + ".report.csv"),
                                        spfk::report_csv_header(mode) + spfk::report_csv_row(report));
            } else if (f == "svg") {
                spfk::write_file_atomic(out / (stem + ".silhouette.svg"), spfk::silhouette_svg(report));
            }
        }
        char sil[32];
        std::snprintf(sil, sizeof sil, "%.6f", report.best_cell().silhouette);
        std::cout << "dataset=" << ds.name << " mode=" << spfk::to_string(mode)
                  << " predicted_k=" << report.predicted_k << " silhouette=" << sil
                  << " verdict=" << (report.verdict ? std::string(spfk::to_string(*report.verdict)) : "n/a")
                  << std::endl;
    }
    return 0;
}

int run_benchmark(const std::string& table_name, std::vector<std::string> datasets, const GridOptions& o) {
    const auto table = spfk::parse_table(table_name);
    const auto base = make_grid(o, spfk::Mode::BoW);
    const auto spf = make_spf(o);
    const auto split = spfk::parse_split(o.split);
    const fs::path out(o.out);
    ensure_out_dir(out);
    if (datasets.empty()) {
        for (const auto& row : spfk::load_fixture(table)) datasets.push_back(row.dataset);
    }

    std::vector<spfk::BenchmarkRow> rows;
    for (const auto& name : datasets) {
        if (spfk::resolve_dataset(name, split).empty()) {
            std::cerr << "warning: dataset '" << name << "' not found, skipped\n";
            continue;
        }
        const auto ds = spfk::load_dataset(name, split);
        auto row = spfk::run_benchmark_row(ds, base, spf);
        if (!row.notes.empty()) std::cerr << "warning: " << name << ": " << row.notes << "\n";
        std::cout << "dataset=" << row.dataset;
        for (auto mode : {spfk::Mode::Raw, spfk::Mode::BoW, spfk::Mode::TfIdf}) {
            const auto m = static_cast<int>(mode);
            std::cout << " " << spfk::to_string(mode) << "="
                      << (row.predicted[m] ? std::to_string(*row.predicted[m]) : "n/a");
        }
        std::cout << std::endl;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        std::cerr << "error: none of the requested datasets is available locally"
                  << " (set SPFK_DATA_DIR to the UCR archive root)\n";
        return kExitIngest;
    }
    const std::string stem = "benchmark." + std::string(spfk::to_string(table));
    spfk::write_file_atomic(out / (stem + ".csv"), spfk::benchmark_csv(rows));
    spfk::write_file_atomic(out / (stem + ".svg"), spfk::comparison_svg(rows));
    for (auto mode : {spfk::Mode::Raw, spfk::Mode::BoW, spfk::Mode::TfIdf}) {
        std::cout << "correct_" << spfk::to_string(mode) << "=" << spfk::correct_count(rows, mode) << "/"
                  << rows.size() << "\n";
    }
    return 0;
}

int run_plot(const std::string& report_path, const std::string& output) {
    std::string text;
    try {
        text = spfk::read_file(report_path);
    } catch (const spfk::IngestError& e) {
        throw spfk::ConfigError(e.what());
    }
    const auto report = spfk::report_from_json(text);
    fs::path target = output.empty() ? fs::path(report_path) : fs::path(output);
    if (output.empty()) target.replace_extension(".svg");
    spfk::write_file_atomic(target, spfk::silhouette_svg(report));
    std::cout << target.string() << std::endl;
    return 0;
}

int run_fixtures(const std::string& table_name) {
    const auto table = spfk::parse_table(table_name);
    std::cout << spfk::fixture_csv_text(table);
    const auto rows = spfk::load_fixture(table);
    std::vector<spfk::Verdict> verdicts;
    for (const auto& r : rows) verdicts.push_back(spfk::verdict(r.predicted_k, r.actual_k));
    const auto s = spfk::summarize(verdicts);
    std::printf("# correct=%.1f%% close=%.1f%% wrong=%.1f%%\n", s.correct_pct, s.close_pct, s.wrong_pct);
    return 0;
}

std::string sha256_hex(const fs::path& path) {
    const std::string content = spfk::read_file(path);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(content.data(), content.size(), digest, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

int run_fetch(const std::vector<std::string>& datasets, const std::vector<std::string>& checksums,
              const std::string& split_name) {
    std::cout << "UCR archive: " << kArchiveUrl << "\n"
              << "Unpack it and point SPFK_DATA_DIR at the directory holding <Name>/<Name>_TRAIN.tsv.\n";
    const auto split = spfk::parse_split(split_name);
    int status = 0;
    for (std::size_t i = 0; i < datasets.size(); ++i) {
        const auto paths = spfk::resolve_dataset(datasets[i], split);
        if (paths.empty()) {
            std::cout << datasets[i] << ": missing\n";
            status = kExitIngest;
            continue;
        }
        for (const auto& p : paths) {
            const auto digest = sha256_hex(p);
            std::cout << datasets[i] << ": " << p.string() << " sha256=" << digest;
            if (i < checksums.size() && !checksums[i].empty()) {
                const bool ok = digest == checksums[i];
                std::cout << (ok ? " ok" : " MISMATCH");
                if (!ok) status = kExitIngest;
            }
            std::cout << "\n";
        }
    }
    return status;
}

int run_synth(const spfk::SyntheticSpec& spec, const std::string& generator, const std::string& out) {
    auto s = spec;
    s.kind = spfk::parse_generator(generator);
    const auto ds = spfk::generate_synthetic(s);
    const auto text = spfk::format_ucr(ds);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        spfk::write_file_atomic(out, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Estimate the number of clusters in time-series datasets with Symbolic Pattern Forest"};
    app.require_subcommand(1);

    GridOptions select_opts;
    std::vector<std::string> data;
    std::vector<std::string> formats{"json", "csv"};
    auto* select = app.add_subcommand("select", "Sweep k and SAX parameters, report the silhouette-optimal k");
    select->add_option("--data", data, "Dataset files or UCR names (resolved under SPFK_DATA_DIR)")
        ->required()
        ->delimiter(',');
    select->add_option("--format", formats, "Report formats: json, csv, svg")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    add_grid_options(select, select_opts, true);

    GridOptions bench_opts;
    std::string table = "IV";
    std::vector<std::string> bench_datasets;
    auto* bench = app.add_subcommand("benchmark", "Compare raw, BoW and TF-IDF pipelines over fixture datasets");
    bench->add_option("--fixture", table, "Result table whose dataset list is used: III, IV or V");
    bench->add_option("--datasets", bench_datasets, "Restrict to these datasets")->delimiter(',');
    bench->add_option("--data", bench_datasets, "Alias of --datasets")->delimiter(',');
    add_grid_options(bench, bench_opts, false);

    std::string report_path, plot_out;
    auto* plot = app.add_subcommand("plot-silhouette", "Render a report as a silhouette-vs-k SVG chart");
    plot->add_option("report", report_path, "Report JSON file")->required();
    plot->add_option("-o,--output", plot_out, "SVG path (default: report path with .svg)");

    std::string fixture_table = "III";
    auto* fixtures = app.add_subcommand("fixtures", "Print a transcribed result table and its summary");
    fixtures->add_option("--table", fixture_table, "III, IV or V");

    spfk::SyntheticSpec synth_spec;
    std::string generator = "mixed", synth_out;
    auto* synth = app.add_subcommand("synth", "Write a synthetic labeled dataset in UCR format");
    synth->add_option("--generator", generator, "sine, square, gaussian-walk or mixed");
    synth->add_option("--classes", synth_spec.classes, "Number of classes");
    synth->add_option("--per-class", synth_spec.per_class, "Series per class");
    synth->add_option("--length", synth_spec.length, "Series length");
    synth->add_option("--noise", synth_spec.noise, "Gaussian noise standard deviation");
    synth->add_option("--seed", synth_spec.seed, "Random seed");
    synth->add_option("--out", synth_out, "Output file (default: stdout)");

    std::vector<std::string> fetch_datasets, fetch_sums;
    std::string fetch_split = "train";
    auto* fetch = app.add_subcommand("fetch", "Print the archive URL and verify local dataset files");
    fetch->add_option("--datasets", fetch_datasets, "Dataset names")->delimiter(',');
    fetch->add_option("--sha256", fetch_sums, "Expected checksums, one per dataset")->delimiter(',');
    fetch->add_option("--split", fetch_split, "train, test or merge");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*select) return run_select(data, select_opts, formats);
        if (*bench) return run_benchmark(table, bench_datasets, bench_opts);
        if (*plot) return run_plot(report_path, plot_out);
        if (*fixtures) return run_fixtures(fixture_table);
        if (*synth) return run_synth(synth_spec, generator, synth_out);
        if (*fetch) return run_fetch(fetch_datasets, fetch_sums, fetch_split);
    } catch (const spfk::IngestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIngest;
    } catch (const spfk::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIngest;
    }
    return 0;
}
