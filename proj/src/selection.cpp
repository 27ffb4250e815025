#include "spfk/selection.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "spfk/parallel.hpp"
#include "spfk/validity.hpp"

namespace spfk {

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::Raw: return "raw";
        case Mode::BoW: return "bow";
        case Mode::TfIdf: return "tfidf";
    }
    return "?";
}

Mode parse_mode(std::string_view text) {
    if (text == "raw") return Mode::Raw;
    if (text == "bow") return Mode::BoW;
    if (text == "tfidf") return Mode::TfIdf;
    throw ConfigError("unknown mode '" + std::string(text) + "' (expected raw, bow or tfidf)");
}

std::string_view to_string(Protocol protocol) {
    return protocol == Protocol::Paper ? "paper" : "full";
}

Protocol parse_protocol(std::string_view text) {
    if (text == "paper") return Protocol::Paper;
    if (text == "full") return Protocol::Full;
    throw ConfigError("unknown protocol '" + std::string(text) + "' (expected paper or full)");
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Correct: return "Correct";
        case Verdict::Close: return "Close";
        case Verdict::Wrong: return "Wrong";
    }
    return "?";
}

Verdict parse_verdict(std::string_view text) {
    if (text == "Correct") return Verdict::Correct;
    if (text == "Close") return Verdict::Close;
    if (text == "Wrong") return Verdict::Wrong;
    throw ConfigError("unknown verdict '" + std::string(text) + "'");
}

Verdict verdict(int predicted_k, int true_k) {
    if (predicted_k < 2 || true_k < 2) throw ConfigError("verdict needs cluster counts of at least 2");
    const int diff = std::abs(predicted_k - true_k);
    if (diff == 0) return Verdict::Correct;
    if (diff == 1) return Verdict::Close;
    return Verdict::Wrong;
}

VerdictSummary summarize(std::span<const Verdict> verdicts) {
    if (verdicts.empty()) throw ConfigError("cannot summarize an empty verdict list");
    VerdictSummary s;
    for (auto v : verdicts) {
        switch (v) {
            case Verdict::Correct: ++s.correct; break;
            case Verdict::Close: ++s.close; break;
            case Verdict::Wrong: ++s.wrong; break;
        }
    }
    const auto total = static_cast<double>(verdicts.size());
    s.correct_pct = 100.0 * static_cast<double>(s.correct) / total;
    s.close_pct = 100.0 * static_cast<double>(s.close) / total;
    s.wrong_pct = 100.0 * static_cast<double>(s.wrong) / total;
    return s;
}

SweepGrid SweepGrid::defaults(Mode mode) {
    SweepGrid g;
    g.mode = mode;
    g.window_lengths = {3, 5, 8, 10, 12, 20, 30, 40, 50, 100, 200, 350};
    g.alphabet_sizes = {3, 4, 5, 6, 8, 9, 10, 20};
    g.word_lengths = {5};
    g.freq_filters = {{0.001, 0.99}, {0.01, 0.9}, {0.01, 0.99}, {0.1, 0.9}};
    return g;
}

void SweepGrid::validate() const {
    if (k_min < 2) throw ConfigError("k_min must be at least 2");
    if (k_max < k_min) throw ConfigError("k_max must not be below k_min");
    if (window_lengths.empty()) throw ConfigError("no window lengths in grid");
    if (alphabet_sizes.empty()) throw ConfigError("no alphabet sizes in grid");
    if (word_lengths.empty()) throw ConfigError("no word lengths in grid");
    for (auto w : window_lengths) {
        if (w == 0) throw ConfigError("window lengths must be positive");
    }
    for (auto w : word_lengths) {
        if (w == 0) throw ConfigError("word lengths must be positive");
    }
    for (int a : alphabet_sizes) {
        if (a < kMinAlphabet || a > kMaxAlphabet) {
            throw ConfigError("alphabet sizes must lie in [2, 26], got " + std::to_string(a));
        }
    }
    if (mode == Mode::TfIdf) {
        if (freq_filters.empty()) throw ConfigError("TF-IDF mode needs at least one frequency filter");
        for (const auto& f : freq_filters) f.validate();
    }
}

bool better_cell(const SweepCell& a, const SweepCell& b, std::span<const FrequencyFilter> filters) {
    if (a.silhouette != b.silhouette) return a.silhouette > b.silhouette;
    auto filter_rank = [&](const SweepCell& c) -> std::size_t {
        if (!c.filter) return 0;
        return static_cast<std::size_t>(std::find(filters.begin(), filters.end(), *c.filter) - filters.begin());
    };
    return std::tuple(a.k, a.sax.window, a.sax.alphabet, a.sax.word_length, filter_rank(a)) <
           std::tuple(b.k, b.sax.window, b.sax.alphabet, b.sax.word_length, filter_rank(b));
}

namespace {

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct FrameJob {
    std::size_t window;
    std::size_t word_length;
};

struct JobResult {
    std::vector<SweepCell> cells;
    std::vector<SkippedCell> skipped;
};

std::vector<std::vector<double>> normalized_series(const Dataset& ds) {
    std::vector<std::vector<double>> rows;
    rows.reserve(ds.size());
    for (const auto& s : ds.series) rows.push_back(znormalize(s.values));
    return rows;
}

void score_partitions(const SpfModel& model, const DistanceMatrix& dm, const SaxParams& sax,
                      const std::optional<FrequencyFilter>& filter, const SweepGrid& grid,
                      std::vector<SweepCell>& out) {
    for (int k = grid.k_min; k <= grid.k_max; ++k) {
        SweepCell cell;
        cell.k = k;
        cell.sax = sax;
        cell.filter = filter;
        cell.partition = model.partition(static_cast<std::size_t>(k));
        cell.silhouette = silhouette(dm, cell.partition).mean;
        out.push_back(std::move(cell));
    }
}

JobResult run_frame_job(const Dataset& ds, const FrameJob& job, const SweepGrid& grid,
                        const std::vector<int>& alphabets, const SpfParams& spf,
                        const DistanceMatrix* raw_distances) {
    JobResult result;
    std::vector<PaaFrames> frames;
    frames.reserve(ds.size());
    for (const auto& s : ds.series) frames.push_back(paa_frames(s, job.window, job.word_length));

    for (int alphabet : alphabets) {
        const SaxParams sax{job.window, job.word_length, alphabet};
        std::vector<SaxDocument> docs;
        docs.reserve(frames.size());
        for (const auto& f : frames) docs.push_back(quantize(f, alphabet));
        const Corpus corpus = build_corpus(docs);

        SpfParams params = spf;
        params.sax = sax;
        params.threads = 1;
        const SpfModel model(PresenceMatrix(corpus), params);

        switch (grid.mode) {
            case Mode::Raw:
                score_partitions(model, *raw_distances, sax, std::nullopt, grid, result.cells);
                break;
            case Mode::BoW:
                score_partitions(model, euclidean_distances(bow_matrix(corpus)), sax, std::nullopt,
                                 grid, result.cells);
                break;
            case Mode::TfIdf:
                for (const auto& filter : grid.freq_filters) {
                    FeatureMatrix fm;
                    try {
                        fm = tfidf_matrix(corpus, filter);
                    } catch (const ConfigError& e) {
                        result.skipped.push_back({sax, filter, e.what()});
                        continue;
                    }
                    score_partitions(model, euclidean_distances(fm), sax, filter, grid, result.cells);
                }
                break;
        }
    }
    return result;
}

}  // namespace

SelectionReport run_sweep(const Dataset& ds, const SweepGrid& grid_in, const SpfParams& spf) {
    SweepGrid grid = grid_in;
    grid.validate();
    grid.window_lengths = sorted_unique(grid.window_lengths);
    grid.alphabet_sizes = sorted_unique(grid.alphabet_sizes);
    grid.word_lengths = sorted_unique(grid.word_lengths);

    if (ds.size() < 2) throw IngestError("dataset needs at least 2 series");
    if (static_cast<std::size_t>(grid.k_max) > ds.size()) {
        throw ConfigError("k_max (" + std::to_string(grid.k_max) + ") exceeds the number of series (" +
                          std::to_string(ds.size()) + ")");
    }
    if (grid.mode == Mode::Raw && !ds.equal_lengths()) {
        throw IngestError("raw mode requires equal lengths");
    }

    SelectionReport report;
    report.dataset = ds.name;
    report.mode = grid.mode;
    report.grid = grid;
    report.ensemble_size = spf.ensemble_size;
    report.patterns_per_split = spf.patterns_per_split;
    report.seed = spf.seed;
    report.series = ds.size();
    report.true_k = ds.true_k;

    std::vector<FrameJob> jobs;
    std::vector<int> alphabets = grid.alphabet_sizes;
    if (grid.mode == Mode::TfIdf && grid.protocol == Protocol::Paper) {
        SweepGrid bow_grid = grid;
        bow_grid.mode = Mode::BoW;
        const auto bow = run_sweep(ds, bow_grid, spf);
        report.skipped = bow.skipped;
        const auto& sax = bow.best_cell().sax;
        jobs.push_back({sax.window, sax.word_length});
        alphabets = {sax.alphabet};
    } else {
        const std::size_t shortest = ds.min_length();
        for (auto word_length : grid.word_lengths) {
            for (auto window : grid.window_lengths) {
                if (window > shortest) {
                    for (int a : grid.alphabet_sizes) {
                        report.skipped.push_back({{window, std::min(word_length, window), a},
                                                  std::nullopt,
                                                  "window exceeds shortest series length"});
                    }
                    continue;
                }
                const FrameJob job{window, std::min(word_length, window)};
                const bool duplicate = std::any_of(jobs.begin(), jobs.end(), [&](const FrameJob& j) {
                    return j.window == job.window && j.word_length == job.word_length;
                });
                if (!duplicate) jobs.push_back(job);
            }
        }
        // Grid order: window, then word length, then alphabet.
        std::stable_sort(jobs.begin(), jobs.end(), [](const FrameJob& a, const FrameJob& b) {
            return std::tie(a.window, a.word_length) < std::tie(b.window, b.word_length);
        });
    }
    if (jobs.empty()) throw ConfigError("no legal grid cell: every window exceeds the shortest series");

    DistanceMatrix raw_distances;
    if (grid.mode == Mode::Raw) {
        const auto rows = normalized_series(ds);
        raw_distances = euclidean_distances(rows, spf.threads);
    }

    std::vector<JobResult> results(jobs.size());
    parallel_for(jobs.size(), spf.threads, [&](std::size_t j) {
        results[j] = run_frame_job(ds, jobs[j], grid, alphabets, spf, &raw_distances);
    });
    for (auto& r : results) {
        std::move(r.cells.begin(), r.cells.end(), std::back_inserter(report.cells));
        std::move(r.skipped.begin(), r.skipped.end(), std::back_inserter(report.skipped));
    }
    if (report.cells.empty()) throw ConfigError("every grid cell was skipped");

    for (std::size_t c = 1; c < report.cells.size(); ++c) {
        if (better_cell(report.cells[c], report.cells[report.best], grid.freq_filters)) report.best = c;
    }
    report.predicted_k = report.best_cell().k;
    if (report.true_k && *report.true_k >= 2) report.verdict = verdict(report.predicted_k, *report.true_k);
    return report;
}

}  // namespace spfk
