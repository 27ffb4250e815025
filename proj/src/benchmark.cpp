#include "spfk/benchmark.hpp"

namespace spfk {

BenchmarkRow run_benchmark_row(const Dataset& ds, const SweepGrid& base, const SpfParams& spf) {
    BenchmarkRow row;
    row.dataset = ds.name;
    row.actual_k = ds.true_k;
    for (Mode mode : {Mode::Raw, Mode::BoW, Mode::TfIdf}) {
        SweepGrid grid = base;
        grid.mode = mode;
        const auto m = static_cast<int>(mode);
        try {
            const auto report = run_sweep(ds, grid, spf);
            row.predicted[m] = report.predicted_k;
            row.verdicts[m] = report.verdict;
        } catch (const Error& e) {
            if (!row.notes.empty()) row.notes += "; ";
            row.notes += std::string(to_string(mode)) + ": " + e.what();
        }
    }
    return row;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
    std::string out =
        "dataset,actual,predicted_raw,verdict_raw,predicted_bow,verdict_bow,predicted_tfidf,verdict_tfidf\n";
    for (const auto& r : rows) {
        out += r.dataset + ',' + (r.actual_k ? std::to_string(*r.actual_k) : "n/a");
        for (int m = 0; m < 3; ++m) {
            out += ',' + (r.predicted[m] ? std::to_string(*r.predicted[m]) : std::string("n/a"));
            out += ',' + (r.verdicts[m] ? std::string(to_string(*r.verdicts[m])) : std::string("n/a"));
        }
        out += '\n';
    }
    return out;
}

std::size_t correct_count(const std::vector<BenchmarkRow>& rows, Mode mode) {
    std::size_t n = 0;
    for (const auto& r : rows) {
        const auto& v = r.verdicts[static_cast<int>(mode)];
        if (v && *v == Verdict::Correct) ++n;
    }
    return n;
}

}  // namespace spfk
