#include "spfk/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

namespace spfk {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kLeft = 60;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string open_svg(const std::string& title) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n" +
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + "<text x=\"" + num(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           escape(title) + "</text>\n";
}

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string silhouette_svg(const SelectionReport& report) {
    using Key = std::tuple<std::size_t, std::size_t, int, double, double>;
    std::map<Key, std::vector<std::pair<int, double>>> series;
    for (const auto& c : report.cells) {
        const Key key{c.sax.window, c.sax.word_length, c.sax.alphabet, c.filter ? c.filter->min_freq : -1.0,
                      c.filter ? c.filter->max_freq : -1.0};
        series[key].emplace_back(c.k, c.silhouette);
    }
    const double kmin = report.grid.k_min;
    const double kmax = std::max(report.grid.k_max, report.grid.k_min + 1);
    double lo = -0.1, hi = 0.1;
    for (const auto& c : report.cells) {
        lo = std::min(lo, c.silhouette);
        hi = std::max(hi, c.silhouette);
    }
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double k) { return kLeft + (k - kmin) / (kmax - kmin) * plot_w; };
    auto py = [&](double s) { return kTop + (hi - s) / (hi - lo) * plot_h; };

    std::string svg = open_svg(report.dataset + " (" + std::string(to_string(report.mode)) +
                               "): silhouette vs number of clusters");
    svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(kLeft + plot_w) +
           "\" y2=\"" + num(kTop + plot_h) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
           num(kTop + plot_h) + "\" stroke=\"black\"/>\n";
    for (int k = report.grid.k_min; k <= report.grid.k_max; ++k) {
        svg += "<text x=\"" + num(px(k)) + "\" y=\"" + num(kTop + plot_h + 16) +
               "\" text-anchor=\"middle\">" + std::to_string(k) + "</text>\n";
    }
    for (double s : {lo, 0.0, hi}) {
        svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(s) + 4) + "\" text-anchor=\"end\">" +
               num(s) + "</text>\n";
    }
    svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 10) +
           "\" text-anchor=\"middle\">k</text>\n";
    svg += "</g>\n";

    std::size_t color = 0;
    for (const auto& [key, points] : series) {
        std::string pts;
        for (const auto& [k, s] : points) {
            if (!pts.empty()) pts += ' ';
            pts += num(px(k)) + "," + num(py(s));
        }
        const auto& [window, word, alphabet, fmin, fmax] = key;
        std::string label = "window=" + std::to_string(window) + " word=" + std::to_string(word) +
                            " alphabet=" + std::to_string(alphabet);
        if (fmin >= 0) label += " freq=[" + num(fmin) + "," + num(fmax) + "]";
        svg += "<polyline class=\"combo\" fill=\"none\" stroke-width=\"1\" stroke=\"" +
               std::string(kPalette[color++ % std::size(kPalette)]) + "\" points=\"" + pts + "\"><title>" +
               escape(label) + "</title></polyline>\n";
    }
    const auto& best = report.best_cell();
    svg += "<circle class=\"best\" cx=\"" + num(px(best.k)) + "\" cy=\"" + num(py(best.silhouette)) +
           "\" r=\"6\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"><title>best k=" +
           std::to_string(best.k) + "</title></circle>\n";
    svg += "</svg>\n";
    return svg;
}

std::string comparison_svg(const std::vector<BenchmarkRow>& rows) {
    std::size_t counts[3][3] = {};
    for (const auto& r : rows) {
        for (int m = 0; m < 3; ++m) {
            if (r.verdicts[m]) ++counts[m][static_cast<int>(*r.verdicts[m])];
        }
    }
    std::size_t top = 1;
    for (auto& mode : counts) for (auto c : mode) top = std::max(top, c);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const char* const mode_names[] = {"Raw", "BoW", "TF-IDF"};
    const char* const verdict_colors[] = {"#2ca02c", "#ff7f0e", "#d62728"};
    std::string svg = open_svg("Comparing results");
    svg += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    const double group_w = plot_w / 3.0;
    const double bar_w = group_w / 4.0;
    for (int m = 0; m < 3; ++m) {
        const double gx = kLeft + m * group_w;
        for (int v = 0; v < 3; ++v) {
            const double h = static_cast<double>(counts[m][v]) / static_cast<double>(top) * plot_h;
            const double x = gx + bar_w * (0.5 + v);
            svg += "<rect class=\"bar\" x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h - h) + "\" width=\"" +
                   num(bar_w * 0.9) + "\" height=\"" + num(h) + "\" fill=\"" + verdict_colors[v] +
                   "\"><title>" + mode_names[m] + " " + std::string(to_string(static_cast<Verdict>(v))) +
                   ": " + std::to_string(counts[m][v]) + "</title></rect>\n";
            svg += "<text x=\"" + num(x + bar_w * 0.45) + "\" y=\"" + num(kTop + plot_h - h - 4) +
                   "\" text-anchor=\"middle\">" + std::to_string(counts[m][v]) + "</text>\n";
        }
        svg += "<text x=\"" + num(gx + group_w / 2) + "\" y=\"" + num(kTop + plot_h + 18) +
               "\" text-anchor=\"middle\">" + mode_names[m] + "</text>\n";
    }
    for (int v = 0; v < 3; ++v) {
        const double x = kLeft + 10 + v * 90;
        svg += "<rect x=\"" + num(x) + "\" y=\"" + num(kHeight - 22) + "\" width=\"10\" height=\"10\" fill=\"" +
               verdict_colors[v] + "\"/>\n";
        svg += "<text x=\"" + num(x + 14) + "\" y=\"" + num(kHeight - 13) + "\">" +
               std::string(to_string(static_cast<Verdict>(v))) + "</text>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace spfk
