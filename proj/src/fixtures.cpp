#include "spfk/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "spfk/rng.hpp"

namespace spfk {

namespace embedded {
// Generated from data/fixtures/*.csv at configure time.
extern const char* const table_iii;
extern const char* const table_iv;
extern const char* const table_v;
}  // namespace embedded

std::string_view to_string(PaperTable t) {
    switch (t) {
        case PaperTable::III: return "III";
        case PaperTable::IV: return "IV";
        case PaperTable::V: return "V";
    }
    return "?";
}

PaperTable parse_table(std::string_view text) {
    if (text == "III" || text == "3") return PaperTable::III;
    if (text == "IV" || text == "4") return PaperTable::IV;
    if (text == "V" || text == "5") return PaperTable::V;
    throw ConfigError("unknown table '" + std::string(text) + "' (expected III, IV or V)");
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        fields.emplace_back(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return fields;
}

}  // namespace

std::vector<PaperRow> parse_fixture_csv(std::string_view text) {
    std::vector<PaperRow> rows;
    bool header = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 10) throw IngestError("fixture row has " + std::to_string(f.size()) + " fields");
        PaperRow row;
        try {
            row.table = parse_table(f[0]);
            row.dataset = f[1];
            if (!f[2].empty()) row.window = std::stoul(f[2]);
            if (!f[3].empty()) row.alphabet = std::stoi(f[3]);
            if (!f[4].empty()) row.min_freq = std::stod(f[4]);
            if (!f[5].empty()) row.max_freq = std::stod(f[5]);
            row.actual_k = std::stoi(f[6]);
            row.predicted_k = std::stoi(f[7]);
            row.remark = parse_verdict(f[8]);
            if (!f[9].empty()) row.paper_says = std::stoi(f[9]);
        } catch (const std::logic_error&) {
            throw IngestError("malformed fixture row for '" + f[1] + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string_view fixture_csv_text(PaperTable table) {
    switch (table) {
        case PaperTable::III: return embedded::table_iii;
        case PaperTable::IV: return embedded::table_iv;
        case PaperTable::V: return embedded::table_v;
    }
    return {};
}

std::vector<PaperRow> load_fixture(PaperTable table) { return parse_fixture_csv(fixture_csv_text(table)); }

std::string_view to_string(Generator g) {
    switch (g) {
        case Generator::Sine: return "sine";
        case Generator::Square: return "square";
        case Generator::GaussianWalk: return "gaussian-walk";
        case Generator::Mixed: return "mixed";
    }
    return "?";
}

Generator parse_generator(std::string_view text) {
    if (text == "sine") return Generator::Sine;
    if (text == "square") return Generator::Square;
    if (text == "gaussian-walk") return Generator::GaussianWalk;
    if (text == "mixed") return Generator::Mixed;
    throw ConfigError("unknown generator '" + std::string(text) + "'");
}

void SyntheticSpec::validate() const {
    if (classes < 2) throw ConfigError("synthetic spec needs at least 2 classes");
    if (per_class < 2) throw ConfigError("synthetic spec needs at least 2 series per class");
    if (length < 2) throw ConfigError("synthetic series need at least 2 points");
    if (!(noise >= 0.0)) throw ConfigError("noise must be non-negative");
}

namespace {

double gaussian(SplitMix64& rng) {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u = 1.0 - rng.uniform();
    const double v = rng.uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Generator family_of(const SyntheticSpec& spec, std::size_t cls) {
    if (spec.kind != Generator::Mixed) return spec.kind;
    static constexpr Generator cycle[] = {Generator::Sine, Generator::Square, Generator::GaussianWalk};
    return cycle[cls % 3];
}

double cycles_of(const SyntheticSpec& spec, std::size_t cls) {
    return spec.kind == Generator::Mixed ? 2.0 + static_cast<double>(cls / 3) : 1.0 + static_cast<double>(cls);
}

// One period of a Gaussian random walk with its drift removed, so that the
// tiled template has no jump at the period boundary.
std::vector<double> walk_period(std::uint64_t seed, std::size_t cls, std::size_t period) {
    auto rng = SplitMix64::substream(seed, 0x5eedULL + cls);
    std::vector<double> walk(period);
    double level = 0.0;
    for (auto& v : walk) v = (level += gaussian(rng));
    for (std::size_t i = 0; i < period; ++i) {
        walk[i] -= level * static_cast<double>(i + 1) / static_cast<double>(period);
    }
    return znormalize(walk);
}

}  // namespace

Dataset generate_synthetic(const SyntheticSpec& spec) {
    spec.validate();
    Dataset ds;
    ds.name = "synthetic-" + std::string(to_string(spec.kind)) + "-" + std::to_string(spec.seed);
    const std::size_t m = spec.length;
    auto rng = SplitMix64::substream(spec.seed, 0);
    for (std::size_t cls = 0; cls < spec.classes; ++cls) {
        const Generator family = family_of(spec, cls);
        const double cycles = cycles_of(spec, cls);
        std::vector<double> walk;
        if (family == Generator::GaussianWalk) {
            const auto period = static_cast<std::size_t>(std::lround(static_cast<double>(m) / cycles));
            walk = walk_period(spec.seed, cls, std::max<std::size_t>(2, period));
        }
        for (std::size_t r = 0; r < spec.per_class; ++r) {
            TimeSeries ts;
            ts.id = "c" + std::to_string(cls + 1) + "_" + std::to_string(r);
            ts.label = static_cast<int>(cls + 1);
            ts.values.resize(m);
            const double phase = rng.uniform();  // in cycles
            for (std::size_t t = 0; t < m; ++t) {
                const double x = cycles * static_cast<double>(t) / static_cast<double>(m) + phase;
                const double angle = 2.0 * std::numbers::pi * x;
                double v = 0.0;
                switch (family) {
                    case Generator::Sine: v = std::sin(angle); break;
                    case Generator::Square: v = std::sin(angle) >= 0.0 ? 1.0 : -1.0; break;
                    case Generator::GaussianWalk: {
                        const double frac = x - std::floor(x);
                        const auto idx = static_cast<std::size_t>(frac * static_cast<double>(walk.size()));
                        v = walk[std::min(idx, walk.size() - 1)];
                        break;
                    }
                    case Generator::Mixed: break;
                }
                ts.values[t] = v + spec.noise * gaussian(rng);
            }
            ds.series.push_back(std::move(ts));
        }
    }
    finalize_dataset(ds);
    return ds;
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw ConfigError("labelings differ in length");
    std::map<std::pair<int, int>, double> table;
    std::map<int, double> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        table[{a[i], b[i]}] += 1.0;
        rows[a[i]] += 1.0;
        cols[b[i]] += 1.0;
    }
    auto pairs = [](double x) { return x * (x - 1.0) / 2.0; };
    double index = 0.0, sum_rows = 0.0, sum_cols = 0.0;
    for (const auto& [key, count] : table) index += pairs(count);
    for (const auto& [key, count] : rows) sum_rows += pairs(count);
    for (const auto& [key, count] : cols) sum_cols += pairs(count);
    const double total = pairs(static_cast<double>(a.size()));
    const double expected = sum_rows * sum_cols / total;
    const double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) return 1.0;
    return (index - expected) / (maximum - expected);
}

}  // namespace spfk
