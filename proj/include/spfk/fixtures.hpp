#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spfk/core_data.hpp"
#include "spfk/selection.hpp"

namespace spfk {

/// Published result tables: III = silhouette on raw series, IV = on BoW
/// vectors, V = on TF-IDF vectors.
enum class PaperTable { III, IV, V };

std::string_view to_string(PaperTable t);
PaperTable parse_table(std::string_view text);

struct PaperRow {
    PaperTable table = PaperTable::III;
    std::string dataset;
    std::optional<std::size_t> window;
    std::optional<int> alphabet;
    std::optional<double> min_freq;
    std::optional<double> max_freq;
    int actual_k = 0;
    int predicted_k = 0;
    Verdict remark = Verdict::Wrong;
    // Printed value when the stored alphabet corrects an evident typo.
    std::optional<int> paper_says;
};

/// Parses the fixture CSV schema
/// `table,dataset,window,alphabet,min_freq,max_freq,actual,predicted,remarks,paper_says`.
std::vector<PaperRow> parse_fixture_csv(std::string_view text);
/// The 30 transcribed rows of one table (compiled into the library).
std::vector<PaperRow> load_fixture(PaperTable table);
std::string_view fixture_csv_text(PaperTable table);

enum class Generator { Sine, Square, GaussianWalk, Mixed };

std::string_view to_string(Generator g);
Generator parse_generator(std::string_view text);

struct SyntheticSpec {
    // Mixed cycles the class templates through sine, square and Gaussian
    // walk, two periods per series for the first three classes and one more
    // period for each further round. Single kinds use cls + 1 periods.
    Generator kind = Generator::Mixed;
    std::size_t classes = 3;
    std::size_t per_class = 20;
    std::size_t length = 128;
    double noise = 0.1;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Labeled dataset of classes * per_class series, class-major order, labels
/// 1..classes. Each series is its periodic class template (the walk kind
/// tiles one drift-free random-walk period) at a uniform random phase, plus
/// i.i.d. Gaussian noise of standard deviation `noise`.
Dataset generate_synthetic(const SyntheticSpec& spec);

/// Adjusted Rand index between two labelings of the same items.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace spfk
