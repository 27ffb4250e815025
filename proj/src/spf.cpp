#include "spfk/spf.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "spfk/parallel.hpp"

namespace spfk {

PresenceMatrix::PresenceMatrix(const Corpus& corpus)
    : rows_(corpus.documents()), vocabulary_(corpus.vocabulary.words) {
    cells_.assign(rows_ * vocabulary_.size(), 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& tc : corpus.rows[r]) cells_[tc.term * rows_ + r] = 1;
    }
}

PresenceMatrix presence_matrix(std::span<const SaxDocument> docs) {
    if (docs.size() < 2) throw ConfigError("presence matrix needs at least 2 documents");
    return PresenceMatrix(build_corpus(docs));
}

Partition canonical_partition(std::span<const int> labels) {
    Partition out;
    out.labels.resize(labels.size());
    std::unordered_map<int, int> renamed;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto [it, inserted] = renamed.try_emplace(labels[i], static_cast<int>(renamed.size()));
        out.labels[i] = it->second;
    }
    out.k = static_cast<int>(renamed.size());
    return out;
}

namespace {

struct Node {
    std::vector<std::uint32_t> members;
    std::size_t depth;
};

std::size_t depth_limit(std::size_t n) {
    const auto ceil_log2 = static_cast<std::size_t>(std::bit_width(n - 1));
    return ceil_log2 + kExtraDepth;
}

// Number of members holding the pattern; a column separates iff 0 < count < size.
std::size_t present_count(std::span<const std::uint8_t> column, const std::vector<std::uint32_t>& members) {
    std::size_t hits = 0;
    for (auto m : members) hits += column[m];
    return hits;
}

}  // namespace

Partition grow_tree(const PresenceMatrix& pm, const SpfParams& params, SplitMix64& rng) {
    const std::size_t n = pm.rows();
    if (n < 2) throw ConfigError("a tree needs at least 2 instances");
    const std::size_t vocab = pm.columns();
    const std::size_t per_split = std::max<std::size_t>(1, std::min(params.patterns_per_split, vocab));
    const std::size_t max_depth = depth_limit(n);

    std::vector<int> leaf_of(n, -1);
    int leaves = 0;
    std::vector<Node> stack;
    {
        Node root{std::vector<std::uint32_t>(n), 0};
        for (std::uint32_t i = 0; i < n; ++i) root.members[i] = i;
        stack.push_back(std::move(root));
    }
    std::vector<std::size_t> drawn;
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        std::size_t split_column = vocab;
        if (node.members.size() >= 2 && node.depth < max_depth) {
            for (int attempt = 0; attempt < kRedrawLimit && split_column == vocab; ++attempt) {
                drawn.clear();
                while (drawn.size() < per_split) {
                    const auto c = static_cast<std::size_t>(rng.below(vocab));
                    if (std::find(drawn.begin(), drawn.end(), c) == drawn.end()) drawn.push_back(c);
                }
                for (auto c : drawn) {
                    const auto hits = present_count(pm.column(c), node.members);
                    if (hits > 0 && hits < node.members.size()) {
                        split_column = c;
                        break;
                    }
                }
            }
        }

        if (split_column == vocab) {
            for (auto m : node.members) leaf_of[m] = leaves;
            ++leaves;
            continue;
        }

        const auto column = pm.column(split_column);
        Node present{{}, node.depth + 1};
        Node absent{{}, node.depth + 1};
        for (auto m : node.members) (column[m] ? present : absent).members.push_back(m);
        // LIFO: the present branch is expanded first.
        stack.push_back(std::move(absent));
        stack.push_back(std::move(present));
    }
    return canonical_partition(leaf_of);
}

CoAssociation::CoAssociation(std::size_t n, std::size_t trees)
    : n_(n), trees_(trees), counts_(n * n, 0) {}

void CoAssociation::add(const Partition& leaves) {
    // Members ascend within each group, so the increments walk each row forward.
    std::vector<std::uint32_t> start(static_cast<std::size_t>(leaves.k) + 1, 0);
    for (int label : leaves.labels) ++start[static_cast<std::size_t>(label) + 1];
    for (std::size_t g = 1; g < start.size(); ++g) start[g] += start[g - 1];
    std::vector<std::uint32_t> members(leaves.labels.size());
    auto fill = start;
    for (std::size_t i = 0; i < leaves.labels.size(); ++i) {
        members[fill[static_cast<std::size_t>(leaves.labels[i])]++] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t g = 0; g + 1 < start.size(); ++g) {
        for (std::uint32_t a = start[g]; a < start[g + 1]; ++a) {
            std::uint32_t* row = &counts_[members[a] * n_];
            ++row[members[a]];
            for (std::uint32_t b = a + 1; b < start[g + 1]; ++b) ++row[members[b]];
        }
    }
}

CoAssociation grow_forest(const PresenceMatrix& pm, const SpfParams& params) {
    if (params.ensemble_size == 0) throw ConfigError("ensemble size must be at least 1");
    std::vector<Partition> trees(params.ensemble_size);
    parallel_for(trees.size(), params.threads, [&](std::size_t t) {
        auto rng = SplitMix64::substream(params.seed, t);
        trees[t] = grow_tree(pm, params, rng);
    });
    CoAssociation co(pm.rows(), params.ensemble_size);
    for (const auto& t : trees) co.add(t);
    return co;
}

namespace {

// Average-linkage similarity of two clusters as the exact ratio
// sum_of_counts / (|A| * |B|).
struct Linkage {
    std::int64_t sum = 0;
    std::int64_t pairs = 1;
};

// a > b as rationals.
bool greater(const Linkage& a, const Linkage& b) {
    return static_cast<__int128>(a.sum) * b.pairs > static_cast<__int128>(b.sum) * a.pairs;
}

template <class Sum>
std::vector<ConsensusTree::Merge> agglomerate(const CoAssociation& co) {
    const std::size_t n = co.size();
    std::vector<ConsensusTree::Merge> merges;
    if (n == 0) return merges;
    std::vector<Sum> sums(n * n);
    // Only the upper triangle is read or written: slot pair (a, b) with a < b.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) sums[i * n + j] = co.count(i, j);
    }
    std::vector<std::int64_t> sizes(n, 1);
    // Ordered list of active slots keeps scans proportional to live clusters.
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> nn(n, none);
    std::vector<Linkage> best(n);

    auto link = [&](std::size_t a, std::size_t b) {
        return Linkage{static_cast<std::int64_t>(sums[a * n + b]), sizes[a] * sizes[b]};
    };
    // Best partner among larger live slots; ties keep the smallest index.
    auto refresh = [&](std::size_t pos) {
        const std::size_t i = live[pos];
        nn[i] = none;
        for (std::size_t q = pos + 1; q < live.size(); ++q) {
            const std::size_t j = live[q];
            const Linkage l = link(i, j);
            if (nn[i] == none || greater(l, best[i])) {
                nn[i] = j;
                best[i] = l;
            }
        }
    };
    for (std::size_t p = 0; p < live.size(); ++p) refresh(p);

    merges.reserve(n - 1);
    const double trees = static_cast<double>(co.trees());
    while (live.size() > 1) {
        std::size_t ipos = none;
        for (std::size_t p = 0; p + 1 < live.size(); ++p) {
            const std::size_t s = live[p];
            if (ipos == none || greater(best[s], best[live[ipos]])) ipos = p;
        }
        const std::size_t i = live[ipos];
        const std::size_t j = nn[i];
        const Linkage joined = best[i];
        merges.push_back({i, j,
                           1.0 - static_cast<double>(joined.sum) /
                                     (static_cast<double>(joined.pairs) * trees)});

        for (std::size_t k : live) {
            if (k == i || k == j) continue;
            Sum& ik = k < i ? sums[k * n + i] : sums[i * n + k];
            ik += k < j ? sums[k * n + j] : sums[j * n + k];
        }
        sizes[i] += sizes[j];
        const auto jpos = static_cast<std::size_t>(
            std::lower_bound(live.begin(), live.end(), j) - live.begin());
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(jpos));

        for (std::size_t p = 0; p < live.size(); ++p) {
            const std::size_t k = live[p];
            if (k == i) {
                refresh(p);
            } else if (k < i) {
                if (nn[k] == i || nn[k] == j) {
                    refresh(p);
                } else {
                    const Linkage l = link(k, i);
                    if (greater(l, best[k]) || (!greater(best[k], l) && i < nn[k])) {
                        nn[k] = i;
                        best[k] = l;
                    }
                }
            } else if (k < j) {
                if (nn[k] == j) refresh(p);
            } else {
                break;
            }
        }
    }
    return merges;
}

}  // namespace

ConsensusTree::ConsensusTree(const CoAssociation& co) : n_(co.size()) {
    // Narrow sums halve the memory traffic of the column updates whenever the
    // largest possible cluster-pair sum, trees * (n / 2)^2, fits.
    const auto half = static_cast<std::uint64_t>(n_ / 2 + 1);
    if (static_cast<std::uint64_t>(co.trees()) * half * half < std::numeric_limits<std::uint32_t>::max()) {
        merges_ = agglomerate<std::uint32_t>(co);
    } else {
        merges_ = agglomerate<std::int64_t>(co);
    }
}

Partition ConsensusTree::cut(std::size_t k) const {
    if (k < 1 || k > n_) throw ConfigError("cluster count out of range");
    std::vector<std::size_t> parent(n_);
    for (std::size_t i = 0; i < n_; ++i) parent[i] = i;
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t m = 0; m < n_ - k; ++m) {
        parent[root(merges_[m].absorbed)] = root(merges_[m].into);
    }
    std::vector<int> labels(n_);
    for (std::size_t i = 0; i < n_; ++i) labels[i] = static_cast<int>(root(i));
    return canonical_partition(labels);
}

SpfModel::SpfModel(std::span<const SaxDocument> docs, const SpfParams& params)
    : SpfModel(presence_matrix(docs), params) {}

SpfModel::SpfModel(const PresenceMatrix& pm, const SpfParams& params)
    : co_(grow_forest(pm, params)), tree_(co_) {}

Partition SpfModel::partition(std::size_t k) const {
    if (k < 2) throw ConfigError("k must be at least 2");
    if (k > size()) throw ConfigError("k exceeds the number of series");
    return tree_.cut(k);
}

Partition spf_cluster(std::span<const SaxDocument> docs, std::size_t k, const SpfParams& params) {
    if (k < 2) throw ConfigError("k must be at least 2");
    if (k > docs.size()) throw ConfigError("k exceeds the number of series");
    return SpfModel(docs, params).partition(k);
}

}  // namespace spfk
