#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spfk/corpus.hpp"
#include "spfk/rng.hpp"
#include "spfk/sax.hpp"

namespace spfk {

inline constexpr int kRedrawLimit = 32;
inline constexpr int kExtraDepth = 4;

struct SpfParams {
    SaxParams sax;
    std::size_t ensemble_size = 100;
    std::size_t patterns_per_split = 1;
    std::uint64_t seed = 0;
    // Worker threads for tree growth; 0 = hardware concurrency. Never affects results.
    unsigned threads = 1;
};

/// Boolean word-occurrence table, stored column-major so a split can scan
/// one pattern across the instances of a node.
class PresenceMatrix {
public:
    PresenceMatrix() = default;
    explicit PresenceMatrix(const Corpus& corpus);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t columns() const noexcept { return vocabulary_.size(); }
    const std::vector<SaxWord>& vocabulary() const noexcept { return vocabulary_; }

    bool operator()(std::size_t row, std::size_t column) const noexcept {
        return cells_[column * rows_ + row] != 0;
    }
    std::span<const std::uint8_t> column(std::size_t c) const noexcept {
        return std::span<const std::uint8_t>(cells_).subspan(c * rows_, rows_);
    }

private:
    std::size_t rows_ = 0;
    std::vector<SaxWord> vocabulary_;
    std::vector<std::uint8_t> cells_;
};

/// Requires at least two documents, not all empty.
PresenceMatrix presence_matrix(std::span<const SaxDocument> docs);

struct Partition {
    int k = 0;
    std::vector<int> labels;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Relabels clusters 0, 1, ... in order of first appearance.
Partition canonical_partition(std::span<const int> labels);

/// One random tree: recursive presence/absence splits on randomly drawn
/// vocabulary columns. The leaves are the returned clusters.
Partition grow_tree(const PresenceMatrix& pm, const SpfParams& params, SplitMix64& rng);

/// Ensemble agreement counts: entry (i, j) is the number of trees placing
/// i and j in the same leaf.
class CoAssociation {
public:
    CoAssociation(std::size_t n, std::size_t trees);

    std::size_t size() const noexcept { return n_; }
    std::size_t trees() const noexcept { return trees_; }
    std::uint32_t count(std::size_t i, std::size_t j) const noexcept {
        return i <= j ? counts_[i * n_ + j] : counts_[j * n_ + i];
    }
    double operator()(std::size_t i, std::size_t j) const noexcept {
        return static_cast<double>(count(i, j)) / static_cast<double>(trees_);
    }

    /// Adds one tree's leaf assignment.
    void add(const Partition& leaves);

private:
    std::size_t n_;
    std::size_t trees_;
    std::vector<std::uint32_t> counts_;  // row-major, only i <= j is stored
};

/// Grows `params.ensemble_size` trees on counter-derived RNG substreams and
/// accumulates their co-association.
CoAssociation grow_forest(const PresenceMatrix& pm, const SpfParams& params);

/// Average-linkage merge history over dissimilarity 1 - co-association.
/// Each merge folds cluster `absorbed` into `into`; a cluster is identified
/// by its smallest member index. Linkage comparisons are exact rationals, and
/// ties go to the lexicographically smallest (into, absorbed) pair.
class ConsensusTree {
public:
    struct Merge {
        std::size_t into;
        std::size_t absorbed;
        double dissimilarity;
    };

    explicit ConsensusTree(const CoAssociation& co);

    std::size_t size() const noexcept { return n_; }
    const std::vector<Merge>& merges() const noexcept { return merges_; }

    /// Stops agglomeration at exactly `k` clusters (1 <= k <= n).
    Partition cut(std::size_t k) const;

private:
    std::size_t n_;
    std::vector<Merge> merges_;
};

/// Forest + consensus for every candidate k at once. spf_cluster(docs, k, p)
/// equals SpfModel(docs, p).partition(k).
class SpfModel {
public:
    SpfModel(std::span<const SaxDocument> docs, const SpfParams& params);
    SpfModel(const PresenceMatrix& pm, const SpfParams& params);

    std::size_t size() const noexcept { return tree_.size(); }
    const CoAssociation& co_association() const noexcept { return co_; }
    const ConsensusTree& consensus() const noexcept { return tree_; }
    Partition partition(std::size_t k) const;

private:
    CoAssociation co_;
    ConsensusTree tree_;
};

Partition spf_cluster(std::span<const SaxDocument> docs, std::size_t k, const SpfParams& params);

}  // namespace spfk
