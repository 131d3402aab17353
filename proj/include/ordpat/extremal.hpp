#pragma once

#include <ordpat/core.hpp>

#include <optional>
#include <span>
#include <variant>

namespace ordpat {

using MatrixPattern = std::variant<BinaryMatrix, PatternClass>;

struct ExtremalOptions {
    /// Row count; defaults to n.
    std::optional<int> rows;
    /// Require rows == n.
    bool square = false;
    bool distinct_rows = false;
    std::optional<int> max_row_weight;
    int jobs = 1;
    bool force = false;
    /// Row and column counts above this are refused unless forced.
    int bound = 7;
};

struct ExtremalResult {
    int value = 0;
    /// Lexicographically least maximiser, reading rows top to bottom, each left to right.
    BinaryMatrix witness;
};

/// Most 1s in an m x n matrix avoiding every pattern (and meeting the row options).
ExtremalResult extremal_ones(int n, std::span<const MatrixPattern> patterns, const ExtremalOptions & opts = {});

bool avoids_all(const BinaryMatrix & m, std::span<const MatrixPattern> patterns);

struct WeightResult {
    int value = 0;
    OrderedHypergraph witness;
};

/// Largest weight of a hypergraph on [n] avoiding pi; the witness is the lexicographically
/// least maximiser by sorted edge list.
WeightResult max_weight_avoiding(int n, const Permutation & pi, int jobs = 1, bool force = false, int bound = 5);

} // namespace ordpat
