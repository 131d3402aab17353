#pragma once

#include <ordpat/bits.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ordpat {

/// A dense m x n (0,1)-matrix, each row a bit mask over at most 64 columns.
/// Row and column indices are 1-based; column j of a row mask is bit j - 1.
class BinaryMatrix {
public:
    BinaryMatrix() = default;

    /// All-zero m x n matrix.
    BinaryMatrix(int rows, int cols);

    BinaryMatrix(int rows, int cols, std::vector<VertexSet> row_masks);

    /// From nested 0/1 values; every row must have the same length.
    explicit BinaryMatrix(const std::vector<std::vector<int>> & entries);

    static BinaryMatrix identity(int k);

    /// k x k permutation matrix with row i carrying its 1 in column values(i).
    static BinaryMatrix permutation_matrix(std::span<const int> values);

    static BinaryMatrix all_ones(int rows, int cols);

    int rows() const { return _rows; }
    int cols() const { return _cols; }

    bool get(int row, int col) const { return contains_vertex(_data[row - 1], col); }

    VertexSet row_mask(int row) const { return _data[row - 1]; }
    std::span<const VertexSet> row_masks() const { return _data; }

    VertexSet column_mask(int col) const;

    int ones() const;

    bool rows_distinct() const;

    bool is_permutation_matrix() const;

    /// Rows as "1010"-style strings.
    std::vector<std::string> to_strings() const;

    auto operator<=>(const BinaryMatrix &) const = default;
    bool operator==(const BinaryMatrix &) const = default;

private:
    int _rows = 0;
    int _cols = 0;
    std::vector<VertexSet> _data;
};

} // namespace ordpat
