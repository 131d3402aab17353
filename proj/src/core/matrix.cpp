#include <ordpat/errors.hpp>
#include <ordpat/matrix.hpp>

#include <algorithm>
#include <numeric>

namespace ordpat {

namespace {

void check_shape(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        throw InvariantError("negative matrix dimension");
    if (cols > max_vertices)
        throw InvariantError("matrices are limited to 64 columns");
}

} // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols) :
    _rows(rows),
    _cols(cols),
    _data((check_shape(rows, cols), static_cast<std::size_t>(rows)), 0)
{
}

BinaryMatrix::BinaryMatrix(int rows, int cols, std::vector<VertexSet> row_masks) :
    _rows(rows),
    _cols(cols),
    _data(std::move(row_masks))
{
    check_shape(rows, cols);
    if (static_cast<int>(_data.size()) != rows)
        throw InvariantError("row count does not match row masks");
    for (VertexSet r : _data)
        if (! is_subset(r, full_set(cols)))
            throw InvariantError("row mask has bits beyond the column count");
}

BinaryMatrix::BinaryMatrix(const std::vector<std::vector<int>> & entries)
{
    _rows = static_cast<int>(entries.size());
    _cols = entries.empty() ? 0 : static_cast<int>(entries.front().size());
    check_shape(_rows, _cols);
    for (const auto & row : entries) {
        if (static_cast<int>(row.size()) != _cols)
            throw InvariantError("ragged matrix rows");
        VertexSet m = 0;
        for (int j = 0; j < _cols; ++j) {
            if (row[j] != 0 && row[j] != 1)
                throw InvariantError("matrix entries must be 0 or 1");
            if (row[j])
                m |= vertex_bit(j + 1);
        }
        _data.push_back(m);
    }
}

BinaryMatrix BinaryMatrix::identity(int k)
{
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    return permutation_matrix(v);
}

BinaryMatrix BinaryMatrix::permutation_matrix(std::span<const int> values)
{
    const int k = static_cast<int>(values.size());
    std::vector<VertexSet> rows;
    for (int v : values)
        rows.push_back(vertex_bit(v));
    return BinaryMatrix(k, k, std::move(rows));
}

BinaryMatrix BinaryMatrix::all_ones(int rows, int cols)
{
    check_shape(rows, cols);
    return BinaryMatrix(rows, cols, std::vector<VertexSet>(rows, full_set(cols)));
}

VertexSet BinaryMatrix::column_mask(int col) const
{
    VertexSet out = 0;
    for (int i = 1; i <= _rows; ++i)
        if (get(i, col))
            out |= vertex_bit(i);
    return out;
}

int BinaryMatrix::ones() const
{
    int total = 0;
    for (VertexSet r : _data)
        total += set_size(r);
    return total;
}

bool BinaryMatrix::rows_distinct() const
{
    auto sorted = _data;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool BinaryMatrix::is_permutation_matrix() const
{
    if (_rows != _cols)
        return false;
    VertexSet cols_seen = 0;
    for (VertexSet r : _data) {
        if (set_size(r) != 1 || (cols_seen & r))
            return false;
        cols_seen |= r;
    }
    return true;
}

std::vector<std::string> BinaryMatrix::to_strings() const
{
    std::vector<std::string> out;
    for (VertexSet r : _data) {
        std::string s(_cols, '0');
        for (int j = 1; j <= _cols; ++j)
            if (contains_vertex(r, j))
                s[j - 1] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace ordpat
