#include <ordpat/pattern_class.hpp>

namespace ordpat {

BinaryMatrix PatternClass::canonical_matrix() const
{
    const int n = k();
    std::vector<VertexSet> rows;
    for (int i = 1; i <= n; ++i)
        rows.push_back(vertex_bit(i) | vertex_bit(_m_perm(i) + n));
    return BinaryMatrix(n, 2 * n, std::move(rows));
}

BinaryMatrix PatternClass::permutation_matrix() const
{
    return BinaryMatrix::permutation_matrix(_m_perm.values());
}

} // namespace ordpat
