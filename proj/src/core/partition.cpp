#include <ordpat/errors.hpp>
#include <ordpat/partition.hpp>

#include <algorithm>
#include <string>

namespace ordpat {

Partition::Partition(int n, std::vector<VertexSet> blocks) :
    _n(n),
    _blocks(std::move(blocks))
{
    if (n < 0 || n > max_vertices)
        throw InvariantError("ground set size out of range: " + std::to_string(n));
    VertexSet seen = 0;
    for (VertexSet b : _blocks) {
        if (b == 0)
            throw InvariantError("empty block");
        if (seen & b)
            throw InvariantError("blocks overlap");
        seen |= b;
    }
    if (seen != full_set(n))
        throw InvariantError("blocks do not cover [" + std::to_string(n) + "]");
    std::sort(_blocks.begin(), _blocks.end(), [](VertexSet a, VertexSet b) { return min_vertex(a) < min_vertex(b); });
}

namespace {

std::vector<VertexSet> block_masks(int n, const std::vector<std::vector<int>> & blocks)
{
    std::vector<VertexSet> out;
    for (const auto & b : blocks) {
        VertexSet m = 0;
        for (int v : b) {
            if (v < 1 || v > n)
                throw InvariantError("element " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
            if (contains_vertex(m, v))
                throw InvariantError("element repeated inside a block");
            m |= vertex_bit(v);
        }
        out.push_back(m);
    }
    return out;
}

} // namespace

Partition::Partition(int n, const std::vector<std::vector<int>> & blocks) :
    Partition(n, block_masks(n, blocks))
{
}

Partition Partition::from_labels(std::span<const int> labels)
{
    std::vector<VertexSet> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int b = labels[i];
        if (b < 0 || b > static_cast<int>(blocks.size()))
            throw InvariantError("not a restricted growth string");
        if (b == static_cast<int>(blocks.size()))
            blocks.push_back(0);
        blocks[b] |= vertex_bit(static_cast<int>(i) + 1);
    }
    return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

std::vector<int> Partition::labels() const
{
    std::vector<int> out(_n);
    for (std::size_t b = 0; b < _blocks.size(); ++b)
        for (int v : set_to_list(_blocks[b]))
            out[v - 1] = static_cast<int>(b);
    return out;
}

} // namespace ordpat
