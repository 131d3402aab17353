#pragma once

#include <ordpat/bits.hpp>

#include <compare>
#include <span>
#include <vector>

namespace ordpat {

/// A set partition of [n]. Blocks are stored in order of their least element.
class Partition {
public:
    Partition() = default;

    /// Throws InvariantError unless the blocks are non-empty, disjoint and cover [n].
    Partition(int n, std::vector<VertexSet> blocks);

    Partition(int n, const std::vector<std::vector<int>> & blocks);

    /// From a restricted growth string: labels[i] is the 0-based block of element i + 1.
    static Partition from_labels(std::span<const int> labels);

    int ground_size() const { return _n; }
    int block_count() const { return static_cast<int>(_blocks.size()); }
    std::span<const VertexSet> blocks() const { return _blocks; }

    /// Restricted growth string of this partition.
    std::vector<int> labels() const;

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

private:
    int _n = 0;
    std::vector<VertexSet> _blocks;
};

} // namespace ordpat
