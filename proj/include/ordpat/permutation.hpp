#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace ordpat {

/// A bijection of [k] in one-line notation: values()[i - 1] is the image of i.
class Permutation {
public:
    Permutation() = default;

    /// Throws InvariantError unless `values` is a bijection of [values.size()].
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int k);

    /// All permutations of [k] in lexicographic order.
    static std::vector<Permutation> all(int k);

    int size() const { return static_cast<int>(_values.size()); }
    bool empty() const { return _values.empty(); }

    /// Image of i, 1-based.
    int operator()(int i) const { return _values[i - 1]; }

    std::span<const int> values() const { return _values; }

    Permutation inverse() const;

    std::string to_string() const;

    auto operator<=>(const Permutation &) const = default;
    bool operator==(const Permutation &) const = default;

private:
    std::vector<int> _values;
};

/// Order-isomorphic relabelling of a sequence of distinct integers onto [k].
Permutation standardize(std::span<const int> values);

} // namespace ordpat
