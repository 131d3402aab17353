#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ordpat {

/// Vertex (or column) subset of [1, 64]; vertex v lives in bit v - 1.
using VertexSet = std::uint64_t;

inline constexpr int max_vertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains_vertex(VertexSet s, int v) { return (s >> (v - 1)) & 1U; }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Lowest vertex of a non-empty set.
constexpr int min_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

/// Highest vertex of a non-empty set.
constexpr int max_vertex(VertexSet s) { return 64 - std::countl_zero(s); }

constexpr VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

std::vector<int> set_to_list(VertexSet s);

VertexSet list_to_set(const std::vector<int> & vertices);

/// Lexicographic order on the increasing vertex lists of two sets; a proper prefix sorts first.
bool lex_less(VertexSet a, VertexSet b);

/// Relabels the members of `s` that lie in `u` onto [|u|] preserving order.
VertexSet relabel_onto(VertexSet s, VertexSet u);

/// Inverse of relabel_onto: maps a subset of [|u|] back into u.
VertexSet expand_from(VertexSet s, VertexSet u);

/// Visits every k-subset of [n] in lexicographic order of increasing lists. Stops when fn returns true.
template <typename Fn>
bool for_each_combination(int n, int k, Fn && fn)
{
    if (k < 0 || k > n)
        return false;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i)
        c[i] = i + 1;
    while (true) {
        if (fn(static_cast<const std::vector<int> &>(c)))
            return true;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1)
            --i;
        if (i < 0)
            return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

/// As for_each_combination, passing each subset as a mask.
template <typename Fn>
bool for_each_combination_mask(int n, int k, Fn && fn)
{
    return for_each_combination(n, k, [&](const std::vector<int> & c) { return fn(list_to_set(c)); });
}

} // namespace ordpat
