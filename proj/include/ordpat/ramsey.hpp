#pragma once

#include <ordpat/core.hpp>

#include <optional>
#include <vector>

namespace ordpat {

/// Clique / complete bipartite, or independent / empty bipartite.
enum class Homogeneity { complete, empty };

struct HomogeneousSet {
    Homogeneity kind;
    std::vector<int> vertices;
};

/// The lexicographically least l-set inducing a clique or an independent set (clique first on
/// a tie). Graphs above `max_vertices_searched` are refused.
std::optional<HomogeneousSet> ramsey_find(const OrderedHypergraph & g, int l, int max_vertices_searched = 20);

struct HomogeneousPair {
    Homogeneity kind;
    std::vector<int> left;
    std::vector<int> right;
};

/// l vertices of part_a and l of part_b with all pairs adjacent or none adjacent.
std::optional<HomogeneousPair> bipartite_ramsey_find(const OrderedHypergraph & g, const std::vector<int> & part_a,
    const std::vector<int> & part_b, int l, int max_vertices_searched = 20);

/// Smallest n with every graph on [n] holding a clique or independent set of size l, by
/// exhaustive search. Refuses when the search would pass `max_n`.
int ramsey_number(int l, int max_n = 7);

/// Smallest n with every bipartite graph with parts 2l - 1 and n holding K_{l,l} or E_{l,l}.
int bipartite_ramsey_number(int l, int max_n = 8);

} // namespace ordpat
