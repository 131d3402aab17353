#pragma once

#include <ordpat/bits.hpp>

#include <compare>
#include <span>
#include <vector>

namespace ordpat {

/// An ordered hypergraph on [n]: distinct edges, each a vertex set of size at least two.
///
/// Edges are kept sorted lexicographically as increasing vertex lists, so two hypergraphs
/// with the same edge set compare equal and edge index i always refers to the same edge.
/// An ordered graph is the special case where every edge has size two.
class OrderedHypergraph {
public:
    OrderedHypergraph() = default;

    /// Throws InvariantError on an out-of-range vertex, an edge of size < 2, or a repeated edge.
    OrderedHypergraph(int n, std::vector<VertexSet> edges);

    OrderedHypergraph(int n, const std::vector<std::vector<int>> & edges);

    /// Builds from arbitrary edges, dropping duplicates instead of rejecting them.
    static OrderedHypergraph from_edges_dedup(int n, std::vector<VertexSet> edges);

    int vertex_count() const { return _n; }
    int edge_count() const { return static_cast<int>(_edges.size()); }

    std::span<const VertexSet> edges() const { return _edges; }

    /// Edge by 1-based index in the sorted order.
    VertexSet edge(int index) const { return _edges[index - 1]; }

    bool has_edge(VertexSet e) const;

    /// True when every edge has size two.
    bool is_graph() const;

    /// Number of edges containing v.
    int degree(int v) const;

    int max_degree() const;

    auto operator<=>(const OrderedHypergraph &) const = default;
    bool operator==(const OrderedHypergraph &) const = default;

private:
    int _n = 0;
    std::vector<VertexSet> _edges;
};

/// Sorts edges lexicographically; used wherever edge order must be canonical.
void sort_edges(std::vector<VertexSet> & edges);

} // namespace ordpat
