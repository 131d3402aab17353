#include <ordpat/errors.hpp>
#include <ordpat/hypergraph.hpp>

#include <algorithm>
#include <string>

namespace ordpat {

namespace {

void check_vertex_count(int n)
{
    if (n < 0 || n > max_vertices)
        throw InvariantError("vertex count out of range: " + std::to_string(n));
}

} // namespace

void sort_edges(std::vector<VertexSet> & edges)
{
    std::sort(edges.begin(), edges.end(), lex_less);
}

OrderedHypergraph::OrderedHypergraph(int n, std::vector<VertexSet> edges) :
    _n(n),
    _edges(std::move(edges))
{
    check_vertex_count(n);
    const VertexSet all = full_set(n);
    for (VertexSet e : _edges) {
        if (! is_subset(e, all))
            throw InvariantError("edge has a vertex outside [" + std::to_string(n) + "]");
        if (set_size(e) < 2)
            throw InvariantError("edge of size < 2");
    }
    sort_edges(_edges);
    if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
        throw InvariantError("repeated edge");
}

namespace {

std::vector<VertexSet> to_masks(int n, const std::vector<std::vector<int>> & edges)
{
    std::vector<VertexSet> out;
    out.reserve(edges.size());
    for (const auto & e : edges) {
        VertexSet m = 0;
        for (int v : e) {
            if (v < 1 || v > n)
                throw InvariantError("vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
            if (contains_vertex(m, v))
                throw InvariantError("vertex repeated inside an edge");
            m |= vertex_bit(v);
        }
        out.push_back(m);
    }
    return out;
}

} // namespace

OrderedHypergraph::OrderedHypergraph(int n, const std::vector<std::vector<int>> & edges) :
    OrderedHypergraph(n, (check_vertex_count(n), to_masks(n, edges)))
{
}

OrderedHypergraph OrderedHypergraph::from_edges_dedup(int n, std::vector<VertexSet> edges)
{
    sort_edges(edges);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedHypergraph(n, std::move(edges));
}

bool OrderedHypergraph::has_edge(VertexSet e) const
{
    return std::binary_search(_edges.begin(), _edges.end(), e, lex_less);
}

bool OrderedHypergraph::is_graph() const
{
    return std::all_of(_edges.begin(), _edges.end(), [](VertexSet e) { return set_size(e) == 2; });
}

int OrderedHypergraph::degree(int v) const
{
    return static_cast<int>(std::count_if(_edges.begin(), _edges.end(), [v](VertexSet e) { return contains_vertex(e, v); }));
}

int OrderedHypergraph::max_degree() const
{
    int best = 0;
    for (int v = 1; v <= _n; ++v)
        best = std::max(best, degree(v));
    return best;
}

} // namespace ordpat
